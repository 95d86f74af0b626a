//! Semiring constructions: the unital extension U(S) and its action on S,
//! the one-point collapse U(G) on an abelian group, zero- and constant-
//! multiplication semirings, direct products, the endomorphism semiring T_S
//! generated by {id, φ_w}, and exact arithmetic in the quasicyclic group
//! Z_{p^∞}.
//!
//! U(S) and Z_{p^∞} are infinite, so they are exposed as element-level
//! operations rather than tables; finite truncations are materialized only
//! for axiom spot-checks.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::finite::enumerate::SemigroupTable;
use crate::finite::{FiniteSemiring, TableError};

// ---------------------------------------------------------------------------
// Basic builders

/// The Boolean semiring ({0,1}, OR, AND).
pub fn boolean() -> FiniteSemiring {
    FiniteSemiring::from_tables(
        alloc::vec!["0".into(), "1".into()],
        &[alloc::vec![0, 1], alloc::vec![1, 1]],
        &[alloc::vec![0, 0], alloc::vec![0, 1]],
    )
    .expect("boolean tables are well-formed")
}

/// The ring Z_n as a semiring (a ring is a semiring; nothing here assumes
/// neutral elements, they are simply present).
pub fn ring_zn(n: u64) -> FiniteSemiring {
    assert!(n >= 1 && n <= FiniteSemiring::MAX_ORDER as u64);
    let labels = (0..n).map(|v| format!("{v}")).collect();
    let mut add = Vec::new();
    let mut mul = Vec::new();
    for i in 0..n {
        add.push((0..n).map(|j| ((i + j) % n) as usize).collect::<Vec<_>>());
        mul.push((0..n).map(|j| ((i * j) % n) as usize).collect::<Vec<_>>());
    }
    FiniteSemiring::from_tables(labels, &add, &mul).expect("Z_n tables are well-formed")
}

// ---------------------------------------------------------------------------
// Abelian groups

/// A finite abelian group given by its operation table.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AbelianGroup {
    labels: Vec<String>,
    n: usize,
    table: Vec<u16>,
    identity: usize,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum GroupError {
    Table(TableError),
    NotCommutative { a: usize, b: usize },
    NotAssociative { a: usize, b: usize, c: usize },
    NoIdentity,
    NoInverse { a: usize },
}

impl fmt::Display for GroupError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupError::Table(e) => write!(f, "{e}"),
            GroupError::NotCommutative { a, b } => write!(f, "{a}∘{b} != {b}∘{a}"),
            GroupError::NotAssociative { a, b, c } => {
                write!(f, "({a}∘{b})∘{c} != {a}∘({b}∘{c})")
            }
            GroupError::NoIdentity => write!(f, "no identity element"),
            GroupError::NoInverse { a } => write!(f, "{a} has no inverse"),
        }
    }
}

impl AbelianGroup {
    pub fn from_table(labels: Vec<String>, rows: &[Vec<usize>]) -> Result<Self, GroupError> {
        let n = labels.len();
        if n == 0 {
            return Err(GroupError::Table(TableError::Empty));
        }
        if rows.len() != n || rows.iter().any(|r| r.len() != n) {
            return Err(GroupError::Table(TableError::BadShape { table: "group" }));
        }
        let mut table = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            for (j, &e) in row.iter().enumerate() {
                if e >= n {
                    return Err(GroupError::Table(TableError::EntryOutOfRange {
                        table: "group",
                        row: i,
                        col: j,
                        entry: e,
                    }));
                }
                table.push(e as u16);
            }
        }
        let op = |a: usize, b: usize| table[a * n + b] as usize;
        for a in 0..n {
            for b in 0..n {
                if op(a, b) != op(b, a) {
                    return Err(GroupError::NotCommutative { a, b });
                }
                for c in 0..n {
                    if op(op(a, b), c) != op(a, op(b, c)) {
                        return Err(GroupError::NotAssociative { a, b, c });
                    }
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| op(e, x) == x))
            .ok_or(GroupError::NoIdentity)?;
        for a in 0..n {
            if !(0..n).any(|b| op(a, b) == identity) {
                return Err(GroupError::NoInverse { a });
            }
        }
        Ok(AbelianGroup {
            labels,
            n,
            table,
            identity,
        })
    }

    /// The cyclic group Z_n.
    pub fn cyclic(n: u64) -> Self {
        assert!(n >= 1);
        let labels = (0..n).map(|v| format!("{v}")).collect();
        let mut table = Vec::with_capacity((n * n) as usize);
        for i in 0..n {
            for j in 0..n {
                table.push(((i + j) % n) as u16);
            }
        }
        AbelianGroup {
            labels,
            n: n as usize,
            table,
            identity: 0,
        }
    }

    pub fn direct_product(&self, other: &AbelianGroup) -> AbelianGroup {
        let n = self.n * other.n;
        let mut labels = Vec::with_capacity(n);
        for a in 0..self.n {
            for b in 0..other.n {
                labels.push(format!("({},{})", self.labels[a], other.labels[b]));
            }
        }
        let idx = |a: usize, b: usize| a * other.n + b;
        let mut table = Vec::with_capacity(n * n);
        for a1 in 0..self.n {
            for b1 in 0..other.n {
                for a2 in 0..self.n {
                    for b2 in 0..other.n {
                        table.push(idx(self.op(a1, a2), other.op(b1, b2)) as u16);
                    }
                }
            }
        }
        AbelianGroup {
            labels,
            n,
            table,
            identity: idx(self.identity, other.identity),
        }
    }

    pub fn op(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b] as usize
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }
}

// ---------------------------------------------------------------------------
// Zero- and constant-multiplication semirings, products

/// The zero-multiplication ring on an abelian group: addition is the group,
/// every product is the group identity.
pub fn zero_mult_semiring(g: &AbelianGroup) -> FiniteSemiring {
    let n = g.order();
    let add: Vec<Vec<usize>> = (0..n)
        .map(|a| (0..n).map(|b| g.op(a, b)).collect())
        .collect();
    let zero_row: Vec<usize> = alloc::vec![g.identity(); n];
    let mul: Vec<Vec<usize>> = alloc::vec![zero_row; n];
    FiniteSemiring::from_tables(g.labels().to_vec(), &add, &mul)
        .expect("zero-mult tables are well-formed")
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ConstMultError {
    Table(TableError),
    NotIdempotent { e: usize },
}

impl fmt::Display for ConstMultError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConstMultError::Table(e) => write!(f, "{e}"),
            ConstMultError::NotIdempotent { e } => {
                write!(f, "constant {e} is not additively idempotent")
            }
        }
    }
}

/// Constant multiplication `a·b = e` over a commutative semigroup; `e` must
/// be additively idempotent or distributivity fails.
pub fn const_mult_semiring(
    m: &SemigroupTable,
    labels: Vec<String>,
    e: usize,
) -> Result<FiniteSemiring, ConstMultError> {
    let n = m.order();
    assert_eq!(labels.len(), n);
    assert!(e < n);
    if m.op(e, e) != e {
        return Err(ConstMultError::NotIdempotent { e });
    }
    let add: Vec<Vec<usize>> = (0..n)
        .map(|a| (0..n).map(|b| m.op(a, b)).collect())
        .collect();
    let e_row: Vec<usize> = alloc::vec![e; n];
    let mul: Vec<Vec<usize>> = alloc::vec![e_row; n];
    FiniteSemiring::from_tables(labels, &add, &mul).map_err(ConstMultError::Table)
}

/// Direct product with component-wise tables.
pub fn product(a: &FiniteSemiring, b: &FiniteSemiring) -> Result<FiniteSemiring, TableError> {
    let n = a.order() * b.order();
    if n > FiniteSemiring::MAX_ORDER {
        return Err(TableError::TooLarge {
            n,
            max: FiniteSemiring::MAX_ORDER,
        });
    }
    let idx = |x: usize, y: usize| x * b.order() + y;
    let mut labels = Vec::with_capacity(n);
    for x in 0..a.order() {
        for y in 0..b.order() {
            labels.push(format!("({},{})", a.label(x), b.label(y)));
        }
    }
    let mut add = Vec::with_capacity(n);
    let mut mul = Vec::with_capacity(n);
    for x1 in 0..a.order() {
        for y1 in 0..b.order() {
            let mut arow = Vec::with_capacity(n);
            let mut mrow = Vec::with_capacity(n);
            for x2 in 0..a.order() {
                for y2 in 0..b.order() {
                    arow.push(idx(a.add(x1, x2), b.add(y1, y2)));
                    mrow.push(idx(a.mul(x1, x2), b.mul(y1, y2)));
                }
            }
            add.push(arow);
            mul.push(mrow);
        }
    }
    FiniteSemiring::from_tables(labels, &add, &mul)
}

// ---------------------------------------------------------------------------
// The unital extension U(S)

/// Second component of a U(S) element: an element of S or the adjoined
/// additive-neutral / multiplicative-absorbing marker o.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum SOrO {
    O,
    Elem(usize),
}

/// An element `(n, a)` of U(S) = ℕ₀ × (S ∪ {o}) ∖ {(0, o)}, with `(1, o)`
/// the multiplicative unit.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct UElement {
    pub scalar: BigUint,
    pub part: SOrO,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct UElementInvalid;

impl fmt::Display for UElementInvalid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(0, o) is not an element of U(S)")
    }
}

impl UElement {
    pub fn new(scalar: BigUint, part: SOrO) -> Result<Self, UElementInvalid> {
        if scalar.is_zero() && part == SOrO::O {
            return Err(UElementInvalid);
        }
        Ok(UElement { scalar, part })
    }

    /// The unit (1, o).
    pub fn one() -> Self {
        UElement {
            scalar: BigUint::one(),
            part: SOrO::O,
        }
    }

    /// Embedding of S: a ↦ (0, a).
    pub fn embed(a: usize) -> Self {
        UElement {
            scalar: BigUint::zero(),
            part: SOrO::Elem(a),
        }
    }
}

/// `m·a` inside S ∪ {o}, where `0·a = o` (the empty sum).
fn scalar_part(s: &FiniteSemiring, m: &BigUint, a: SOrO) -> SOrO {
    if m.is_zero() {
        return SOrO::O;
    }
    match a {
        SOrO::O => SOrO::O,
        SOrO::Elem(x) => SOrO::Elem(s.scalar_mul_big(m, x)),
    }
}

/// Addition in S ∪ {o}: o is neutral.
fn part_add(s: &FiniteSemiring, a: SOrO, b: SOrO) -> SOrO {
    match (a, b) {
        (SOrO::O, x) | (x, SOrO::O) => x,
        (SOrO::Elem(x), SOrO::Elem(y)) => SOrO::Elem(s.add(x, y)),
    }
}

/// Multiplication in S ∪ {o}: o absorbs.
fn part_mul(s: &FiniteSemiring, a: SOrO, b: SOrO) -> SOrO {
    match (a, b) {
        (SOrO::O, _) | (_, SOrO::O) => SOrO::O,
        (SOrO::Elem(x), SOrO::Elem(y)) => SOrO::Elem(s.mul(x, y)),
    }
}

/// `(n,a) + (m,b) = (n+m, a+b)`.
pub fn u_add(s: &FiniteSemiring, x: &UElement, y: &UElement) -> UElement {
    let scalar = &x.scalar + &y.scalar;
    let part = part_add(s, x.part, y.part);
    UElement::new(scalar, part).expect("sum cannot be (0,o)")
}

/// `(n,a)(m,b) = (nm, ma + nb + ab)`.
pub fn u_mul(s: &FiniteSemiring, x: &UElement, y: &UElement) -> UElement {
    let scalar = &x.scalar * &y.scalar;
    let ma = scalar_part(s, &y.scalar, x.part);
    let nb = scalar_part(s, &x.scalar, y.part);
    let ab = part_mul(s, x.part, y.part);
    let part = part_add(s, part_add(s, ma, nb), ab);
    UElement::new(scalar, part).expect("product cannot be (0,o)")
}

/// The action of U(S) on S: `(n,a)x = nx + ax`, `(n,o)x = nx`, `(0,a)x = ax`.
pub fn u_act(s: &FiniteSemiring, x: &UElement, el: usize) -> usize {
    let nx = if x.scalar.is_zero() {
        None
    } else {
        Some(s.scalar_mul_big(&x.scalar, el))
    };
    let ax = match x.part {
        SOrO::O => None,
        SOrO::Elem(a) => Some(s.mul(a, el)),
    };
    match (nx, ax) {
        (Some(u), Some(v)) => s.add(u, v),
        (Some(u), None) => u,
        (None, Some(v)) => v,
        (None, None) => unreachable!("(0,o) excluded by construction"),
    }
}

/// A violated identity found while spot-checking U(S) over a truncation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum UViolation {
    AddNotCommutative(UElement, UElement),
    AddNotAssociative(UElement, UElement, UElement),
    MulNotCommutative(UElement, UElement),
    MulNotAssociative(UElement, UElement, UElement),
    NotDistributive(UElement, UElement, UElement),
    UnitFails(UElement),
    ActionAddFails(UElement, UElement, usize),
    ActionMulFails(UElement, UElement, usize),
}

/// Exhaustively check the semiring identities of U(S) and the semimodule
/// laws of the action over the truncation `scalar ≤ max_scalar`. Arithmetic
/// is exact — results may leave the truncation, equality never truncates.
pub fn u_axiom_check(s: &FiniteSemiring, max_scalar: u64) -> Vec<UViolation> {
    let mut domain: Vec<UElement> = Vec::new();
    for n in 0..=max_scalar {
        let n = BigUint::from(n);
        if !n.is_zero() {
            domain.push(UElement::new(n.clone(), SOrO::O).expect("non-zero scalar"));
        }
        for a in 0..s.order() {
            domain.push(UElement::new(n.clone(), SOrO::Elem(a)).expect("has part"));
        }
    }
    let mut out = Vec::new();
    let unit = UElement::one();
    for x in &domain {
        if &u_mul(s, &unit, x) != x {
            out.push(UViolation::UnitFails(x.clone()));
        }
        for y in &domain {
            if u_add(s, x, y) != u_add(s, y, x) {
                out.push(UViolation::AddNotCommutative(x.clone(), y.clone()));
            }
            if u_mul(s, x, y) != u_mul(s, y, x) {
                out.push(UViolation::MulNotCommutative(x.clone(), y.clone()));
            }
            for el in 0..s.order() {
                // (x+y)·el = x·el + y·el and (xy)·el = x·(y·el).
                if u_act(s, &u_add(s, x, y), el) != s.add(u_act(s, x, el), u_act(s, y, el)) {
                    out.push(UViolation::ActionAddFails(x.clone(), y.clone(), el));
                }
                if u_act(s, &u_mul(s, x, y), el) != u_act(s, x, u_act(s, y, el)) {
                    out.push(UViolation::ActionMulFails(x.clone(), y.clone(), el));
                }
            }
            for z in &domain {
                if u_add(s, &u_add(s, x, y), z) != u_add(s, x, &u_add(s, y, z)) {
                    out.push(UViolation::AddNotAssociative(
                        x.clone(),
                        y.clone(),
                        z.clone(),
                    ));
                }
                if u_mul(s, &u_mul(s, x, y), z) != u_mul(s, x, &u_mul(s, y, z)) {
                    out.push(UViolation::MulNotAssociative(
                        x.clone(),
                        y.clone(),
                        z.clone(),
                    ));
                }
                if u_mul(s, x, &u_add(s, y, z)) != u_add(s, &u_mul(s, x, y), &u_mul(s, x, z)) {
                    out.push(UViolation::NotDistributive(x.clone(), y.clone(), z.clone()));
                }
            }
        }
    }
    out
}

/// U(G) on an abelian group G: carrier G ∪ {o}; multiplication is the group
/// operation with o absorbing; every sum is o.
pub fn u_of_group(g: &AbelianGroup) -> FiniteSemiring {
    let n = g.order() + 1;
    let mut labels: Vec<String> = g.labels().to_vec();
    let mut o_label = String::from("o");
    while labels.contains(&o_label) {
        o_label.push('\'');
    }
    labels.push(o_label);
    let o = n - 1;
    let mut add = Vec::with_capacity(n);
    let mut mul = Vec::with_capacity(n);
    for i in 0..n {
        add.push(alloc::vec![o; n]);
        let mut row = Vec::with_capacity(n);
        for j in 0..n {
            if i == o || j == o {
                row.push(o);
            } else {
                row.push(g.op(i, j));
            }
        }
        mul.push(row);
    }
    FiniteSemiring::from_tables(labels, &add, &mul).expect("U(G) tables are well-formed")
}

// ---------------------------------------------------------------------------
// The endomorphism semiring T_S

/// T_S: the maps x ↦ αx for α ∈ U(S), under pointwise addition and
/// composition. Contains the identity (α = (1,o)) and φ_w (α = (0,w)).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TsSemiring {
    pub semiring: FiniteSemiring,
    /// Index of id_S.
    pub id: usize,
    /// Index of φ_w (multiplication by the generator).
    pub phi_w: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TsError {
    /// w does not generate S.
    NotGenerated { w: usize },
}

impl fmt::Display for TsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TsError::NotGenerated { w } => write!(f, "element {w} does not generate the semiring"),
        }
    }
}

pub fn t_s_semiring(s: &FiniteSemiring, w: usize) -> Result<TsSemiring, TsError> {
    assert!(w < s.order());
    if s.generated_subsemiring(&[w]).len() != s.order() {
        return Err(TsError::NotGenerated { w });
    }
    let n = s.order();
    let range = s.scalar_decision_range();
    // Enumerate the distinct action maps, keeping the first (n, a)
    // representative of each as its label.
    let mut maps: BTreeMap<Vec<u16>, usize> = BTreeMap::new();
    let mut labels: Vec<String> = Vec::new();
    let mut vectors: Vec<Vec<u16>> = Vec::new();
    let mut id = None;
    let mut phi_w = None;
    for scalar in 0..=range {
        let parts = core::iter::once(SOrO::O).chain((0..n).map(SOrO::Elem));
        for part in parts {
            let alpha = match UElement::new(BigUint::from(scalar), part) {
                Ok(a) => a,
                Err(_) => continue, // (0, o)
            };
            let vec: Vec<u16> = (0..n).map(|x| u_act(s, &alpha, x) as u16).collect();
            let next = vectors.len();
            let entry = *maps.entry(vec.clone()).or_insert_with(|| {
                let label = match part {
                    SOrO::O => format!("({scalar},o)"),
                    SOrO::Elem(a) => format!("({scalar},{})", s.label(a)),
                };
                labels.push(label);
                vectors.push(vec);
                next
            });
            if scalar == 1 && part == SOrO::O {
                id = Some(entry);
            }
            if scalar == 0 && part == SOrO::Elem(w) {
                phi_w = Some(entry);
            }
        }
    }
    let k = vectors.len();
    let lookup = |v: &[u16]| -> usize { *maps.get(v).expect("T_S is closed under the operations") };
    let mut add = Vec::with_capacity(k);
    let mut mul = Vec::with_capacity(k);
    for i in 0..k {
        let mut arow = Vec::with_capacity(k);
        let mut mrow = Vec::with_capacity(k);
        for j in 0..k {
            let sum: Vec<u16> = (0..n)
                .map(|x| s.add(vectors[i][x] as usize, vectors[j][x] as usize) as u16)
                .collect();
            arow.push(lookup(&sum));
            // Composition (φψ)(x) = φ(ψ(x)).
            let comp: Vec<u16> = (0..n).map(|x| vectors[i][vectors[j][x] as usize]).collect();
            mrow.push(lookup(&comp));
        }
        add.push(arow);
        mul.push(mrow);
    }
    let semiring =
        FiniteSemiring::from_tables(labels, &add, &mul).expect("T_S tables are well-formed");
    Ok(TsSemiring {
        semiring,
        id: id.expect("identity map present"),
        phi_w: phi_w.expect("phi_w present"),
    })
}

// ---------------------------------------------------------------------------
// The quasicyclic group Z_{p^∞}

/// A canonical fraction u/p^e mod 1: either zero (u = 0, e = 0) or p ∤ u
/// with 0 < u < p^e.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct PruferElement {
    p: u64,
    num: BigUint,
    exp: u32,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum PruferError {
    NotPrime {
        p: u64,
    },
    PrimeMismatch {
        left: u64,
        right: u64,
    },
    /// Denominator in the textual form is not a power of p.
    BadDenominator,
    Malformed,
}

impl fmt::Display for PruferError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PruferError::NotPrime { p } => write!(f, "{p} is not prime"),
            PruferError::PrimeMismatch { left, right } => {
                write!(f, "elements live over different primes {left} and {right}")
            }
            PruferError::BadDenominator => write!(f, "denominator must be a power of p"),
            PruferError::Malformed => write!(f, "expected \"0\" or \"u/p^e\" as a plain fraction"),
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl PruferElement {
    /// Canonicalize u/p^e: reduce u mod p^e, then strip common powers of p.
    pub fn new(p: u64, num: BigUint, exp: u32) -> Result<Self, PruferError> {
        if !is_prime(p) {
            return Err(PruferError::NotPrime { p });
        }
        let pb = BigUint::from(p);
        let mut num = num % pb.pow(exp);
        let mut exp = exp;
        while exp > 0 && (&num % &pb).is_zero() {
            num /= &pb;
            exp -= 1;
        }
        if exp == 0 {
            num = BigUint::zero();
        }
        Ok(PruferElement { p, num, exp })
    }

    pub fn zero(p: u64) -> Result<Self, PruferError> {
        PruferElement::new(p, BigUint::zero(), 0)
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn numerator(&self) -> &BigUint {
        &self.num
    }

    pub fn exponent(&self) -> u32 {
        self.exp
    }

    pub fn is_zero(&self) -> bool {
        self.exp == 0
    }

    /// Parse "0" or "u/d" where d is a power of p.
    pub fn parse(p: u64, src: &str) -> Result<Self, PruferError> {
        if !is_prime(p) {
            return Err(PruferError::NotPrime { p });
        }
        let src = src.trim();
        match src.split_once('/') {
            None => {
                let num: BigUint = src.parse().map_err(|_| PruferError::Malformed)?;
                if num.is_zero() {
                    PruferElement::zero(p)
                } else {
                    // An integer is 0 mod 1.
                    PruferElement::new(p, BigUint::zero(), 0)
                }
            }
            Some((u, d)) => {
                let num: BigUint = u.trim().parse().map_err(|_| PruferError::Malformed)?;
                let mut den: BigUint = d.trim().parse().map_err(|_| PruferError::Malformed)?;
                if den.is_zero() {
                    return Err(PruferError::BadDenominator);
                }
                let pb = BigUint::from(p);
                let mut exp = 0u32;
                while (&den % &pb).is_zero() {
                    den /= &pb;
                    exp += 1;
                }
                if !den.is_one() {
                    return Err(PruferError::BadDenominator);
                }
                PruferElement::new(p, num, exp)
            }
        }
    }
}

impl fmt::Display for PruferElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            write!(f, "0")
        } else {
            write!(f, "{}/{}", self.num, BigUint::from(self.p).pow(self.exp))
        }
    }
}

/// Exact addition mod 1.
pub fn prufer_add(x: &PruferElement, y: &PruferElement) -> Result<PruferElement, PruferError> {
    if x.p != y.p {
        return Err(PruferError::PrimeMismatch {
            left: x.p,
            right: y.p,
        });
    }
    let pb = BigUint::from(x.p);
    let exp = x.exp.max(y.exp);
    let num = &x.num * pb.pow(exp - x.exp) + &y.num * pb.pow(exp - y.exp);
    PruferElement::new(x.p, num, exp)
}

/// `n·x` mod 1 (n = 0 gives zero).
pub fn prufer_scale(n: &BigUint, x: &PruferElement) -> PruferElement {
    PruferElement::new(x.p, n * &x.num, x.exp).expect("same prime")
}

/// All b with n·b = x. There are exactly p^v of them, v = v_p(n): writing
/// n = n'·p^v with p ∤ n', the solutions have numerator inv(n')·u + k·p^e
/// over denominator p^{e+v}.
pub fn prufer_div_witnesses(x: &PruferElement, n: u64) -> Vec<PruferElement> {
    assert!(n >= 1);
    let p = x.p;
    let pb = BigUint::from(p);
    let mut v = 0u32;
    let mut n_prime = n;
    while n_prime.is_multiple_of(p) {
        n_prime /= p;
        v += 1;
    }
    // inv(n') mod p^e (trivially 1 when e = 0).
    let modulus = pb.pow(x.exp);
    let base = if x.exp == 0 {
        BigUint::zero()
    } else {
        let inv = mod_inverse(&BigUint::from(n_prime), &modulus).expect("n' is invertible mod p^e");
        (inv * &x.num) % &modulus
    };
    let mut out = Vec::with_capacity(pb.pow(v).try_into().unwrap_or(usize::MAX));
    let count = pb.pow(v);
    let mut k = BigUint::zero();
    while k < count {
        let num = &base + &k * &modulus;
        out.push(PruferElement::new(p, num, x.exp + v).expect("same prime"));
        k += 1u32;
    }
    out.sort();
    out.dedup();
    out
}

/// Inverse of a modulo m via the extended Euclid algorithm.
fn mod_inverse(a: &BigUint, m: &BigUint) -> Option<BigUint> {
    if m.is_one() {
        return Some(BigUint::zero());
    }
    let a = BigInt::from(a.clone());
    let m = BigInt::from(m.clone());
    let e = a.extended_gcd(&m);
    if !e.gcd.is_one() {
        return None;
    }
    let mut x = e.x % &m;
    if x.is_negative() {
        x += &m;
    }
    x.to_biguint()
}

impl core::error::Error for GroupError {}

impl core::error::Error for ConstMultError {}

impl core::error::Error for UElementInvalid {}

impl core::error::Error for TsError {}

impl core::error::Error for PruferError {}
