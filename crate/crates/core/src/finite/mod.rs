//! Finite commutative semirings given by explicit operation tables:
//! validation, structural predicates (idempotent / divisible / uniquely
//! divisible / bounded), the congruence σ relating elements that agree under
//! some scalar multiple, congruence and ideal enumeration, quotients, the
//! positive-rational scalar action on uniquely divisible semirings, and
//! witnesses for the idempotent-ideal collapse.

pub mod enumerate;

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;
use num_integer::Integer;

use crate::cyclic::{rho_reduce_u64, CyclicType};

/// A commutative semiring on `n ≥ 1` elements, both operations tabulated.
/// Axioms are validated, never assumed; a value of this type may describe a
/// non-semiring until [`FiniteSemiring::validate`] says otherwise.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FiniteSemiring {
    labels: Vec<String>,
    n: usize,
    add: Vec<u16>,
    mul: Vec<u16>,
}

/// Structural defects found while ingesting raw tables.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum TableError {
    Empty,
    LabelCountMismatch {
        labels: usize,
        n: usize,
    },
    DuplicateLabel(String),
    BadShape {
        table: &'static str,
    },
    EntryOutOfRange {
        table: &'static str,
        row: usize,
        col: usize,
        entry: usize,
    },
    TooLarge {
        n: usize,
        max: usize,
    },
}

impl fmt::Display for TableError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TableError::Empty => write!(f, "a semiring needs at least one element"),
            TableError::LabelCountMismatch { labels, n } => {
                write!(f, "{labels} labels for {n} elements")
            }
            TableError::DuplicateLabel(l) => write!(f, "duplicate element label {l:?}"),
            TableError::BadShape { table } => write!(f, "{table} table is not n x n"),
            TableError::EntryOutOfRange {
                table,
                row,
                col,
                entry,
            } => {
                write!(f, "{table}[{row}][{col}] = {entry} out of range")
            }
            TableError::TooLarge { n, max } => {
                write!(f, "order {n} exceeds the supported maximum {max}")
            }
        }
    }
}

/// Violations of the semiring axioms, reported with witnesses.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum AxiomViolation {
    AddNotCommutative { a: usize, b: usize },
    AddNotAssociative { a: usize, b: usize, c: usize },
    MulNotCommutative { a: usize, b: usize },
    MulNotAssociative { a: usize, b: usize, c: usize },
    NotDistributive { a: usize, b: usize, c: usize },
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AxiomViolation::AddNotCommutative { a, b } => {
                write!(f, "{a}+{b} != {b}+{a}")
            }
            AxiomViolation::AddNotAssociative { a, b, c } => {
                write!(f, "({a}+{b})+{c} != {a}+({b}+{c})")
            }
            AxiomViolation::MulNotCommutative { a, b } => {
                write!(f, "{a}*{b} != {b}*{a}")
            }
            AxiomViolation::MulNotAssociative { a, b, c } => {
                write!(f, "({a}*{b})*{c} != {a}*({b}*{c})")
            }
            AxiomViolation::NotDistributive { a, b, c } => {
                write!(f, "{a}*({b}+{c}) != {a}*{b} + {a}*{c}")
            }
        }
    }
}

/// Additive index/period of one element.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ElementOrder {
    pub element: usize,
    pub index: u64,
    pub period: u64,
}

impl ElementOrder {
    pub fn cyclic(&self) -> CyclicType {
        CyclicType::finite(self.index, self.period)
    }

    /// Distinct members of the orbit `a, 2a, 3a, …`.
    pub fn ord(&self) -> u64 {
        self.index + self.period - 1
    }
}

/// A partition of the element set, normalized so block ids appear in
/// increasing order of their first member. Compatibility with the tables is
/// checked by [`FiniteSemiring::is_congruence`], not assumed.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct CongruencePartition {
    blocks: Vec<usize>,
}

impl CongruencePartition {
    /// Normalize an arbitrary block assignment.
    pub fn new(assignment: &[usize]) -> Self {
        let mut remap: Vec<Option<usize>> = alloc::vec![None; assignment.len() + 1];
        let mut next = 0;
        let mut blocks = Vec::with_capacity(assignment.len());
        for &b in assignment {
            let id = match remap.get(b).and_then(|x| *x) {
                Some(id) => id,
                None => {
                    if b >= remap.len() {
                        remap.resize(b + 1, None);
                    }
                    remap[b] = Some(next);
                    next += 1;
                    next - 1
                }
            };
            blocks.push(id);
        }
        CongruencePartition { blocks }
    }

    pub fn identity(n: usize) -> Self {
        CongruencePartition {
            blocks: (0..n).collect(),
        }
    }

    pub fn block_of(&self, a: usize) -> usize {
        self.blocks[a]
    }

    pub fn assignment(&self) -> &[usize] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.iter().max().map_or(0, |m| m + 1)
    }

    pub fn is_identity(&self) -> bool {
        self.blocks.iter().enumerate().all(|(i, &b)| i == b)
    }

    /// Does every block of `self` sit inside a block of `coarser`?
    pub fn refines(&self, coarser: &CongruencePartition) -> bool {
        assert_eq!(self.blocks.len(), coarser.blocks.len());
        let mut image: Vec<Option<usize>> = alloc::vec![None; self.num_blocks()];
        for i in 0..self.blocks.len() {
            let (b, c) = (self.blocks[i], coarser.blocks[i]);
            match image[b] {
                None => image[b] = Some(c),
                Some(c0) if c0 == c => {}
                Some(_) => return false,
            }
        }
        true
    }
}

/// Guard for operations that are only feasible at desk scale.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SizeLimitExceeded {
    pub limit: usize,
    pub requested: usize,
}

impl fmt::Display for SizeLimitExceeded {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "order {} exceeds the documented limit {}",
            self.requested, self.limit
        )
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum QuotientError {
    NotACongruence,
}

impl fmt::Display for QuotientError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "partition is not a congruence of the semiring")
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum QScaleError {
    NotUniquelyDivisible,
    ZeroDenominator,
    ZeroNumerator,
}

impl fmt::Display for QScaleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QScaleError::NotUniquelyDivisible => {
                write!(f, "semiring is not uniquely divisible")
            }
            QScaleError::ZeroDenominator => write!(f, "rational scalar needs denominator >= 1"),
            QScaleError::ZeroNumerator => write!(f, "rational scalar needs numerator >= 1"),
        }
    }
}

/// Witness for the idempotent-ideal collapse: an `a` (or its absence) such
/// that every `u + a·u` is additively idempotent and the set of these values
/// forms an ideal.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CollapseWitness {
    /// `u` alone: works exactly for additively idempotent semirings.
    Absent,
    Element(usize),
}

impl FiniteSemiring {
    /// Largest supported order; permutation-canonicalization is factorial.
    pub const MAX_ORDER: usize = 8;

    /// Ingest raw row-major tables of element indices.
    pub fn from_tables(
        labels: Vec<String>,
        add_rows: &[Vec<usize>],
        mul_rows: &[Vec<usize>],
    ) -> Result<Self, TableError> {
        let n = labels.len();
        if n == 0 {
            return Err(TableError::Empty);
        }
        if n > Self::MAX_ORDER {
            return Err(TableError::TooLarge {
                n,
                max: Self::MAX_ORDER,
            });
        }
        let mut seen = BTreeSet::new();
        for l in &labels {
            if !seen.insert(l.clone()) {
                return Err(TableError::DuplicateLabel(l.clone()));
            }
        }
        let flatten = |rows: &[Vec<usize>], name: &'static str| -> Result<Vec<u16>, TableError> {
            if rows.len() != n || rows.iter().any(|r| r.len() != n) {
                return Err(TableError::BadShape { table: name });
            }
            let mut flat = Vec::with_capacity(n * n);
            for (i, row) in rows.iter().enumerate() {
                for (j, &e) in row.iter().enumerate() {
                    if e >= n {
                        return Err(TableError::EntryOutOfRange {
                            table: name,
                            row: i,
                            col: j,
                            entry: e,
                        });
                    }
                    flat.push(e as u16);
                }
            }
            Ok(flat)
        };
        let add = flatten(add_rows, "add")?;
        let mul = flatten(mul_rows, "mul")?;
        Ok(FiniteSemiring {
            labels,
            n,
            add,
            mul,
        })
    }

    /// Internal constructor from flat tables already known to be in range.
    pub(crate) fn from_flat(labels: Vec<String>, n: usize, add: Vec<u16>, mul: Vec<u16>) -> Self {
        debug_assert_eq!(labels.len(), n);
        debug_assert_eq!(add.len(), n * n);
        debug_assert_eq!(mul.len(), n * n);
        debug_assert!(add.iter().chain(mul.iter()).all(|&e| (e as usize) < n));
        FiniteSemiring {
            labels,
            n,
            add,
            mul,
        }
    }

    /// The truncated naturals ℕ/ρ(k,t): elements `1 ..= k+t−1` with both
    /// operations computed in ℕ and reduced. ρ(k,t) is a semiring congruence
    /// of ℕ, so the result always validates.
    pub fn truncated_nat(index: u64, period: u64) -> Self {
        let c = CyclicType::finite(index, period);
        let n = (index + period - 1) as usize;
        assert!(
            n <= Self::MAX_ORDER,
            "truncated naturals of order {n} too large"
        );
        let labels = (1..=n as u64).map(|v| alloc::format!("{v}")).collect();
        let mut add = Vec::with_capacity(n * n);
        let mut mul = Vec::with_capacity(n * n);
        for i in 1..=n as u64 {
            for j in 1..=n as u64 {
                add.push((rho_reduce_u64(i + j, c) - 1) as u16);
                mul.push((rho_reduce_u64(i * j, c) - 1) as u16);
            }
        }
        FiniteSemiring {
            labels,
            n,
            add,
            mul,
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn label_index(&self, name: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == name)
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.n + b] as usize
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.n + b] as usize
    }

    pub fn add_table(&self) -> &[u16] {
        &self.add
    }

    pub fn mul_table(&self) -> &[u16] {
        &self.mul
    }

    /// Exhaustively check both commutativities, both associativities, and
    /// distributivity; returns every violation found.
    pub fn validate(&self) -> Vec<AxiomViolation> {
        let n = self.n;
        let mut out = Vec::new();
        for a in 0..n {
            for b in a..n {
                if self.add(a, b) != self.add(b, a) {
                    out.push(AxiomViolation::AddNotCommutative { a, b });
                }
                if self.mul(a, b) != self.mul(b, a) {
                    out.push(AxiomViolation::MulNotCommutative { a, b });
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if self.add(self.add(a, b), c) != self.add(a, self.add(b, c)) {
                        out.push(AxiomViolation::AddNotAssociative { a, b, c });
                    }
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                        out.push(AxiomViolation::MulNotAssociative { a, b, c });
                    }
                    if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)) {
                        out.push(AxiomViolation::NotDistributive { a, b, c });
                    }
                }
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    /// Orbit `a, 2a, 3a, …` up to its first repetition; returned vector has
    /// the element `m·a` at position `m − 1` and length `index + period − 1`.
    pub fn orbit(&self, a: usize) -> (Vec<usize>, ElementOrder) {
        let mut seen: Vec<Option<usize>> = alloc::vec![None; self.n]; // element -> position (1-based)
        let mut orbit = Vec::new();
        let mut cur = a;
        let mut pos = 1u64;
        loop {
            if let Some(first) = seen[cur] {
                let index = first as u64;
                let period = pos - index;
                orbit.truncate((index + period - 1) as usize);
                return (
                    orbit,
                    ElementOrder {
                        element: a,
                        index,
                        period,
                    },
                );
            }
            seen[cur] = Some(pos as usize);
            orbit.push(cur);
            cur = self.add(cur, a);
            pos += 1;
        }
    }

    pub fn element_order(&self, a: usize) -> ElementOrder {
        self.orbit(a).1
    }

    /// `k·a` for `k ≥ 1`.
    pub fn scalar_mul(&self, k: u64, a: usize) -> usize {
        assert!(k >= 1);
        let (orbit, ord) = self.orbit(a);
        let k = rho_reduce_u64(k, ord.cyclic());
        orbit[(k - 1) as usize]
    }

    /// `k·a` for arbitrary-precision `k ≥ 1`.
    pub fn scalar_mul_big(&self, k: &BigUint, a: usize) -> usize {
        let (orbit, ord) = self.orbit(a);
        let r = crate::cyclic::rho_reduce(k, ord.cyclic());
        let r = u64::try_from(&r).expect("reduced scalar fits");
        orbit[(r - 1) as usize]
    }

    /// Maximum of `ord` over all elements — the boundedness report.
    pub fn max_ord(&self) -> u64 {
        (0..self.n)
            .map(|a| self.element_order(a).ord())
            .max()
            .expect("non-empty")
    }

    pub fn is_add_idempotent(&self) -> bool {
        (0..self.n).all(|a| self.add(a, a) == a)
    }

    /// Upper bound for scalar checks: the family of maps `x ↦ n·x` over all
    /// `n ∈ ℕ` repeats within `1 ..= max index + lcm(periods)`.
    pub fn scalar_decision_range(&self) -> u64 {
        let mut max_index = 1u64;
        let mut lcm = 1u64;
        for a in 0..self.n {
            let o = self.element_order(a);
            max_index = max_index.max(o.index);
            lcm = lcm.lcm(&o.period);
        }
        max_index + lcm
    }

    /// Table of `n·x` for `n` in `1 ..= scalar_decision_range()`, row per n.
    fn scalar_rows(&self) -> Vec<Vec<usize>> {
        let range = self.scalar_decision_range();
        let mut rows: Vec<Vec<usize>> = Vec::with_capacity(range as usize);
        let first: Vec<usize> = (0..self.n).collect();
        rows.push(first);
        for _ in 2..=range {
            let prev = rows.last().expect("non-empty");
            let next = (0..self.n).map(|x| self.add(prev[x], x)).collect();
            rows.push(next);
        }
        rows
    }

    /// Every map `x ↦ n·x` is surjective.
    pub fn is_add_divisible(&self) -> bool {
        self.scalar_rows().iter().all(|row| {
            let mut hit = alloc::vec![false; self.n];
            for &y in row {
                hit[y] = true;
            }
            hit.iter().all(|&h| h)
        })
    }

    /// Every map `x ↦ n·x` is bijective. On a finite carrier this coincides
    /// with surjectivity, but it is checked independently.
    pub fn is_uniquely_divisible(&self) -> bool {
        self.scalar_rows().iter().all(|row| {
            let mut hit = alloc::vec![false; self.n];
            for &y in row {
                if hit[y] {
                    return false;
                }
                hit[y] = true;
            }
            true
        })
    }

    /// σ: `a ≡ b` iff `m·a = m·b` for some `m`. Always a congruence; the
    /// quotient is additively idempotent and σ of the quotient is trivial.
    pub fn sigma_congruence(&self) -> CongruencePartition {
        let rows = self.scalar_rows();
        let mut assign: Vec<usize> = (0..self.n).collect();
        // Tiny union-find by repeated relabeling; n is small.
        for a in 0..self.n {
            for b in a + 1..self.n {
                if assign[a] == assign[b] {
                    continue;
                }
                if rows.iter().any(|row| row[a] == row[b]) {
                    let (from, to) = (assign[b], assign[a]);
                    for x in assign.iter_mut() {
                        if *x == from {
                            *x = to;
                        }
                    }
                }
            }
        }
        CongruencePartition::new(&assign)
    }

    /// Compatibility of a partition with both tables.
    pub fn is_congruence(&self, p: &CongruencePartition) -> bool {
        assert_eq!(p.assignment().len(), self.n);
        for a in 0..self.n {
            for b in a + 1..self.n {
                if p.block_of(a) != p.block_of(b) {
                    continue;
                }
                for c in 0..self.n {
                    if p.block_of(self.add(a, c)) != p.block_of(self.add(b, c)) {
                        return false;
                    }
                    if p.block_of(self.mul(a, c)) != p.block_of(self.mul(b, c)) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Factor semiring by a congruence. Block labels join member labels.
    pub fn quotient(&self, p: &CongruencePartition) -> Result<FiniteSemiring, QuotientError> {
        if !self.is_congruence(p) {
            return Err(QuotientError::NotACongruence);
        }
        let k = p.num_blocks();
        let mut reps = alloc::vec![usize::MAX; k];
        let mut labels: Vec<String> = alloc::vec![String::new(); k];
        for a in 0..self.n {
            let b = p.block_of(a);
            if reps[b] == usize::MAX {
                reps[b] = a;
                labels[b] = self.labels[a].clone();
            } else {
                labels[b].push('|');
                labels[b].push_str(&self.labels[a]);
            }
        }
        let mut add = Vec::with_capacity(k * k);
        let mut mul = Vec::with_capacity(k * k);
        for i in 0..k {
            for j in 0..k {
                add.push(p.block_of(self.add(reps[i], reps[j])) as u16);
                mul.push(p.block_of(self.mul(reps[i], reps[j])) as u16);
            }
        }
        Ok(FiniteSemiring {
            labels,
            n: k,
            add,
            mul,
        })
    }

    /// All congruences, by filtering every set partition. Bell(6) = 203, so
    /// the documented limit keeps this instant.
    pub fn enumerate_congruences(&self) -> Result<Vec<CongruencePartition>, SizeLimitExceeded> {
        const LIMIT: usize = 6;
        if self.n > LIMIT {
            return Err(SizeLimitExceeded {
                limit: LIMIT,
                requested: self.n,
            });
        }
        let mut out = Vec::new();
        // Restricted growth strings: a[0] = 0, a[i] <= 1 + max(prefix).
        let mut a = alloc::vec![0usize; self.n];
        loop {
            let p = CongruencePartition::new(&a);
            if self.is_congruence(&p) {
                out.push(p);
            }
            // Next restricted growth string.
            let mut i = self.n;
            loop {
                if i == 1 {
                    return Ok(out);
                }
                i -= 1;
                let maxp = a[..i].iter().copied().max().expect("prefix non-empty");
                if a[i] <= maxp {
                    a[i] += 1;
                    for x in a[i + 1..].iter_mut() {
                        *x = 0;
                    }
                    break;
                }
                a[i] = 0;
            }
        }
    }

    /// Closure of a seed set under both operations.
    pub fn generated_subsemiring(&self, seed: &[usize]) -> Vec<usize> {
        let mut member = alloc::vec![false; self.n];
        let mut work: Vec<usize> = Vec::new();
        for &a in seed {
            assert!(a < self.n);
            if !member[a] {
                member[a] = true;
                work.push(a);
            }
        }
        while let Some(a) = work.pop() {
            for b in 0..self.n {
                if !member[b] {
                    continue;
                }
                for x in [self.add(a, b), self.mul(a, b)] {
                    if !member[x] {
                        member[x] = true;
                        work.push(x);
                    }
                }
            }
        }
        (0..self.n).filter(|&x| member[x]).collect()
    }

    pub fn is_one_generated(&self) -> bool {
        !self.one_generated_witnesses().is_empty()
    }

    /// Every `w` whose generated subsemiring is all of S.
    pub fn one_generated_witnesses(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|&w| self.generated_subsemiring(&[w]).len() == self.n)
            .collect()
    }

    /// Elements of finite additive order. On a finite carrier this is all of
    /// S — computed anyway, as a cross-check rather than an assumption.
    pub fn torsion_ideal(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|&a| {
                let o = self.element_order(a);
                o.index >= 1 && o.period >= 1
            })
            .collect()
    }

    /// S^k: the subsemiring generated by all k-fold products.
    pub fn power_set(&self, k: u32) -> Vec<usize> {
        assert!(k >= 1);
        let mut prods: BTreeSet<usize> = (0..self.n).collect();
        for _ in 1..k {
            let mut next = BTreeSet::new();
            for &x in &prods {
                for a in 0..self.n {
                    next.insert(self.mul(x, a));
                }
            }
            prods = next;
        }
        let seed: Vec<usize> = prods.into_iter().collect();
        self.generated_subsemiring(&seed)
    }

    /// All ideals: non-empty subsets closed under addition and under
    /// multiplication by arbitrary elements.
    pub fn ideals(&self) -> Result<Vec<Vec<usize>>, SizeLimitExceeded> {
        const LIMIT: usize = 16;
        if self.n > LIMIT {
            return Err(SizeLimitExceeded {
                limit: LIMIT,
                requested: self.n,
            });
        }
        let n = self.n;
        let mut out = Vec::new();
        'subsets: for mask in 1u32..(1u32 << n) {
            let members: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
            for &a in &members {
                for &b in &members {
                    if mask & (1 << self.add(a, b)) == 0 {
                        continue 'subsets;
                    }
                }
                for s in 0..n {
                    if mask & (1 << self.mul(s, a)) == 0 {
                        continue 'subsets;
                    }
                }
            }
            out.push(members);
        }
        Ok(out)
    }

    /// Only ideals are S itself and at most one one-element (necessarily
    /// absorbing) ideal.
    pub fn is_ideal_simple(&self) -> Result<bool, SizeLimitExceeded> {
        let ideals = self.ideals()?;
        let mut singletons = 0;
        for i in &ideals {
            if i.len() == self.n {
                continue;
            }
            if i.len() == 1 {
                singletons += 1;
                if singletons > 1 {
                    return Ok(false);
                }
                continue;
            }
            return Ok(false);
        }
        Ok(true)
    }

    /// `(m/n)·a` in a uniquely divisible semiring: the unique `b` with
    /// `n·b = m·a`. The fraction is reduced internally; the value does not
    /// depend on the representation.
    pub fn qplus_scale(&self, num: u64, den: u64, a: usize) -> Result<usize, QScaleError> {
        if num == 0 {
            return Err(QScaleError::ZeroNumerator);
        }
        if den == 0 {
            return Err(QScaleError::ZeroDenominator);
        }
        if !self.is_uniquely_divisible() {
            return Err(QScaleError::NotUniquelyDivisible);
        }
        let g = num.gcd(&den);
        let (num, den) = (num / g, den / g);
        let ma = self.scalar_mul(num, a);
        let mut found = None;
        for b in 0..self.n {
            if self.scalar_mul(den, b) == ma {
                match found {
                    None => found = Some(b),
                    // Unique divisibility makes this unreachable; stay defensive.
                    Some(_) => return Err(QScaleError::NotUniquelyDivisible),
                }
            }
        }
        found.ok_or(QScaleError::NotUniquelyDivisible)
    }

    /// Check one collapse-witness candidate: every `u + a·u` (or `u` alone)
    /// additively idempotent, and the image set an ideal.
    pub fn check_collapse_witness(&self, w: CollapseWitness) -> bool {
        let image: BTreeSet<usize> = (0..self.n)
            .map(|u| match w {
                CollapseWitness::Absent => u,
                CollapseWitness::Element(a) => self.add(u, self.mul(a, u)),
            })
            .collect();
        for &e in &image {
            if self.add(e, e) != e {
                return false;
            }
        }
        for &x in &image {
            for &y in &image {
                if !image.contains(&self.add(x, y)) {
                    return false;
                }
            }
            for s in 0..self.n {
                if !image.contains(&self.mul(s, x)) {
                    return false;
                }
            }
        }
        true
    }

    /// First collapse witness in the order: absent, then elements ascending.
    pub fn idempotent_ideal_witness(&self) -> Option<CollapseWitness> {
        if self.check_collapse_witness(CollapseWitness::Absent) {
            return Some(CollapseWitness::Absent);
        }
        (0..self.n)
            .map(CollapseWitness::Element)
            .find(|&w| self.check_collapse_witness(w))
    }

    /// The multiplicative unit, when one exists.
    pub fn unit(&self) -> Option<usize> {
        (0..self.n).find(|&e| (0..self.n).all(|x| self.mul(e, x) == x))
    }

    /// The additive identity, when one exists (not assumed by anything).
    pub fn add_identity(&self) -> Option<usize> {
        (0..self.n).find(|&e| (0..self.n).all(|x| self.add(e, x) == x))
    }
}

impl core::error::Error for TableError {}

impl core::error::Error for SizeLimitExceeded {}

impl core::error::Error for QuotientError {}

impl core::error::Error for QScaleError {}
