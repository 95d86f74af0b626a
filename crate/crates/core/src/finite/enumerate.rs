//! Commutative semigroup tables and exhaustive enumeration of small
//! commutative semigroups and semirings, up to isomorphism or labeled.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::finite::{AxiomViolation, ElementOrder, FiniteSemiring, SizeLimitExceeded, TableError};

/// Largest order the exhaustive semiring enumeration accepts.
pub const MAX_SEMIRING_ORDER: usize = 4;
/// Largest order the exhaustive semigroup enumeration accepts.
pub const MAX_SEMIGROUP_ORDER: usize = 4;

/// A finite commutative semigroup (validated on construction).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct SemigroupTable {
    n: usize,
    table: Vec<u16>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SemigroupError {
    Table(TableError),
    Axiom(AxiomViolation),
}

impl core::fmt::Display for SemigroupError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            SemigroupError::Table(e) => write!(f, "{e}"),
            SemigroupError::Axiom(v) => write!(f, "{v}"),
        }
    }
}

impl core::error::Error for SemigroupError {}

impl SemigroupTable {
    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self, SemigroupError> {
        let n = rows.len();
        if n == 0 {
            return Err(SemigroupError::Table(TableError::Empty));
        }
        if rows.iter().any(|r| r.len() != n) {
            return Err(SemigroupError::Table(TableError::BadShape { table: "op" }));
        }
        let mut table = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            for (j, &e) in row.iter().enumerate() {
                if e >= n {
                    return Err(SemigroupError::Table(TableError::EntryOutOfRange {
                        table: "op",
                        row: i,
                        col: j,
                        entry: e,
                    }));
                }
                table.push(e as u16);
            }
        }
        let t = SemigroupTable { n, table };
        t.validate()?;
        Ok(t)
    }

    pub(crate) fn from_flat(n: usize, table: Vec<u16>) -> Self {
        debug_assert_eq!(table.len(), n * n);
        SemigroupTable { n, table }
    }

    fn validate(&self) -> Result<(), SemigroupError> {
        let n = self.n;
        for a in 0..n {
            for b in 0..n {
                if self.op(a, b) != self.op(b, a) {
                    return Err(SemigroupError::Axiom(AxiomViolation::AddNotCommutative {
                        a,
                        b,
                    }));
                }
                for c in 0..n {
                    if self.op(self.op(a, b), c) != self.op(a, self.op(b, c)) {
                        return Err(SemigroupError::Axiom(AxiomViolation::AddNotAssociative {
                            a,
                            b,
                            c,
                        }));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn op(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b] as usize
    }

    pub fn table(&self) -> &[u16] {
        &self.table
    }

    /// Every element idempotent (a semilattice, as the operation is already
    /// commutative and associative).
    pub fn is_semilattice(&self) -> bool {
        (0..self.n).all(|a| self.op(a, a) == a)
    }

    /// Index and period of a under iterated addition.
    pub fn element_order(&self, a: usize) -> ElementOrder {
        let mut seen: Vec<usize> = Vec::new();
        let mut cur = a;
        loop {
            if let Some(pos) = seen.iter().position(|&x| x == cur) {
                return ElementOrder {
                    element: a,
                    index: (pos + 1) as u64,
                    period: (seen.len() - pos) as u64,
                };
            }
            seen.push(cur);
            cur = self.op(cur, a);
        }
    }

    /// `k·a` for k ≥ 1.
    pub fn scalar(&self, k: u64, a: usize) -> usize {
        assert!(k >= 1);
        let mut acc = a;
        for _ in 1..k {
            acc = self.op(acc, a);
        }
        acc
    }

    /// Bound N such that the maps x ↦ kx for k in 1..=N exhaust all scalar
    /// multiples.
    pub fn decision_range(&self) -> u64 {
        use num_integer::Integer;
        let mut max_index = 1u64;
        let mut lcm = 1u64;
        for a in 0..self.n {
            let o = self.element_order(a);
            max_index = max_index.max(o.index);
            lcm = lcm.lcm(&o.period);
        }
        max_index + lcm
    }

    /// Divisible: every x ↦ kx is surjective.
    pub fn is_divisible(&self) -> bool {
        let n = self.n;
        for k in 1..=self.decision_range() {
            let mut hit = alloc::vec![false; n];
            for a in 0..n {
                hit[self.scalar(k, a)] = true;
            }
            if hit.iter().any(|&h| !h) {
                return false;
            }
        }
        true
    }
}

// ---------------------------------------------------------------------------
// Exhaustive enumeration

/// A slice of the enumeration stream: structures whose position (by additive
/// table) satisfies `position % count == index`. Shards are disjoint and
/// their union is the full stream, including under `up_to_iso`, because each
/// isomorphism class is emitted only at its canonical representative, which
/// occurs at a single position.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Shard {
    pub index: u64,
    pub count: u64,
}

impl Default for Shard {
    fn default() -> Self {
        Shard { index: 0, count: 1 }
    }
}

/// Streaming predicate filter; `None` fields do not constrain. Torsion is
/// satisfied by every finite semiring, so `torsion: Some(false)` matches
/// nothing.
#[derive(Clone, Copy, Default, PartialEq, Eq, Debug)]
pub struct SemiringFilter {
    pub idempotent: Option<bool>,
    pub divisible: Option<bool>,
    pub uniquely_divisible: Option<bool>,
    pub torsion: Option<bool>,
    pub unital: Option<bool>,
    pub one_generated: Option<bool>,
}

impl SemiringFilter {
    pub fn matches(&self, s: &FiniteSemiring) -> bool {
        fn ok(want: Option<bool>, have: impl FnOnce() -> bool) -> bool {
            match want {
                None => true,
                Some(w) => w == have(),
            }
        }
        ok(self.idempotent, || s.is_add_idempotent())
            && ok(self.divisible, || s.is_add_divisible())
            && ok(self.uniquely_divisible, || s.is_uniquely_divisible())
            && ok(self.torsion, || true)
            && ok(self.unital, || s.unit().is_some())
            && ok(self.one_generated, || s.is_one_generated())
    }
}

/// All permutations of 0..n by Heap's algorithm.
fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut a: Vec<usize> = (0..n).collect();
    let mut out = alloc::vec![a.clone()];
    let mut c = alloc::vec![0usize; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                a.swap(0, i);
            } else {
                a.swap(c[i], i);
            }
            out.push(a.clone());
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

/// Push the relabeling of `t` under `p` onto `out`.
fn relabel_into(n: usize, t: &[u16], p: &[usize], out: &mut Vec<u16>) {
    let base = out.len();
    out.resize(base + n * n, 0);
    for a in 0..n {
        for b in 0..n {
            out[base + p[a] * n + p[b]] = p[t[a * n + b] as usize] as u16;
        }
    }
}

/// Lexicographically smallest relabeling of a single table.
pub fn canonical_semigroup_table(t: &SemigroupTable) -> Vec<u16> {
    let n = t.order();
    let mut best: Option<Vec<u16>> = None;
    for p in all_permutations(n) {
        let mut cand = Vec::new();
        relabel_into(n, t.table(), &p, &mut cand);
        if best.as_ref().is_none_or(|b| cand < *b) {
            best = Some(cand);
        }
    }
    best.expect("at least the identity permutation")
}

/// Lexicographically smallest relabeling of the concatenated add ++ mul
/// tables, the same permutation applied to both. Two semirings are
/// isomorphic iff these agree.
pub fn canonical_semiring_tables(s: &FiniteSemiring) -> Vec<u16> {
    let n = s.order();
    let mut best: Option<Vec<u16>> = None;
    for p in all_permutations(n) {
        let mut cand = Vec::new();
        relabel_into(n, s.add_table(), &p, &mut cand);
        relabel_into(n, s.mul_table(), &p, &mut cand);
        if best.as_ref().is_none_or(|b| cand < *b) {
            best = Some(cand);
        }
    }
    best.expect("at least the identity permutation")
}

/// All labeled commutative associative tables on n elements, by recursive
/// fill of the upper triangle with a full associativity check at the leaves
/// (addition associativity is the cheapest rejection, so it runs before any
/// pairing with a second table).
fn valid_tables(n: usize) -> Vec<Vec<u16>> {
    fn fill(
        n: usize,
        cells: &[(usize, usize)],
        at: usize,
        table: &mut [u16],
        out: &mut Vec<Vec<u16>>,
    ) {
        if at == cells.len() {
            if assoc_holds(n, table) {
                out.push(table.to_vec());
            }
            return;
        }
        let (i, j) = cells[at];
        for v in 0..n as u16 {
            table[i * n + j] = v;
            table[j * n + i] = v;
            fill(n, cells, at + 1, table, out);
        }
    }
    fn assoc_holds(n: usize, t: &[u16]) -> bool {
        for a in 0..n {
            for b in a..n {
                for c in b..n {
                    // Commutativity leaves three distinct bracketings.
                    let ab_c = t[t[a * n + b] as usize * n + c];
                    let a_bc = t[a * n + t[b * n + c] as usize];
                    if ab_c != a_bc {
                        return false;
                    }
                    let b_ac = t[b * n + t[a * n + c] as usize];
                    if ab_c != b_ac {
                        return false;
                    }
                }
            }
        }
        true
    }
    let cells: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    let mut out = Vec::new();
    let mut table = alloc::vec![0u16; n * n];
    fill(n, &cells, 0, &mut table, &mut out);
    out
}

/// One-sided distributivity; the other side follows from commutativity of
/// multiplication.
fn distributive(n: usize, add: &[u16], mul: &[u16]) -> bool {
    for a in 0..n {
        for b in 0..n {
            for c in b..n {
                let bc = add[b * n + c] as usize;
                let lhs = mul[a * n + bc];
                let rhs = add[mul[a * n + b] as usize * n + mul[a * n + c] as usize];
                if lhs != rhs {
                    return false;
                }
            }
        }
    }
    true
}

fn check_shard(shard: Shard) {
    assert!(shard.count >= 1, "shard count must be at least 1");
    assert!(shard.index < shard.count, "shard index out of range");
}

fn default_labels(n: usize) -> Vec<String> {
    ["a", "b", "c", "d", "e", "f", "g", "h"][..n]
        .iter()
        .map(|s| s.to_string())
        .collect()
}

/// Every commutative semigroup of order n, one call of `visit` per labeled
/// table (or per isomorphism class when `up_to_iso`; the visited table is
/// then the canonical representative). Returns the number visited in this
/// shard.
pub fn enumerate_comm_semigroups(
    n: usize,
    up_to_iso: bool,
    shard: Shard,
    mut visit: impl FnMut(&SemigroupTable),
) -> Result<u64, SizeLimitExceeded> {
    assert!(n >= 1);
    if n > MAX_SEMIGROUP_ORDER {
        return Err(SizeLimitExceeded {
            limit: MAX_SEMIGROUP_ORDER,
            requested: n,
        });
    }
    check_shard(shard);
    let mut visited = 0u64;
    for (pos, t) in valid_tables(n).into_iter().enumerate() {
        if pos as u64 % shard.count != shard.index {
            continue;
        }
        let t = SemigroupTable::from_flat(n, t);
        if up_to_iso && canonical_semigroup_table(&t) != t.table() {
            continue;
        }
        visit(&t);
        visited += 1;
    }
    Ok(visited)
}

/// Every commutative semiring of order n (no neutral elements assumed),
/// streamed through `filter`. Under `up_to_iso` the visited semiring is the
/// canonical representative of its class. Returns the number visited in
/// this shard; sharding slices by additive table, so shards of an
/// enumeration partition it.
pub fn enumerate_semirings(
    n: usize,
    up_to_iso: bool,
    filter: SemiringFilter,
    shard: Shard,
    mut visit: impl FnMut(&FiniteSemiring),
) -> Result<u64, SizeLimitExceeded> {
    assert!(n >= 1);
    if n > MAX_SEMIRING_ORDER {
        return Err(SizeLimitExceeded {
            limit: MAX_SEMIRING_ORDER,
            requested: n,
        });
    }
    check_shard(shard);
    let tables = valid_tables(n);
    let mut visited = 0u64;
    for (pos, add) in tables.iter().enumerate() {
        if pos as u64 % shard.count != shard.index {
            continue;
        }
        for mul in &tables {
            if !distributive(n, add, mul) {
                continue;
            }
            let s = FiniteSemiring::from_flat(default_labels(n), n, add.clone(), mul.clone());
            if up_to_iso {
                let canon = canonical_semiring_tables(&s);
                if canon[..n * n] != s.add_table()[..] || canon[n * n..] != s.mul_table()[..] {
                    continue;
                }
            }
            if !filter.matches(&s) {
                continue;
            }
            visit(&s);
            visited += 1;
        }
    }
    Ok(visited)
}
