//! Bounded congruence closure. Relation instances (l·μ + s, r·μ + s) are
//! enumerated directly, in ascending order of the pair's maximum
//! coefficient (one "round" per coefficient level), and merged into a
//! union-find carrying a proof forest. Every instance whose two sides fit
//! the budget is eventually enumerated, so the closure is complete for the
//! budgeted universe unless the universe cap or the round cap stops it
//! early — in which case the result is a sound under-approximation and is
//! flagged as budget-limited.

use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use alloc::vec::Vec;

use num_bigint::BigUint;

use crate::engine::proof::{Derivation, DerivationStep, Direction};
use crate::engine::{Budget, EngineError, Presentation};
use crate::term::{Monomial, PolyTerm};

/// A proof-forest edge: the two endpoint ids satisfy
/// terms[lhs_end] = lhs(relation)·μ + s and terms[rhs_end] = rhs(relation)·μ + s.
#[derive(Clone, Debug)]
struct Edge {
    relation: usize,
    add_ctx: Option<Arc<PolyTerm>>,
    mul_ctx: Option<Monomial>,
    lhs_end: usize,
    rhs_end: usize,
}

/// The result of saturating a presentation under a budget: an equivalence
/// relation over the registered universe, queryable and explainable.
pub struct Saturation {
    terms: Vec<Arc<PolyTerm>>,
    ids: BTreeMap<Arc<PolyTerm>, usize>,
    parent: Vec<usize>,
    comp_size: Vec<u32>,
    pf_parent: Vec<Option<usize>>,
    pf_edge: Vec<Option<Edge>>,
    universe_full: bool,
    rounds_capped: bool,
    max_universe: usize,
}

impl Saturation {
    fn new(max_universe: usize) -> Self {
        Saturation {
            terms: Vec::new(),
            ids: BTreeMap::new(),
            parent: Vec::new(),
            comp_size: Vec::new(),
            pf_parent: Vec::new(),
            pf_edge: Vec::new(),
            universe_full: false,
            rounds_capped: false,
            max_universe,
        }
    }

    /// Register a term, or None if the universe cap is reached.
    fn intern(&mut self, t: &PolyTerm) -> Option<usize> {
        if let Some(&id) = self.ids.get(t) {
            return Some(id);
        }
        if self.terms.len() >= self.max_universe {
            self.universe_full = true;
            return None;
        }
        let id = self.terms.len();
        let arc = Arc::new(t.clone());
        self.terms.push(arc.clone());
        self.ids.insert(arc, id);
        self.parent.push(id);
        self.comp_size.push(1);
        self.pf_parent.push(None);
        self.pf_edge.push(None);
        Some(id)
    }

    fn find_mut(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn find(&self, mut x: usize) -> usize {
        while self.parent[x] != x {
            x = self.parent[x];
        }
        x
    }

    /// Make x the root of its proof tree by reversing the path above it.
    fn reroot(&mut self, x: usize) {
        let mut chain = Vec::new();
        let mut cur = x;
        while let Some(up) = self.pf_parent[cur] {
            chain.push((
                cur,
                up,
                self.pf_edge[cur].clone().expect("edge with parent"),
            ));
            cur = up;
        }
        // Reverse each hop; every node on the path is written exactly once
        // (x here, the others below), so nothing gets clobbered.
        self.pf_parent[x] = None;
        self.pf_edge[x] = None;
        for (child, up, edge) in chain {
            self.pf_parent[up] = Some(child);
            self.pf_edge[up] = Some(edge);
        }
    }

    /// Merge the classes of a and b, justified by the edge. Returns false
    /// if already equal (the edge is dropped).
    fn union(&mut self, a: usize, b: usize, edge: Edge) -> bool {
        let ra = self.find_mut(a);
        let rb = self.find_mut(b);
        if ra == rb {
            return false;
        }
        // Attach the smaller component's proof tree under the larger.
        let (child_node, parent_node) = if self.comp_size[ra] <= self.comp_size[rb] {
            (a, b)
        } else {
            (b, a)
        };
        self.reroot(child_node);
        self.pf_parent[child_node] = Some(parent_node);
        self.pf_edge[child_node] = Some(edge);
        // Union by size.
        let (small, large) = if self.comp_size[ra] <= self.comp_size[rb] {
            (ra, rb)
        } else {
            (rb, ra)
        };
        self.parent[small] = large;
        self.comp_size[large] += self.comp_size[small];
        true
    }

    pub fn universe_len(&self) -> usize {
        self.terms.len()
    }

    /// True when saturation stopped early for budget reasons (universe cap
    /// or round cap) rather than by exhausting every in-budget instance. A
    /// NotFound from a budget-limited closure says nothing about larger
    /// budgets.
    pub fn budget_limited(&self) -> bool {
        self.universe_full || self.rounds_capped
    }

    pub fn contains(&self, t: &PolyTerm) -> bool {
        self.ids.contains_key(t)
    }

    pub fn id_of(&self, t: &PolyTerm) -> Option<usize> {
        self.ids.get(t).copied()
    }

    pub fn term(&self, id: usize) -> &Arc<PolyTerm> {
        &self.terms[id]
    }

    /// Both registered and currently merged.
    pub fn same_class(&self, a: &PolyTerm, b: &PolyTerm) -> bool {
        match (self.id_of(a), self.id_of(b)) {
            (Some(x), Some(y)) => self.find(x) == self.find(y),
            _ => false,
        }
    }

    /// All registered terms in t's class, in term order. Empty if t is not
    /// registered.
    pub fn class_members(&self, t: &PolyTerm) -> Vec<Arc<PolyTerm>> {
        let Some(id) = self.id_of(t) else {
            return Vec::new();
        };
        let root = self.find(id);
        // BTreeMap iteration gives term order directly.
        self.ids
            .iter()
            .filter(|&(_, &i)| self.find(i) == root)
            .map(|(t, _)| t.clone())
            .collect()
    }

    /// A derivation from a to b extracted from the proof forest, or None
    /// if they are not merged (or not registered).
    pub fn explain(&self, a: &PolyTerm, b: &PolyTerm) -> Option<Derivation> {
        let x = self.id_of(a)?;
        let y = self.id_of(b)?;
        if self.find(x) != self.find(y) {
            return None;
        }
        // Paths to the proof-tree root; they share it.
        let chain = |mut v: usize| -> Vec<usize> {
            let mut out = alloc::vec![v];
            while let Some(up) = self.pf_parent[v] {
                out.push(up);
                v = up;
            }
            out
        };
        let cx = chain(x);
        let cy = chain(y);
        // Lowest common ancestor: first node of cx that appears in cy.
        let mut pos_in_cy = BTreeMap::new();
        for (i, &v) in cy.iter().enumerate() {
            pos_in_cy.insert(v, i);
        }
        let (lca_in_cx, lca_in_cy) = cx
            .iter()
            .enumerate()
            .find_map(|(i, v)| pos_in_cy.get(v).map(|&j| (i, j)))
            .expect("same tree");
        let mut steps = Vec::new();
        // Downhill: x → … → lca, each hop child → its proof parent.
        for i in 0..lca_in_cx {
            let node = cx[i];
            let up = cx[i + 1];
            steps.push(self.step_for(node, up));
        }
        // Uphill: lca → … → y, reversing y's chain, each hop parent → child.
        for i in (0..lca_in_cy).rev() {
            let child = cy[i];
            let up = cy[i + 1];
            debug_assert_eq!(self.pf_parent[child], Some(up));
            steps.push(self.step_for(up, child));
        }
        Some(Derivation { steps })
    }

    /// The derivation step for traversing the edge stored at whichever of
    /// from/to is the child, in the from → to direction.
    fn step_for(&self, from: usize, to: usize) -> DerivationStep {
        let edge = if self.pf_parent[from] == Some(to) {
            self.pf_edge[from].as_ref()
        } else {
            debug_assert_eq!(self.pf_parent[to], Some(from));
            self.pf_edge[to].as_ref()
        }
        .expect("edge present on proof-tree hop");
        let direction = if from == edge.lhs_end {
            debug_assert_eq!(to, edge.rhs_end);
            Direction::L2R
        } else {
            debug_assert_eq!(from, edge.rhs_end);
            debug_assert_eq!(to, edge.lhs_end);
            Direction::R2L
        };
        DerivationStep {
            relation: edge.relation,
            direction,
            add_context: edge.add_ctx.as_ref().map(|s| (**s).clone()),
            mul_context: edge.mul_ctx.clone(),
            result: (*self.terms[to]).clone(),
        }
    }

    pub fn explain_ids(&self, a: usize, b: usize) -> Option<Derivation> {
        let ta = self.terms[a].clone();
        let tb = self.terms[b].clone();
        self.explain(&ta, &tb)
    }
}

fn within_budget(t: &PolyTerm, b: &Budget) -> bool {
    t.total_degree() <= b.max_degree && *t.max_coeff() <= BigUint::from(b.max_coeff)
}

/// All monomials over `arity` generators with total degree in 1..=max
/// (plus the constant monomial when `unital`), in ascending order.
pub(crate) fn monomials_up_to(arity: usize, max: u64, unital: bool) -> Vec<Monomial> {
    fn go(arity: usize, at: usize, left: u64, exps: &mut Vec<u64>, out: &mut Vec<Monomial>) {
        if at == arity {
            out.push(Monomial::new(exps.iter().copied()));
            return;
        }
        for e in 0..=left {
            exps.push(e);
            go(arity, at + 1, left - e, exps, out);
            exps.pop();
        }
    }
    let mut out = Vec::new();
    go(arity, 0, max, &mut Vec::new(), &mut out);
    out.retain(|m| unital || !m.is_constant());
    out.sort();
    out
}

/// One (relation, μ) pairing with its precomputed sides.
struct InstanceBase {
    relation: usize,
    mul_ctx: Option<Monomial>,
    lhs: PolyTerm,
    rhs: PolyTerm,
    /// Per-context-monomial maximum of the two sides' coefficients.
    base: Vec<u64>,
    base_max: u64,
}

pub(crate) fn run(
    p: &Presentation,
    seeds: &[&PolyTerm],
    b: &Budget,
    stop: Option<(&PolyTerm, &PolyTerm)>,
) -> Result<Saturation, EngineError> {
    assert!(
        b.max_degree >= 1 && b.max_coeff >= 1 && b.max_universe >= 1 && b.max_rounds >= 1,
        "budget fields must all be at least 1"
    );
    let arity = p.generator_count();
    let mut sat = Saturation::new(b.max_universe);
    for seed in seeds {
        if seed.arity() != arity {
            return Err(EngineError::SeedArity {
                expected: arity,
                found: seed.arity(),
            });
        }
        if !within_budget(seed, b) || sat.intern(seed).is_none() {
            return Err(EngineError::SeedOutOfBudget {
                term: (*seed).clone(),
            });
        }
    }
    let stop_ids = match stop {
        Some((u, v)) => {
            let iu = sat
                .id_of(u)
                .ok_or(EngineError::SeedOutOfBudget { term: u.clone() })?;
            let iv = sat
                .id_of(v)
                .ok_or(EngineError::SeedOutOfBudget { term: v.clone() })?;
            Some((iu, iv))
        }
        None => None,
    };
    let stop_hit = |s: &mut Saturation| match stop_ids {
        Some((u, v)) => s.find_mut(u) == s.find_mut(v),
        None => false,
    };
    if stop_hit(&mut sat) {
        return Ok(sat);
    }

    // Precompute every (relation, μ) base with both sides within degree
    // budget. μ = None is the bare relation.
    let mul_ctxs = monomials_up_to(arity, b.max_degree, false);
    let context_basis = monomials_up_to(arity, b.max_degree, p.unital());
    let mut bases = Vec::new();
    for (ri, (l, r)) in p.relations().iter().enumerate() {
        let mut candidates = alloc::vec![(None, (**l).clone(), (**r).clone())];
        for m in &mul_ctxs {
            candidates.push((Some(m.clone()), l.mul_monomial(m), r.mul_monomial(m)));
        }
        for (mul_ctx, lhs, rhs) in candidates {
            if lhs.total_degree() > b.max_degree || rhs.total_degree() > b.max_degree {
                continue;
            }
            let coeff = |t: &PolyTerm, m: &Monomial| -> u64 {
                t.coeff_of(m).map_or(0, |c| {
                    // Budget coefficients fit u64; relation inputs larger
                    // than the coefficient cap can never instantiate.
                    c.try_into().unwrap_or(u64::MAX)
                })
            };
            let base: Vec<u64> = context_basis
                .iter()
                .map(|m| coeff(&lhs, m).max(coeff(&rhs, m)))
                .collect();
            let base_max = base.iter().copied().max().unwrap_or(0);
            if base_max > b.max_coeff {
                continue;
            }
            bases.push(InstanceBase {
                relation: ri,
                mul_ctx,
                lhs,
                rhs,
                base,
                base_max,
            });
        }
    }

    // Levels: all instances whose pair max-coefficient equals the level,
    // one level per round. The round cap only limits anything when there
    // are instances to skip.
    let max_level = b.max_coeff.min(b.max_rounds);
    if b.max_rounds < b.max_coeff && !bases.is_empty() {
        sat.rounds_capped = true;
    }
    let mut digits = alloc::vec![0u64; context_basis.len()];
    'levels: for level in 1..=max_level {
        for ib in &bases {
            if ib.base_max > level {
                continue;
            }
            // Odometer over additive contexts s (digit per basis monomial),
            // constrained so no pair coefficient exceeds the level; emit
            // only exact-level pairs (lower levels already ran).
            for d in digits.iter_mut() {
                *d = 0;
            }
            loop {
                let pair_max = digits
                    .iter()
                    .zip(&ib.base)
                    .map(|(&d, &bse)| d + bse)
                    .max()
                    .unwrap_or(ib.base_max);
                if pair_max == level {
                    let s_term = if digits.iter().all(|&d| d == 0) {
                        None
                    } else {
                        let parts: Vec<(Monomial, BigUint)> = context_basis
                            .iter()
                            .zip(&digits)
                            .filter(|&(_, &d)| d > 0)
                            .map(|(m, &d)| (m.clone(), BigUint::from(d)))
                            .collect();
                        Some(PolyTerm::from_parts(parts).expect("non-empty, non-zero"))
                    };
                    let (a_term, b_term) = match &s_term {
                        Some(s) => (
                            ib.lhs.add(s).expect("same arity"),
                            ib.rhs.add(s).expect("same arity"),
                        ),
                        None => (ib.lhs.clone(), ib.rhs.clone()),
                    };
                    let (Some(ia), Some(ibn)) = (sat.intern(&a_term), sat.intern(&b_term)) else {
                        // Universe cap: stop saturating entirely.
                        break 'levels;
                    };
                    let edge = Edge {
                        relation: ib.relation,
                        add_ctx: s_term.map(Arc::new),
                        mul_ctx: ib.mul_ctx.clone(),
                        lhs_end: ia,
                        rhs_end: ibn,
                    };
                    if sat.union(ia, ibn, edge) && stop_hit(&mut sat) {
                        break 'levels;
                    }
                }
                // Increment, capping digits so no coefficient passes the level.
                let mut pos = 0;
                loop {
                    if pos == digits.len() {
                        break;
                    }
                    if digits[pos] + ib.base[pos] < level {
                        digits[pos] += 1;
                        break;
                    }
                    digits[pos] = 0;
                    pos += 1;
                }
                if pos == digits.len() {
                    break;
                }
            }
        }
    }
    Ok(sat)
}
