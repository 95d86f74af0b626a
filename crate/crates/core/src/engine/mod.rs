//! Bounded, proof-producing derivation engine for finitely presented
//! commutative semirings. Saturation computes the congruence generated by
//! the relations, restricted to terms within a budget; every merge carries
//! a proof edge, so any derived equality extracts to a replayable
//! derivation. A NotFound is an under-approximation verdict, never a
//! disproof.

mod closure;
mod proof;

pub use closure::Saturation;
pub use proof::{
    replay, Derivation, DerivationStep, Direction, ProofParseError, ProofParseErrorKind,
    ReplayError,
};

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;

use crate::term::PolyTerm;

/// A finitely presented commutative semiring: generator names, relations
/// between terms over those generators, and whether constants (a
/// multiplicative unit) are admitted in terms.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Presentation {
    names: Vec<String>,
    relations: Vec<(Arc<PolyTerm>, Arc<PolyTerm>)>,
    unital: bool,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum PresentationError {
    NoGenerators,
    DuplicateGenerator(String),
    /// Relation side built over a different generator count.
    ArityMismatch {
        relation: usize,
    },
    /// Constant monomials require the unital flag.
    ConstantTerm {
        relation: usize,
    },
}

impl fmt::Display for PresentationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PresentationError::NoGenerators => write!(f, "presentation has no generators"),
            PresentationError::DuplicateGenerator(n) => {
                write!(f, "duplicate generator name {n:?}")
            }
            PresentationError::ArityMismatch { relation } => {
                write!(
                    f,
                    "relation {} is over a different generator count",
                    relation + 1
                )
            }
            PresentationError::ConstantTerm { relation } => {
                write!(
                    f,
                    "relation {} has a constant monomial but the presentation is not unital",
                    relation + 1
                )
            }
        }
    }
}

impl Presentation {
    pub fn new(
        names: Vec<String>,
        relations: Vec<(PolyTerm, PolyTerm)>,
        unital: bool,
    ) -> Result<Self, PresentationError> {
        if names.is_empty() {
            return Err(PresentationError::NoGenerators);
        }
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(PresentationError::DuplicateGenerator(n.clone()));
            }
        }
        let arity = names.len();
        let mut rels = Vec::with_capacity(relations.len());
        for (i, (l, r)) in relations.into_iter().enumerate() {
            if l.arity() != arity || r.arity() != arity {
                return Err(PresentationError::ArityMismatch { relation: i });
            }
            if !unital {
                let has_const = |t: &PolyTerm| t.parts().iter().any(|(m, _)| m.is_constant());
                if has_const(&l) || has_const(&r) {
                    return Err(PresentationError::ConstantTerm { relation: i });
                }
            }
            rels.push((Arc::new(l), Arc::new(r)));
        }
        Ok(Presentation {
            names,
            relations: rels,
            unital,
        })
    }

    pub fn generator_count(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn relations(&self) -> &[(Arc<PolyTerm>, Arc<PolyTerm>)] {
        &self.relations
    }

    pub fn unital(&self) -> bool {
        self.unital
    }
}

/// Saturation limits. All fields must be at least 1.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Budget {
    /// Maximum total degree of any term in the universe.
    pub max_degree: u64,
    /// Maximum coefficient of any term in the universe.
    pub max_coeff: u64,
    /// Maximum number of registered terms.
    pub max_universe: usize,
    /// Maximum closure rounds; one round processes one coefficient level.
    pub max_rounds: u64,
}

impl Budget {
    /// The budget all regression derivations are pinned at.
    pub const REFERENCE: Budget = Budget {
        max_degree: 4,
        max_coeff: 64,
        max_universe: 200_000,
        max_rounds: 50,
    };
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum EngineError {
    SeedArity {
        expected: usize,
        found: usize,
    },
    SeedOutOfBudget {
        term: PolyTerm,
    },
    /// divisibility_witness needs n ≥ 2.
    DivisorOutOfRange {
        n: u64,
    },
    /// detect_unit applies to one-generated presentations.
    NotOneGenerated {
        generators: usize,
    },
}

impl fmt::Display for EngineError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EngineError::SeedArity { expected, found } => {
                write!(
                    f,
                    "seed term has {found} generators, presentation has {expected}"
                )
            }
            EngineError::SeedOutOfBudget { .. } => {
                write!(f, "seed term does not fit the budget")
            }
            EngineError::DivisorOutOfRange { n } => {
                write!(f, "divisor must be at least 2, got {n}")
            }
            EngineError::NotOneGenerated { generators } => {
                write!(
                    f,
                    "unit detection needs exactly one generator, got {generators}"
                )
            }
        }
    }
}

/// Query result: found with evidence, or not found within this budget. A
/// budget-limited NotFound (`exhausted: true`) may flip to Found under a
/// larger budget; a non-limited one is a fixpoint of the budgeted closure.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum QueryOutcome<T> {
    Found(T),
    NotFound { exhausted: bool },
}

impl<T> QueryOutcome<T> {
    pub fn found(self) -> Option<T> {
        match self {
            QueryOutcome::Found(t) => Some(t),
            QueryOutcome::NotFound { .. } => None,
        }
    }

    pub fn is_found(&self) -> bool {
        matches!(self, QueryOutcome::Found(_))
    }
}

/// Compute the budgeted congruence closure seeded with the given terms.
pub fn saturate(
    p: &Presentation,
    seeds: &[PolyTerm],
    b: &Budget,
) -> Result<Saturation, EngineError> {
    let refs: Vec<&PolyTerm> = seeds.iter().collect();
    closure::run(p, &refs, b, None)
}

/// A derivation from t1 to t2, if the bounded closure merges them.
pub fn prove_equal(
    p: &Presentation,
    t1: &PolyTerm,
    t2: &PolyTerm,
    b: &Budget,
) -> Result<QueryOutcome<Derivation>, EngineError> {
    let sat = closure::run(p, &[t1, t2], b, Some((t1, t2)))?;
    if sat.same_class(t1, t2) {
        let d = sat.explain(t1, t2).expect("merged terms explain");
        Ok(QueryOutcome::Found(d))
    } else {
        Ok(QueryOutcome::NotFound {
            exhausted: sat.budget_limited(),
        })
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FiniteOrder {
    pub m: u64,
    pub n: u64,
    /// Proof of m·target ≈ n·target.
    pub derivation: Derivation,
}

/// The lexicographically smallest pair m < n with m·target ≈ n·target in
/// the bounded closure.
pub fn find_finite_order(
    p: &Presentation,
    target: &PolyTerm,
    b: &Budget,
) -> Result<QueryOutcome<FiniteOrder>, EngineError> {
    // m = 1 is the target itself; closure::run rejects it if out of budget.
    let mut seeds: Vec<(u64, PolyTerm)> = alloc::vec![(1, target.clone())];
    for m in 2..=b.max_coeff {
        let t = target.scale(&BigUint::from(m));
        if *t.max_coeff() > BigUint::from(b.max_coeff) {
            break;
        }
        seeds.push((m, t));
    }
    let refs: Vec<&PolyTerm> = seeds.iter().map(|(_, t)| t).collect();
    let sat = closure::run(p, &refs, b, None)?;
    for i in 0..seeds.len() {
        for j in i + 1..seeds.len() {
            if sat.same_class(&seeds[i].1, &seeds[j].1) {
                let d = sat.explain(&seeds[i].1, &seeds[j].1).expect("merged");
                return Ok(QueryOutcome::Found(FiniteOrder {
                    m: seeds[i].0,
                    n: seeds[j].0,
                    derivation: d,
                }));
            }
        }
    }
    Ok(QueryOutcome::NotFound {
        exhausted: sat.budget_limited(),
    })
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DivisibilityWitness {
    /// f with target ≈ n·f.
    pub factor: PolyTerm,
    /// Proof of target ≈ n·f (the derivation ends at n·f).
    pub derivation: Derivation,
}

/// A term f with target ≈ n·f in the bounded closure; the smallest
/// registered multiple is preferred.
pub fn divisibility_witness(
    p: &Presentation,
    n: u64,
    target: &PolyTerm,
    b: &Budget,
) -> Result<QueryOutcome<DivisibilityWitness>, EngineError> {
    if n < 2 {
        return Err(EngineError::DivisorOutOfRange { n });
    }
    let sat = closure::run(p, &[target], b, None)?;
    let big_n = BigUint::from(n);
    for member in sat.class_members(target) {
        if let Some(f) = member.div_exact(&big_n) {
            let d = sat.explain(target, &member).expect("merged");
            return Ok(QueryOutcome::Found(DivisibilityWitness {
                factor: f,
                derivation: d,
            }));
        }
    }
    Ok(QueryOutcome::NotFound {
        exhausted: sat.budget_limited(),
    })
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UnitWitness {
    /// u with w ≈ w·u; such a u is the unit of the presented semiring.
    pub unit: PolyTerm,
    /// Proof of w ≈ w·u (the derivation ends at w·u).
    pub derivation: Derivation,
}

/// For a one-generated presentation, a u with w ≈ w·u in the bounded
/// closure. Any such u is the multiplicative unit of the presented
/// semiring (if w = wu then for every s = f(w), su = s).
pub fn detect_unit(p: &Presentation, b: &Budget) -> Result<QueryOutcome<UnitWitness>, EngineError> {
    if p.generator_count() != 1 {
        return Err(EngineError::NotOneGenerated {
            generators: p.generator_count(),
        });
    }
    let w = PolyTerm::generator(1, 0);
    let sat = closure::run(p, &[&w], b, None)?;
    let mut candidates: Vec<Arc<PolyTerm>> = (0..sat.universe_len())
        .map(|i| sat.term(i).clone())
        .collect();
    candidates.sort();
    for u in candidates {
        let wu = match w.mul(&u) {
            Ok(t) => t,
            Err(_) => continue,
        };
        if sat.contains(&wu) && sat.same_class(&w, &wu) {
            let d = sat.explain(&w, &wu).expect("merged");
            return Ok(QueryOutcome::Found(UnitWitness {
                unit: (*u).clone(),
                derivation: d,
            }));
        }
    }
    Ok(QueryOutcome::NotFound {
        exhausted: sat.budget_limited(),
    })
}

impl core::error::Error for PresentationError {}

impl core::error::Error for EngineError {}
