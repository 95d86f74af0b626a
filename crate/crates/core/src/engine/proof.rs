//! Derivations: ordered rewrite steps, their line-oriented text form, and an
//! independent replay checker that re-verifies every step with primitive
//! term operations only.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::engine::Presentation;
use crate::term::{parse_term, Monomial, PolyTerm, SubtermDiff, TermParseError};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Direction {
    L2R,
    R2L,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::L2R => "L2R",
            Direction::R2L => "R2L",
        })
    }
}

/// One rewrite: apply a relation in the given direction under an optional
/// additive context s and multiplicative context μ. From a term l·μ + s
/// (l the side the direction starts from) the step yields r·μ + s, recorded
/// in `result`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DerivationStep {
    /// Index into the presentation's relation list (0-based; rendered 1-based).
    pub relation: usize,
    pub direction: Direction,
    pub add_context: Option<PolyTerm>,
    pub mul_context: Option<Monomial>,
    pub result: PolyTerm,
}

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Derivation {
    pub steps: Vec<DerivationStep>,
}

impl Derivation {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// One line per step:
    /// `<relation-id> <L2R|R2L> [+ <term>] [* <monomial>] => <result>`.
    pub fn render(&self, p: &Presentation) -> String {
        let names = p.names();
        let mut out = String::new();
        for step in &self.steps {
            out.push_str(&format!("{} {}", step.relation + 1, step.direction));
            if let Some(s) = &step.add_context {
                out.push_str(&format!(" + {}", s.display(names)));
            }
            if let Some(m) = &step.mul_context {
                let as_term = PolyTerm::monomial(m.clone());
                out.push_str(&format!(" * {}", as_term.display(names)));
            }
            out.push_str(&format!(" => {}\n", step.result.display(names)));
        }
        out
    }

    /// Inverse of `render`. Blank lines are skipped.
    pub fn parse(p: &Presentation, src: &str) -> Result<Derivation, ProofParseError> {
        let mut steps = Vec::new();
        for (i, raw) in src.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() {
                continue;
            }
            steps.push(parse_step(p, line).map_err(|kind| ProofParseError { line: i + 1, kind })?);
        }
        Ok(Derivation { steps })
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ProofParseError {
    pub line: usize,
    pub kind: ProofParseErrorKind,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ProofParseErrorKind {
    MissingArrow,
    BadRelationId,
    BadDirection,
    BadTerm(TermParseError),
    /// The `*` context must be a single monomial with coefficient 1.
    BadMonomial,
}

impl fmt::Display for ProofParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "proof line {}: ", self.line)?;
        match &self.kind {
            ProofParseErrorKind::MissingArrow => write!(f, "missing \" => \""),
            ProofParseErrorKind::BadRelationId => write!(f, "bad relation id"),
            ProofParseErrorKind::BadDirection => write!(f, "direction must be L2R or R2L"),
            ProofParseErrorKind::BadTerm(e) => write!(f, "bad term at offset {}", e.offset),
            ProofParseErrorKind::BadMonomial => {
                write!(f, "multiplicative context must be a bare monomial")
            }
        }
    }
}

fn parse_step(p: &Presentation, line: &str) -> Result<DerivationStep, ProofParseErrorKind> {
    let names = p.names();
    let unital = p.unital();
    let arrow = line
        .rfind(" => ")
        .ok_or(ProofParseErrorKind::MissingArrow)?;
    let (head, result_src) = (&line[..arrow], &line[arrow + 4..]);
    let result = parse_term(result_src, names, unital).map_err(ProofParseErrorKind::BadTerm)?;

    let mut rest = head;
    let id_end = rest.find(' ').ok_or(ProofParseErrorKind::BadRelationId)?;
    let id: usize = rest[..id_end]
        .parse()
        .map_err(|_| ProofParseErrorKind::BadRelationId)?;
    if id == 0 || id > p.relations().len() {
        return Err(ProofParseErrorKind::BadRelationId);
    }
    rest = &rest[id_end + 1..];

    let direction = if let Some(r) = rest.strip_prefix("L2R") {
        rest = r;
        Direction::L2R
    } else if let Some(r) = rest.strip_prefix("R2L") {
        rest = r;
        Direction::R2L
    } else {
        return Err(ProofParseErrorKind::BadDirection);
    };

    // Remaining: `` | ` + <term>` | ` * <monomial>` | ` + <term> * <monomial>`.
    // Term display never contains a spaced " * " (factors are juxtaposed
    // with a bare '*'), so the last spaced " * " separates the monomial.
    let mut add_context = None;
    let mut mul_context = None;
    if let Some(r) = rest.strip_prefix(" + ") {
        let (term_src, mono_src) = match r.rfind(" * ") {
            Some(at) => (&r[..at], Some(&r[at + 3..])),
            None => (r, None),
        };
        add_context =
            Some(parse_term(term_src, names, unital).map_err(ProofParseErrorKind::BadTerm)?);
        if let Some(m) = mono_src {
            mul_context = Some(parse_monomial(m, names, unital)?);
        }
    } else if let Some(r) = rest.strip_prefix(" * ") {
        mul_context = Some(parse_monomial(r, names, unital)?);
    } else if !rest.is_empty() {
        return Err(ProofParseErrorKind::BadDirection);
    }

    Ok(DerivationStep {
        relation: id - 1,
        direction,
        add_context,
        mul_context,
        result,
    })
}

fn parse_monomial<S: AsRef<str>>(
    src: &str,
    names: &[S],
    unital: bool,
) -> Result<Monomial, ProofParseErrorKind> {
    let t = parse_term(src, names, unital).map_err(ProofParseErrorKind::BadTerm)?;
    let parts = t.parts();
    if parts.len() != 1 || parts[0].1 != num_bigint::BigUint::from(1u32) {
        return Err(ProofParseErrorKind::BadMonomial);
    }
    Ok(parts[0].0.clone())
}

/// Replay failure at a step (numbered from 1, like the rendered text).
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ReplayError {
    /// The step names a relation the presentation does not have.
    UnknownRelation { step: usize },
    /// The current term is not of the form `side·μ + s` for the step.
    StepMismatch { step: usize },
    /// The rewrite applied fine but produced a different term than recorded.
    ResultMismatch { step: usize },
}

impl fmt::Display for ReplayError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReplayError::UnknownRelation { step } => write!(f, "step {step}: unknown relation"),
            ReplayError::StepMismatch { step } => {
                write!(
                    f,
                    "step {step}: term does not match the step's source shape"
                )
            }
            ReplayError::ResultMismatch { step } => {
                write!(
                    f,
                    "step {step}: rewrite result differs from the recorded term"
                )
            }
        }
    }
}

/// Replay a derivation from `start`, re-deriving every step with
/// subterm_difference / mul / add only; no closure state is consulted.
pub fn replay(p: &Presentation, start: &PolyTerm, d: &Derivation) -> Result<PolyTerm, ReplayError> {
    let mut cur = start.clone();
    for (i, step) in d.steps.iter().enumerate() {
        let stepno = i + 1;
        let (lhs, rhs) = p
            .relations()
            .get(step.relation)
            .ok_or(ReplayError::UnknownRelation { step: stepno })?;
        let (from, to) = match step.direction {
            Direction::L2R => (lhs, rhs),
            Direction::R2L => (rhs, lhs),
        };
        let base_from = match &step.mul_context {
            Some(m) => from.mul_monomial(m),
            None => (**from).clone(),
        };
        let base_to = match &step.mul_context {
            Some(m) => to.mul_monomial(m),
            None => (**to).clone(),
        };
        // cur must be base_from + s with s exactly the recorded context.
        let diff = cur
            .subterm_difference(&base_from)
            .map_err(|_| ReplayError::StepMismatch { step: stepno })?;
        let rest = match diff {
            SubtermDiff::NotContained => return Err(ReplayError::StepMismatch { step: stepno }),
            SubtermDiff::Contained(rest) => rest,
        };
        if rest != step.add_context {
            return Err(ReplayError::StepMismatch { step: stepno });
        }
        let next = match &step.add_context {
            Some(s) => base_to
                .add(s)
                .map_err(|_| ReplayError::StepMismatch { step: stepno })?,
            None => base_to,
        };
        if next != step.result {
            return Err(ReplayError::ResultMismatch { step: stepno });
        }
        cur = next;
    }
    Ok(cur)
}

impl core::error::Error for ProofParseError {}

impl core::error::Error for ReplayError {}
