//! Canonical terms of the free commutative semiring on a fixed generator set.
//!
//! A term is a formal sum `c1*m1 + ... + ck*mk` with positive integer
//! coefficients and distinct monomials, kept sorted in ascending graded-lex
//! order. There is no zero term and no empty monomial sum: the free structure
//! here has no neutral elements unless a presentation is explicitly unital,
//! in which case the constant monomial (all exponents zero) becomes legal and
//! plays the role of `1`.

use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use smallvec::SmallVec;

/// Exponent vector storage; four generators inline covers every realistic
/// presentation without a heap hop.
pub type Exponents = SmallVec<[u64; 4]>;

/// A power product of generators, e.g. `w^2*v`. The vector length is the
/// generator count of the ambient presentation and never changes.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    exps: Exponents,
}

impl Monomial {
    /// Monomial from an explicit exponent vector.
    pub fn new(exps: impl IntoIterator<Item = u64>) -> Self {
        Monomial {
            exps: exps.into_iter().collect(),
        }
    }

    /// The generator `x_i` among `arity` generators.
    pub fn generator(arity: usize, i: usize) -> Self {
        assert!(i < arity, "generator index out of range");
        let mut exps: Exponents = SmallVec::new();
        exps.resize(arity, 0);
        exps[i] = 1;
        Monomial { exps }
    }

    /// The constant monomial (all exponents zero). Only meaningful in unital
    /// presentations, where it denotes `1`.
    pub fn constant(arity: usize) -> Self {
        let mut exps: Exponents = SmallVec::new();
        exps.resize(arity, 0);
        Monomial { exps }
    }

    pub fn arity(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u64] {
        &self.exps
    }

    /// Sum of exponents. Panics on overflow, which no bounded search can hit.
    pub fn total_degree(&self) -> u64 {
        self.exps
            .iter()
            .try_fold(0u64, |a, &e| a.checked_add(e))
            .expect("monomial degree overflow")
    }

    pub fn is_constant(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Product of two monomials (exponent-wise sum).
    pub fn mul(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.arity(), other.arity(), "monomial arity mismatch");
        let exps = self
            .exps
            .iter()
            .zip(other.exps.iter())
            .map(|(&a, &b)| a.checked_add(b).expect("monomial exponent overflow"))
            .collect();
        Monomial { exps }
    }

    /// Multiply by a single generator.
    pub fn mul_generator(&self, i: usize) -> Monomial {
        let mut m = self.clone();
        m.exps[i] = m.exps[i]
            .checked_add(1)
            .expect("monomial exponent overflow");
        m
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Graded lexicographic order: total degree first, then the exponent vector
/// lexicographically. This is the canonical ordering used everywhere.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.arity(), other.arity());
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

/// Errors from term construction and arithmetic.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum TermError {
    /// Operands live over different generator counts.
    ArityMismatch { left: usize, right: usize },
    /// A coefficient of zero was supplied; terms store strictly positive ones.
    ZeroCoefficient,
    /// No summands at all; there is no zero term.
    Empty,
}

impl fmt::Display for TermError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TermError::ArityMismatch { left, right } => {
                write!(f, "arity mismatch: {left} vs {right} generators")
            }
            TermError::ZeroCoefficient => write!(f, "zero coefficient in term"),
            TermError::Empty => write!(f, "empty term"),
        }
    }
}

/// Result of [`PolyTerm::subterm_difference`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SubtermDiff {
    /// `l` is not coefficient-wise contained in `t`.
    NotContained,
    /// `t = l + r`; the remainder is `None` exactly when `t = l`.
    Contained(Option<PolyTerm>),
}

/// A canonical term: non-empty sorted vector of `(monomial, coefficient)`
/// pairs, monomials strictly ascending, coefficients strictly positive, all
/// monomials of equal arity.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyTerm {
    terms: Vec<(Monomial, BigUint)>,
}

impl PolyTerm {
    /// Canonicalize an arbitrary pile of summands: sort, merge duplicates.
    /// Rejects empty input, zero coefficients, and mixed arities.
    pub fn from_parts(parts: Vec<(Monomial, BigUint)>) -> Result<Self, TermError> {
        if parts.is_empty() {
            return Err(TermError::Empty);
        }
        let arity = parts[0].0.arity();
        for (m, c) in &parts {
            if m.arity() != arity {
                return Err(TermError::ArityMismatch {
                    left: arity,
                    right: m.arity(),
                });
            }
            if c.is_zero() {
                return Err(TermError::ZeroCoefficient);
            }
        }
        let mut parts = parts;
        parts.sort_by(|a, b| a.0.cmp(&b.0));
        let mut out: Vec<(Monomial, BigUint)> = Vec::with_capacity(parts.len());
        for (m, c) in parts {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc += c,
                _ => out.push((m, c)),
            }
        }
        Ok(PolyTerm { terms: out })
    }

    /// The term consisting of a single monomial with coefficient one.
    pub fn monomial(m: Monomial) -> Self {
        PolyTerm {
            terms: alloc::vec![(m, BigUint::one())],
        }
    }

    /// The bare generator `x_i`.
    pub fn generator(arity: usize, i: usize) -> Self {
        PolyTerm::monomial(Monomial::generator(arity, i))
    }

    /// The unital constant `1`.
    pub fn constant(arity: usize) -> Self {
        PolyTerm::monomial(Monomial::constant(arity))
    }

    pub fn arity(&self) -> usize {
        self.terms[0].0.arity()
    }

    /// Summands in ascending monomial order.
    pub fn parts(&self) -> &[(Monomial, BigUint)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Degree of the term: maximal monomial degree.
    pub fn total_degree(&self) -> u64 {
        // Monomials are graded-sorted, so the last one is maximal.
        self.terms.last().expect("non-empty").0.total_degree()
    }

    /// Largest coefficient.
    pub fn max_coeff(&self) -> &BigUint {
        self.terms.iter().map(|(_, c)| c).max().expect("non-empty")
    }

    pub fn coeff_of(&self, m: &Monomial) -> Option<&BigUint> {
        self.terms
            .binary_search_by(|(tm, _)| tm.cmp(m))
            .ok()
            .map(|i| &self.terms[i].1)
    }

    fn check_arity(&self, other: &PolyTerm) -> Result<(), TermError> {
        if self.arity() != other.arity() {
            return Err(TermError::ArityMismatch {
                left: self.arity(),
                right: other.arity(),
            });
        }
        Ok(())
    }

    /// Sum of two terms: merge of the sorted summand lists.
    pub fn add(&self, other: &PolyTerm) -> Result<PolyTerm, TermError> {
        self.check_arity(other)?;
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0.clone(), &a[i].1 + &b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Ok(PolyTerm { terms: out })
    }

    /// Product of two terms, fully distributed and re-canonicalized.
    pub fn mul(&self, other: &PolyTerm) -> Result<PolyTerm, TermError> {
        self.check_arity(other)?;
        let mut acc: alloc::collections::BTreeMap<Monomial, BigUint> =
            alloc::collections::BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let c = ca * cb;
                match acc.get_mut(&m) {
                    Some(e) => *e += c,
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        Ok(PolyTerm {
            terms: acc.into_iter().collect(),
        })
    }

    /// Scalar multiple `n*t` for `n >= 1`.
    pub fn scale(&self, n: &BigUint) -> PolyTerm {
        assert!(
            !n.is_zero(),
            "scale by zero has no meaning without a zero term"
        );
        if n.is_one() {
            return self.clone();
        }
        PolyTerm {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * n)).collect(),
        }
    }

    /// Multiply by a single monomial. Order-preserving, so no re-sort.
    pub fn mul_monomial(&self, m: &Monomial) -> PolyTerm {
        if m.is_constant() {
            return self.clone();
        }
        PolyTerm {
            terms: self
                .terms
                .iter()
                .map(|(tm, c)| (tm.mul(m), c.clone()))
                .collect(),
        }
    }

    /// Add a single monomial with coefficient one.
    pub fn add_monomial(&self, m: &Monomial) -> PolyTerm {
        let mut terms = self.terms.clone();
        match terms.binary_search_by(|(tm, _)| tm.cmp(m)) {
            Ok(i) => terms[i].1 += 1u32,
            Err(i) => terms.insert(i, (m.clone(), BigUint::one())),
        }
        PolyTerm { terms }
    }

    /// Coefficient-wise containment test with exact remainder: decides
    /// whether `self = l + r` for some (possibly absent) `r`.
    pub fn subterm_difference(&self, l: &PolyTerm) -> Result<SubtermDiff, TermError> {
        self.check_arity(l)?;
        let mut rem: Vec<(Monomial, BigUint)> = Vec::with_capacity(self.terms.len());
        let mut j = 0;
        for (m, c) in &self.terms {
            if j < l.terms.len() && l.terms[j].0 == *m {
                let lc = &l.terms[j].1;
                match c.cmp(lc) {
                    Ordering::Less => return Ok(SubtermDiff::NotContained),
                    Ordering::Equal => {}
                    Ordering::Greater => rem.push((m.clone(), c - lc)),
                }
                j += 1;
            } else {
                rem.push((m.clone(), c.clone()));
            }
        }
        if j < l.terms.len() {
            // Some monomial of l is missing from self entirely.
            return Ok(SubtermDiff::NotContained);
        }
        if rem.is_empty() {
            Ok(SubtermDiff::Contained(None))
        } else {
            Ok(SubtermDiff::Contained(Some(PolyTerm { terms: rem })))
        }
    }

    /// Exact division of every coefficient by `n`, if possible.
    pub fn div_exact(&self, n: &BigUint) -> Option<PolyTerm> {
        assert!(!n.is_zero());
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let (q, r) = num_integer::Integer::div_rem(c, n);
            if !r.is_zero() {
                return None;
            }
            terms.push((m.clone(), q));
        }
        Some(PolyTerm { terms })
    }

    /// Render against generator names; `names.len()` must equal the arity.
    pub fn display<'a, S: AsRef<str>>(&'a self, names: &'a [S]) -> TermDisplay<'a, S> {
        assert_eq!(names.len(), self.arity(), "generator name count mismatch");
        TermDisplay { term: self, names }
    }
}

/// Canonical total order on terms: degree, then summand count, then the
/// sorted summand sequence. Any total order would do for determinism; this
/// one keeps "smaller" terms intuitively simple.
impl Ord for PolyTerm {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.terms.len().cmp(&other.terms.len()))
            .then_with(|| {
                for ((ma, ca), (mb, cb)) in self.terms.iter().zip(other.terms.iter()) {
                    let o = ma.cmp(mb).then_with(|| ca.cmp(cb));
                    if o != Ordering::Equal {
                        return o;
                    }
                }
                Ordering::Equal
            })
    }
}

impl PartialOrd for PolyTerm {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Displays a term in the canonical concrete syntax: summands ascending,
/// coefficient juxtaposed (`2w`), factors joined by `*` without spaces
/// (`w*v^2`), ` + ` between summands. The constant monomial prints as a bare
/// integer.
pub struct TermDisplay<'a, S: AsRef<str>> {
    term: &'a PolyTerm,
    names: &'a [S],
}

impl<S: AsRef<str>> fmt::Display for TermDisplay<'_, S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, (m, c)) in self.term.terms.iter().enumerate() {
            if idx > 0 {
                f.write_str(" + ")?;
            }
            let constant = m.is_constant();
            if !c.is_one() || constant {
                write!(f, "{c}")?;
            }
            let mut first = true;
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !first {
                    f.write_str("*")?;
                }
                first = false;
                f.write_str(self.names[i].as_ref())?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

/// Where and why a term failed to parse.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TermParseError {
    /// Byte offset into the input.
    pub offset: usize,
    pub kind: TermParseErrorKind,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum TermParseErrorKind {
    UnexpectedEnd,
    UnexpectedChar(char),
    UnknownGenerator(String),
    ZeroCoefficient,
    ZeroExponent,
    /// Exponent literal does not fit the in-memory representation.
    ExponentOverflow,
    /// A bare integer summand is only legal in unital presentations.
    ConstantNotAllowed,
}

impl fmt::Display for TermParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at byte {}: ", self.offset)?;
        match &self.kind {
            TermParseErrorKind::UnexpectedEnd => write!(f, "unexpected end of input"),
            TermParseErrorKind::UnexpectedChar(c) => write!(f, "unexpected character {c:?}"),
            TermParseErrorKind::UnknownGenerator(g) => write!(f, "unknown generator {g:?}"),
            TermParseErrorKind::ZeroCoefficient => write!(f, "coefficients must be >= 1"),
            TermParseErrorKind::ZeroExponent => write!(f, "exponents must be >= 1"),
            TermParseErrorKind::ExponentOverflow => write!(f, "exponent too large"),
            TermParseErrorKind::ConstantNotAllowed => {
                write!(f, "constant summand requires a unital presentation")
            }
        }
    }
}

struct Lexer<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn skip_ws(&mut self) {
        let rest = &self.src[self.pos..];
        let trimmed = rest.trim_start();
        self.pos += rest.len() - trimmed.len();
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    fn take_integer(&mut self) -> Option<(usize, &'a str)> {
        self.skip_ws();
        let start = self.pos;
        let rest = &self.src[start..];
        let end = rest
            .find(|c: char| !c.is_ascii_digit())
            .unwrap_or(rest.len());
        if end == 0 {
            return None;
        }
        self.pos = start + end;
        Some((start, &rest[..end]))
    }

    fn take_ident(&mut self) -> Option<(usize, &'a str)> {
        self.skip_ws();
        let start = self.pos;
        let rest = &self.src[start..];
        let mut chars = rest.char_indices();
        match chars.next() {
            Some((_, c)) if c.is_ascii_alphabetic() || c == '_' => {}
            _ => return None,
        }
        let end = rest
            .char_indices()
            .find(|&(i, c)| i > 0 && !(c.is_ascii_alphanumeric() || c == '_'))
            .map(|(i, _)| i)
            .unwrap_or(rest.len());
        self.pos = start + end;
        Some((start, &rest[..end]))
    }
}

fn err(offset: usize, kind: TermParseErrorKind) -> TermParseError {
    TermParseError { offset, kind }
}

/// Parse the concrete term syntax against a generator list.
///
/// Grammar: `term := summand ('+' summand)*`,
/// `summand := [coeff '*'?] factor ('*' factor)* | coeff`,
/// `factor := generator ['^' exponent]`, with `coeff, exponent >= 1`.
/// The bare-`coeff` summand form is accepted only when `unital` is set.
pub fn parse_term<S: AsRef<str>>(
    src: &str,
    names: &[S],
    unital: bool,
) -> Result<PolyTerm, TermParseError> {
    let arity = names.len();
    let mut lx = Lexer { src, pos: 0 };
    let mut parts: Vec<(Monomial, BigUint)> = Vec::new();
    loop {
        let (coeff, saw_coeff) = match lx.take_integer() {
            Some((off, digits)) => {
                let c: BigUint = digits.parse().expect("digits parse");
                if c.is_zero() {
                    return Err(err(off, TermParseErrorKind::ZeroCoefficient));
                }
                // Optional '*' between coefficient and first factor.
                if lx.peek() == Some('*') {
                    lx.bump();
                }
                (c, true)
            }
            None => (BigUint::one(), false),
        };
        // Collect factors.
        let mut exps: Exponents = SmallVec::new();
        exps.resize(arity, 0);
        let mut saw_factor = false;
        while let Some((off, name)) = lx.take_ident() {
            let gi = names
                .iter()
                .position(|n| n.as_ref() == name)
                .ok_or_else(|| {
                    err(
                        off,
                        TermParseErrorKind::UnknownGenerator(String::from(name)),
                    )
                })?;
            let mut e: u64 = 1;
            if lx.peek() == Some('^') {
                lx.bump();
                let (eoff, digits) = lx
                    .take_integer()
                    .ok_or_else(|| err(lx.pos, TermParseErrorKind::UnexpectedEnd))?;
                e = digits
                    .parse()
                    .map_err(|_| err(eoff, TermParseErrorKind::ExponentOverflow))?;
                if e == 0 {
                    return Err(err(eoff, TermParseErrorKind::ZeroExponent));
                }
            }
            exps[gi] = exps[gi]
                .checked_add(e)
                .ok_or_else(|| err(off, TermParseErrorKind::ExponentOverflow))?;
            saw_factor = true;
            // Optional '*' before the next factor; juxtaposed identifiers
            // ("w v") are not factors of the same summand.
            if lx.peek() == Some('*') {
                lx.bump();
            } else {
                break;
            }
        }
        if !saw_factor {
            if !saw_coeff {
                let k = match lx.peek() {
                    Some(c) => TermParseErrorKind::UnexpectedChar(c),
                    None => TermParseErrorKind::UnexpectedEnd,
                };
                return Err(err(lx.pos, k));
            }
            if !unital {
                return Err(err(lx.pos, TermParseErrorKind::ConstantNotAllowed));
            }
        }
        parts.push((Monomial { exps }, coeff));
        match lx.peek() {
            Some('+') => {
                lx.bump();
            }
            Some(c) => return Err(err(lx.pos, TermParseErrorKind::UnexpectedChar(c))),
            None => break,
        }
    }
    Ok(PolyTerm::from_parts(parts).expect("parser yields valid parts"))
}

impl core::error::Error for TermError {}

impl core::error::Error for TermParseError {}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn t(src: &str) -> PolyTerm {
        parse_term(src, &["w"], false).unwrap()
    }

    fn t2(src: &str) -> PolyTerm {
        parse_term(src, &["w", "v"], false).unwrap()
    }

    fn show(p: &PolyTerm) -> String {
        p.display(&["w"]).to_string()
    }

    #[test]
    fn add_merges_coefficients() {
        assert_eq!(t("w").add(&t("w")).unwrap(), t("2w"));
        assert_eq!(t("w + w^2").add(&t("3w^2")).unwrap(), t("w + 4w^2"));
    }

    #[test]
    fn mul_distributes() {
        assert_eq!(t("w + w^2").mul(&t("2w")).unwrap(), t("2w^2 + 2w^3"));
        assert_eq!(
            t2("w + v").mul(&t2("w + v")).unwrap(),
            t2("w^2 + 2w*v + v^2")
        );
    }

    #[test]
    fn scale_multiplies_coefficients() {
        let three = BigUint::from(3u32);
        assert_eq!(t("w + w^3").scale(&three), t("3w + 3w^3"));
    }

    #[test]
    fn subterm_difference_examples() {
        assert_eq!(
            t("20w + 2w^2").subterm_difference(&t("2w + 2w^2")).unwrap(),
            SubtermDiff::Contained(Some(t("18w")))
        );
        assert_eq!(
            t("w").subterm_difference(&t("w^2")).unwrap(),
            SubtermDiff::NotContained
        );
        assert_eq!(
            t("3w").subterm_difference(&t("3w")).unwrap(),
            SubtermDiff::Contained(None)
        );
        assert_eq!(
            t("3w").subterm_difference(&t("4w")).unwrap(),
            SubtermDiff::NotContained
        );
    }

    #[test]
    fn parse_accepts_grammar_forms() {
        assert_eq!(t("2w^2 + 3w"), t("3w + 2w^2"));
        assert_eq!(show(&t("2w^2 + 3w")), "3w + 2w^2");
        assert_eq!(t("2*w"), t("2w"));
        assert_eq!(t2("w*v^2"), t2("v^2*w"));
        assert_eq!(show(&t("w + w + w")), "3w");
    }

    #[test]
    fn parse_rejects_bad_input() {
        assert!(matches!(
            parse_term::<&str>("0w", &["w"], false).unwrap_err().kind,
            TermParseErrorKind::ZeroCoefficient
        ));
        assert!(matches!(
            parse_term::<&str>("w^0", &["w"], false).unwrap_err().kind,
            TermParseErrorKind::ZeroExponent
        ));
        assert!(matches!(
            parse_term::<&str>("v", &["w"], false).unwrap_err().kind,
            TermParseErrorKind::UnknownGenerator(_)
        ));
        assert!(matches!(
            parse_term::<&str>("3", &["w"], false).unwrap_err().kind,
            TermParseErrorKind::ConstantNotAllowed
        ));
        assert!(matches!(
            parse_term::<&str>("", &["w"], false).unwrap_err().kind,
            TermParseErrorKind::UnexpectedEnd
        ));
        assert!(matches!(
            parse_term::<&str>("w + + w", &["w"], false)
                .unwrap_err()
                .kind,
            TermParseErrorKind::UnexpectedChar('+')
        ));
    }

    #[test]
    fn unital_constant_roundtrip() {
        let one = parse_term("1", &["w"], true).unwrap();
        assert_eq!(one, PolyTerm::constant(1));
        assert_eq!(one.display(&["w"]).to_string(), "1");
        let c = parse_term("3 + 2w", &["w"], true).unwrap();
        assert_eq!(c.display(&["w"]).to_string(), "3 + 2w");
        // 1 * w = w under monomial multiplication.
        assert_eq!(
            one.mul(&parse_term("w", &["w"], true).unwrap()).unwrap(),
            t("w")
        );
    }

    #[test]
    fn graded_lex_order() {
        assert!(t("w") < t("w^2"));
        assert!(t("2w") < t("w^2"));
        // Lex tiebreak on exponent vectors: v = [0,1] sorts before w = [1,0].
        assert!(t2("v") < t2("w"));
        // Graded: w*v (deg 2) sorts above both generators.
        assert!(t2("w") < t2("w*v"));
        let p = t2("v + w + w*v");
        let names = ["w", "v"];
        assert_eq!(p.display(&names).to_string(), "v + w + w*v");
    }

    #[test]
    fn canonicalization_is_idempotent() {
        let p = t("5w + 2w^2 + 3w^3");
        let again = PolyTerm::from_parts(p.parts().to_vec()).unwrap();
        assert_eq!(p, again);
    }

    #[test]
    fn div_exact_behaviour() {
        let two = BigUint::from(2u32);
        assert_eq!(t("4w + 2w^2").div_exact(&two), Some(t("2w + w^2")));
        assert_eq!(t("3w").div_exact(&two), None);
    }

    #[test]
    fn mul_monomial_and_add_monomial() {
        let m = Monomial::generator(1, 0);
        assert_eq!(t("w + 2w^2").mul_monomial(&m), t("w^2 + 2w^3"));
        assert_eq!(t("w").add_monomial(&m), t("2w"));
        assert_eq!(t("w^2").add_monomial(&m), t("w + w^2"));
    }
}
