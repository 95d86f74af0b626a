//! Randomized algebraic properties of the term layer, plus the engine's
//! conservativity over a relation-free presentation.

use num_bigint::BigUint;
use proptest::prelude::*;
use semiring_core::engine::{prove_equal, Budget, Presentation};
use semiring_core::term::{parse_term, Monomial, PolyTerm, SubtermDiff};

const ARITY: usize = 2;
const NAMES: [&str; ARITY] = ["w", "v"];

fn arb_monomial() -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0u64..3, ARITY).prop_map(Monomial::new)
}

fn arb_term() -> impl Strategy<Value = PolyTerm> {
    prop::collection::vec((arb_monomial(), 1u64..12), 1..5).prop_map(|parts| {
        PolyTerm::from_parts(
            parts
                .into_iter()
                .map(|(m, c)| (m, BigUint::from(c)))
                .collect(),
        )
        .unwrap()
    })
}

proptest! {
    #[test]
    fn canonical_form_ignores_summand_order(t in arb_term()) {
        let mut parts = t.parts().to_vec();
        parts.reverse();
        prop_assert_eq!(PolyTerm::from_parts(parts).unwrap(), t);
    }

    #[test]
    fn addition_commutes_and_associates(a in arb_term(), b in arb_term(), c in arb_term()) {
        prop_assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
        prop_assert_eq!(
            a.add(&b).unwrap().add(&c).unwrap(),
            a.add(&b.add(&c).unwrap()).unwrap()
        );
    }

    #[test]
    fn multiplication_commutes_associates_distributes(
        a in arb_term(),
        b in arb_term(),
        c in arb_term(),
    ) {
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        prop_assert_eq!(
            a.mul(&b).unwrap().mul(&c).unwrap(),
            a.mul(&b.mul(&c).unwrap()).unwrap()
        );
        prop_assert_eq!(
            a.mul(&b.add(&c).unwrap()).unwrap(),
            a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
        );
    }

    #[test]
    fn monomial_product_matches_term_product(t in arb_term(), m in arb_monomial()) {
        prop_assert_eq!(t.mul_monomial(&m), t.mul(&PolyTerm::monomial(m)).unwrap());
    }

    #[test]
    fn display_then_parse_is_identity(t in arb_term()) {
        let text = t.display(&NAMES).to_string();
        let back = parse_term(&text, &NAMES, true).unwrap();
        prop_assert_eq!(back, t);
    }

    #[test]
    fn scaling_is_repeated_addition_and_divides_back(t in arb_term(), n in 1u64..6) {
        let big = BigUint::from(n);
        let mut sum = t.clone();
        for _ in 1..n {
            sum = sum.add(&t).unwrap();
        }
        let scaled = t.scale(&big);
        prop_assert_eq!(&scaled, &sum);
        prop_assert_eq!(scaled.div_exact(&big), Some(t.clone()));
        if let Some(q) = t.div_exact(&big) {
            prop_assert_eq!(q.scale(&big), t);
        }
    }

    #[test]
    fn subterm_difference_inverts_addition(l in arb_term(), r in arb_term()) {
        let whole = l.add(&r).unwrap();
        prop_assert_eq!(
            whole.subterm_difference(&l).unwrap(),
            SubtermDiff::Contained(Some(r))
        );
        prop_assert_eq!(
            l.subterm_difference(&l).unwrap(),
            SubtermDiff::Contained(None)
        );
        match l.subterm_difference(&whole).unwrap() {
            // Only possible when r's summands all merged into l's: never,
            // since coefficients only grow. l ≠ l + r always.
            SubtermDiff::Contained(_) => prop_assert!(false, "l cannot contain l + r"),
            SubtermDiff::NotContained => {}
        }
    }

    #[test]
    fn term_order_is_total_and_graded(a in arb_term(), b in arb_term()) {
        prop_assert_eq!(a.cmp(&b), b.cmp(&a).reverse());
        prop_assert_eq!(a.cmp(&b) == std::cmp::Ordering::Equal, a == b);
        let (ma, mb) = (
            a.parts().last().unwrap().0.clone(),
            b.parts().last().unwrap().0.clone(),
        );
        if ma.total_degree() < mb.total_degree() {
            prop_assert!(ma < mb, "monomial order is graded");
        }
    }

    /// Over a free presentation the engine never merges distinct terms, and
    /// equal terms are already equal with an empty derivation.
    #[test]
    fn free_presentation_proves_only_identities(a in arb_term(), b in arb_term()) {
        let free = Presentation::new(
            NAMES.iter().map(|s| s.to_string()).collect(),
            Vec::new(),
            true,
        )
        .unwrap();
        let budget = Budget { max_degree: 8, max_coeff: 64, ..Budget::REFERENCE };
        let outcome = prove_equal(&free, &a, &b, &budget).unwrap();
        match outcome.found() {
            Some(derivation) => {
                prop_assert_eq!(&a, &b);
                prop_assert!(derivation.steps.is_empty());
            }
            None => prop_assert_ne!(&a, &b),
        }
    }
}
