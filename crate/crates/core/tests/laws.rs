//! Structural laws checked exhaustively at desk scale: every commutative
//! semiring up to order 4 (one representative per isomorphism class), the
//! scalar action and its quotients, and the constructions built on top.

use num_bigint::BigUint;
use semiring_core::construct::{
    t_s_semiring, u_act, u_of_group, zero_mult_semiring, AbelianGroup, SOrO, UElement,
};
use semiring_core::cyclic::factorial;
use semiring_core::finite::enumerate::{enumerate_semirings, SemiringFilter, Shard};
use semiring_core::finite::FiniteSemiring;
use std::collections::BTreeSet;

fn all_semirings(max_order: usize) -> Vec<FiniteSemiring> {
    let mut out = Vec::new();
    for n in 1..=max_order {
        enumerate_semirings(n, true, SemiringFilter::default(), Shard::default(), |s| {
            out.push(s.clone())
        })
        .unwrap();
    }
    out
}

/// Nonempty subsets of 0..n as index lists.
fn nonempty_subsets(n: usize) -> Vec<Vec<usize>> {
    (1..1usize << n)
        .map(|mask| (0..n).filter(|&i| mask & (1 << i) != 0).collect())
        .collect()
}

/// Every subsemiring generated by elements of additive order at most m is
/// uniformly torsion: with r = (m+1)!, 2r·b = r·b for each generated b, so
/// ord(b) never exceeds 2r − 1.
#[test]
fn uniform_torsion_bound_on_generated_subsemirings() {
    for s in all_semirings(4) {
        for seed in nonempty_subsets(s.order()) {
            let m = seed
                .iter()
                .map(|&a| s.element_order(a).ord())
                .max()
                .unwrap();
            let r = factorial(m + 1);
            let two_r = &r * 2u32;
            let bound = &two_r - 1u32;
            for b in s.generated_subsemiring(&seed) {
                assert_eq!(
                    s.scalar_mul_big(&two_r, b),
                    s.scalar_mul_big(&r, b),
                    "2r·b = r·b with r = ({m}+1)!"
                );
                assert!(BigUint::from(s.element_order(b).ord()) <= bound);
            }
        }
    }
}

/// The cyclic subsemigroup {b, 2b, 3b, …} has exactly index + period − 1
/// distinct members.
#[test]
fn orbit_sizes_match_reported_orders() {
    for s in all_semirings(4) {
        let range = s.scalar_decision_range();
        for b in 0..s.order() {
            let orbit: BTreeSet<usize> = (1..=2 * range).map(|k| s.scalar_mul(k, b)).collect();
            assert_eq!(orbit.len() as u64, s.element_order(b).ord());
        }
    }
}

/// Scalar cancellation in one-generated semirings: if m·a = m·b and w is a
/// scalar multiple of the same m, then a = b. Quantified over every element
/// triple and every scalar up to the decision range, with the scalars also
/// applied through the unital-extension action.
#[test]
fn scalar_cancellation_in_one_generated_semirings() {
    let mut checked = 0usize;
    for s in all_semirings(4) {
        for w in s.one_generated_witnesses() {
            let range = s.scalar_decision_range();
            for m in 1..=range {
                let scalar = UElement::new(BigUint::from(m), SOrO::O).unwrap();
                for c in 0..s.order() {
                    if s.scalar_mul(m, c) != w {
                        continue;
                    }
                    for a in 0..s.order() {
                        for b in 0..s.order() {
                            if s.scalar_mul(m, a) == s.scalar_mul(m, b) {
                                assert_eq!(a, b, "m·a = m·b and m·c = w force a = b");
                                assert_eq!(u_act(&s, &scalar, a), u_act(&s, &scalar, b));
                                checked += 1;
                            }
                        }
                    }
                }
            }
        }
    }
    assert!(checked > 0, "the sweep must not be vacuous");
}

/// A unital additively divisible finite semiring is additively idempotent.
#[test]
fn unital_divisible_semirings_are_idempotent() {
    for s in all_semirings(4) {
        if s.unit().is_some() && s.is_add_divisible() {
            assert!(
                s.is_add_idempotent(),
                "order {} table {:?}",
                s.order(),
                s.add_table()
            );
        }
    }
}

/// In a uniquely divisible finite semiring, multiplicative idempotents are
/// additive idempotents — there is no witness separating the two notions.
#[test]
fn uniquely_divisible_multiplicative_idempotents_are_additive() {
    for s in all_semirings(4) {
        if !s.is_uniquely_divisible() {
            continue;
        }
        for x in 0..s.order() {
            if s.mul(x, x) == x {
                assert_eq!(s.add(x, x), x);
            }
        }
    }
}

/// σ is always a congruence whose quotient is additively idempotent (hence
/// uniquely divisible at finite scale), and it is the least congruence with
/// an additively idempotent quotient: every such congruence contains it and
/// σ of the quotient by σ is the identity.
#[test]
fn sigma_is_the_least_idempotent_collapse() {
    for s in all_semirings(4) {
        let sigma = s.sigma_congruence();
        assert!(s.is_congruence(&sigma));
        let quotient = s.quotient(&sigma).unwrap();
        assert!(quotient.is_add_idempotent());
        assert!(quotient.is_uniquely_divisible());
        assert!(quotient.sigma_congruence().is_identity());

        let mut idempotent_quotients = 0usize;
        for c in s.enumerate_congruences().unwrap() {
            let q = s.quotient(&c).unwrap();
            if q.is_add_idempotent() {
                idempotent_quotients += 1;
                assert!(sigma.refines(&c), "every idempotent collapse contains σ");
            }
        }
        // σ itself is among them, so the minimum is attained and unique.
        assert!(idempotent_quotients >= 1);
    }
}

/// The semiring of scalar-action maps on a one-generated semiring: a valid
/// semiring with the identity map as unit, generated by the identity and
/// multiplication-by-the-generator, and additively idempotent exactly when
/// the underlying semiring is.
#[test]
fn action_semiring_laws_on_one_generated_semirings() {
    let mut seen = 0usize;
    for s in all_semirings(3) {
        for w in s.one_generated_witnesses() {
            let ts = t_s_semiring(&s, w).unwrap();
            let t = &ts.semiring;
            assert!(t.is_valid());
            assert_eq!(t.unit(), Some(ts.id));
            assert_eq!(t.is_add_idempotent(), s.is_add_idempotent());
            assert_eq!(
                t.generated_subsemiring(&[ts.id, ts.phi_w]).len(),
                t.order(),
                "id and the generator map generate everything"
            );
            seen += 1;
        }
    }
    assert!(seen > 0);
}

/// The unital cover of a small abelian group is ideal-simple and never
/// additively idempotent.
#[test]
fn unital_covers_of_groups_are_ideal_simple() {
    let z2xz2 = AbelianGroup::cyclic(2).direct_product(&AbelianGroup::cyclic(2));
    let groups = [
        AbelianGroup::cyclic(1),
        AbelianGroup::cyclic(2),
        AbelianGroup::cyclic(3),
        AbelianGroup::cyclic(4),
        z2xz2,
    ];
    for g in &groups {
        let s = u_of_group(g);
        assert!(s.is_valid());
        assert_eq!(s.order(), g.order() + 1);
        assert!(s.is_ideal_simple().unwrap());
        assert!(!s.is_add_idempotent());
    }
}

/// Zero-multiplication semirings on cyclic p-groups: valid, torsion, never
/// additively idempotent nor divisible (for a nontrivial group), but every
/// division request is answered one level up the cyclic tower.
#[test]
fn zero_multiplication_towers_divide_one_level_up() {
    for (p, k) in [(2u64, 1u32), (2, 2), (2, 3), (3, 1)] {
        {
            let size = p.pow(k);
            let g = AbelianGroup::cyclic(size);
            let s = zero_mult_semiring(&g);
            assert!(s.is_valid());
            assert_eq!(s.torsion_ideal().len(), s.order());
            assert!(!s.is_add_idempotent());
            assert!(!s.is_add_divisible());

            for n in [2u64, 3, 4, 6, p, p * p] {
                let v = {
                    let mut v = 0u32;
                    let mut m = n;
                    while m % p == 0 {
                        m /= p;
                        v += 1;
                    }
                    v
                };
                let tower = AbelianGroup::cyclic(p.pow(k + v));
                // x (index i in Z_{p^k}) embeds as i·p^v one level up.
                for i in 0..size {
                    let target = (i as usize) * p.pow(v) as usize;
                    let witness = (0..tower.order()).find(|&b| {
                        let mut acc = tower.identity();
                        for _ in 0..n {
                            acc = tower.op(acc, b);
                        }
                        acc == target
                    });
                    assert!(witness.is_some(), "p={p} k={k} n={n} i={i}");
                }
            }
        }
    }
}
