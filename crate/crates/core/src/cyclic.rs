//! Index/period arithmetic for cyclic additive orbits.
//!
//! In a semigroup the orbit `a, 2a, 3a, …` of an element is either infinite
//! or eventually periodic: there are minimal `k ≥ 1` (index) and `t ≥ 1`
//! (period) with `(k+t)a = ka`. The orbit then has exactly `k + t − 1`
//! distinct members. The corresponding congruence of the additive naturals,
//! relating `m` and `n` iff `m = n` or (`m, n ≥ k` and `t | m − n`), is
//! written ρ(k,t) here; these, together with equality, are the only additive
//! congruences of the positive naturals.

use num_bigint::BigUint;
use num_traits::One;

/// Shape of a cyclic additive orbit.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum CyclicType {
    /// Eventually periodic with the given index and period.
    Finite { index: u64, period: u64 },
    /// The orbit never repeats.
    Infinite,
}

impl CyclicType {
    pub fn finite(index: u64, period: u64) -> Self {
        assert!(index >= 1 && period >= 1, "index and period are positive");
        CyclicType::Finite { index, period }
    }

    /// Number of distinct orbit members: `k + t − 1`, or `None` when infinite.
    pub fn ord(&self) -> Option<u64> {
        match *self {
            CyclicType::Finite { index, period } => Some(index + period - 1),
            CyclicType::Infinite => None,
        }
    }
}

/// Canonical representative of `m` modulo ρ(k,t): `m` itself when `m < k`,
/// otherwise the unique value in `k ..= k+t−1` congruent to `m` mod `t`.
///
/// Panics when `c` is infinite (every value is its own representative there,
/// and callers should not be reducing at all).
pub fn rho_reduce(m: &BigUint, c: CyclicType) -> BigUint {
    let (k, t) = match c {
        CyclicType::Finite { index, period } => (index, period),
        CyclicType::Infinite => panic!("rho_reduce on an infinite orbit"),
    };
    let kb = BigUint::from(k);
    if *m < kb {
        return m.clone();
    }
    &kb + (m - &kb) % BigUint::from(t)
}

/// Small-integer convenience wrapper over [`rho_reduce`].
pub fn rho_reduce_u64(m: u64, c: CyclicType) -> u64 {
    use core::convert::TryFrom;
    u64::try_from(&rho_reduce(&BigUint::from(m), c)).expect("fits: result ≤ m")
}

/// The relation ρ(k,t) itself.
pub fn rho_related(m: &BigUint, n: &BigUint, c: CyclicType) -> bool {
    rho_reduce(m, c) == rho_reduce(n, c)
}

/// Exact factorial.
pub fn factorial(m: u64) -> BigUint {
    let mut acc = BigUint::one();
    for i in 2..=m {
        acc *= BigUint::from(i);
    }
    acc
}

/// The uniform torsion bound: given that every generator of a subsemiring
/// has additive order at most `m`, returns `(r, n)` with `r = (m+1)!` such
/// that `2r·b = r·b` for every element `b` of the generated subsemiring, and
/// `ord(b) ≤ n = 2r − 1`.
pub fn uniform_order_bound(m: u64) -> (BigUint, BigUint) {
    assert!(m >= 1);
    let r = factorial(m + 1);
    let n = &r * 2u32 - 1u32;
    (r, n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn reduce_examples() {
        let c = CyclicType::finite(2, 3);
        assert_eq!(rho_reduce(&big(7), c), big(4));
        assert_eq!(rho_reduce(&big(1), c), big(1));
        assert_eq!(rho_reduce(&big(5), CyclicType::finite(1, 1)), big(1));
        // Idempotence of reduction.
        for m in 1..40u64 {
            let r = rho_reduce(&big(m), c);
            assert_eq!(rho_reduce(&r, c), r);
            assert!(rho_related(&big(m), &r, c));
        }
    }

    #[test]
    fn reduce_lands_in_window() {
        for k in 1..6u64 {
            for t in 1..6u64 {
                let c = CyclicType::finite(k, t);
                for m in 1..60u64 {
                    let r = rho_reduce_u64(m, c);
                    if m < k {
                        assert_eq!(r, m);
                    } else {
                        assert!(r >= k && r < k + t);
                        assert_eq!((m - r) % t, 0);
                    }
                }
            }
        }
    }

    #[test]
    fn rho_is_an_additive_and_multiplicative_congruence() {
        // Bounded check that a ≡ b implies a+c ≡ b+c and a·c ≡ b·c.
        for k in 1..5u64 {
            for t in 1..5u64 {
                let c = CyclicType::finite(k, t);
                for a in 1..25u64 {
                    for b in 1..25u64 {
                        if !rho_related(&big(a), &big(b), c) {
                            continue;
                        }
                        for x in 1..25u64 {
                            assert!(rho_related(&big(a + x), &big(b + x), c));
                            assert!(rho_related(&big(a * x), &big(b * x), c));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn ord_formula() {
        assert_eq!(CyclicType::finite(2, 3).ord(), Some(4));
        assert_eq!(CyclicType::finite(1, 1).ord(), Some(1));
        assert_eq!(CyclicType::Infinite.ord(), None);
    }

    #[test]
    fn torsion_bound_values() {
        assert_eq!(uniform_order_bound(1), (big(2), big(3)));
        assert_eq!(uniform_order_bound(2), (big(6), big(11)));
        assert_eq!(uniform_order_bound(3), (big(24), big(47)));
        // Arbitrary precision: (21)! does not fit in u64.
        let (r, n) = uniform_order_bound(20);
        assert!(r > BigUint::from(u64::MAX));
        assert_eq!(n, &r * 2u32 - 1u32);
    }
}
