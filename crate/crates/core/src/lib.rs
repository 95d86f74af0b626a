//! Exact computation for commutative semirings presented by generators and
//! relations, plus analysis of finite semirings given by operation tables.
//!
//! The crate is `no_std` (with `alloc`) and splits into five areas:
//!
//! - [`term`]: canonical multivariate terms over the free commutative
//!   semiring — sorted monomial/coefficient vectors with exact arithmetic.
//! - [`cyclic`]: index/period bookkeeping for cyclic additive orbits and the
//!   congruences of the additive naturals they induce.
//! - [`engine`]: a bounded, proof-producing congruence closure over a
//!   relation presentation, with replayable derivations.
//! - [`finite`]: axiom checking, structural predicates, quotients and
//!   exhaustive enumeration for finite semirings and semigroups.
//! - [`construct`]: semiring constructions — unital extensions, variants on
//!   abelian groups, products, endomorphism semirings, quasicyclic groups.
//!
//! Everything is deterministic: no hashing with random state, no ambient
//! randomness, total orders everywhere a choice has to be made.

#![no_std]
#![deny(unsafe_code)]

extern crate alloc;

pub mod construct;
pub mod cyclic;
pub mod engine;
pub mod finite;
pub mod term;
