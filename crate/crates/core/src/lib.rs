//! Exact arithmetic for multiple harmonic-like numbers `H_n(m)` and their
//! relatives, with a registry of identities checked by exact rational equality.
//!
//! - [`exact_math`]: canonical rationals, factorials, binomials.
//! - [`sequences`]: every sequence family, memoized in a [`sequences::SeqCache`].
//! - [`power_series`]: truncated series and generating-function oracles.
//! - [`transforms`]: binomial sums `S_n(a, b, m)` and binomial transforms.
//! - [`identities`]: the identity registry, verifier and telescoping checks.

pub mod exact_math;
pub mod identities;
pub mod power_series;
pub mod sequences;
pub mod transforms;

pub use exact_math::Rational;
