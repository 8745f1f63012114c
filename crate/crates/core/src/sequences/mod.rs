//! Exact evaluation of every sequence family: harmonic numbers of any order,
//! odd harmonic numbers, multiple harmonic-like numbers `H_n(m)`, signed
//! Stirling numbers of the first kind, hyperharmonic numbers (integer and
//! half-integer order), Fibonacci and Lucas numbers, and the half-integer
//! harmonic offsets `Ĥ_n`.
//!
//! The free functions evaluate through [`SeqCache::global`]; pass an explicit
//! [`SeqCache`] when isolation matters.

mod bruteforce;
mod cache;
mod family;

pub use bruteforce::{
    harmonic_like_bruteforce, harmonic_like_bruteforce_with_ceiling, BoundedCompositions,
    DEFAULT_TUPLE_CEILING,
};
pub use cache::{half_harmonic_diff, SeqCache};
pub use family::{Family, SeqSpec, Sequence};

use num_bigint::BigInt;
use thiserror::Error;

use crate::exact_math::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeqError {
    #[error("unknown sequence family {0:?}")]
    UnknownFamily(String),
    #[error("family {family} requires parameter {param}")]
    MissingParam {
        family: &'static str,
        param: &'static str,
    },
    #[error("family {family} does not take parameter {param}")]
    UnexpectedParam { family: &'static str, param: String },
    #[error("invalid value {value} for {param}: {reason}")]
    InvalidParam {
        param: String,
        value: i64,
        reason: String,
    },
    #[error("domain error: {0}")]
    Domain(String),
    #[error("enumeration of {tuples} tuples exceeds the ceiling of {ceiling}")]
    TooExpensive { tuples: String, ceiling: u64 },
}

pub fn harmonic(n: u64) -> Rational {
    SeqCache::global().harmonic(n)
}

pub fn harmonic_order(n: u64, r: u32) -> Rational {
    SeqCache::global().harmonic_order(n, r)
}

pub fn odd_harmonic(n: u64) -> Rational {
    SeqCache::global().odd_harmonic(n)
}

pub fn harmonic_like(n: u64, m: u64) -> Rational {
    SeqCache::global().harmonic_like(n, m)
}

pub fn stirling1(n: u64, k: u64) -> BigInt {
    SeqCache::global().stirling1(n, k)
}

pub fn hyperharmonic(n: u64, p: u64) -> Result<Rational, SeqError> {
    SeqCache::global().hyperharmonic(n, p)
}

pub fn hyperharmonic_half(r: u64, p: u64) -> Rational {
    SeqCache::global().hyperharmonic_half(r, p)
}

pub fn half_harmonic_offset(n: u64) -> Rational {
    SeqCache::global().half_harmonic_offset(n)
}

/// `F_0 = 0, F_1 = 1`.
pub fn fibonacci(n: u64) -> BigInt {
    linear_recurrence(BigInt::ZERO, BigInt::from(1), n)
}

/// `L_0 = 2, L_1 = 1`.
pub fn lucas(n: u64) -> BigInt {
    linear_recurrence(BigInt::from(2), BigInt::from(1), n)
}

fn linear_recurrence(first: BigInt, second: BigInt, n: u64) -> BigInt {
    let (mut a, mut b) = (first, second);
    for _ in 0..n {
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
    a
}
