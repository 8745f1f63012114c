//! Exact integer and rational substrate: [`Rational`], factorials, ordinary and
//! generalized binomial coefficients.

mod rational;

pub use rational::Rational;

use num_bigint::{BigInt, BigUint};
use num_traits::One;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MathError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse {0:?} as a rational (expected p or p/q)")]
    Parse(String),
}

/// `n!` as an arbitrary-precision integer.
pub fn factorial(n: u64) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::ZERO;
    }
    let k = k.min(n - k);
    // each partial product C(n-k+i, i) is an integer, so the division is exact
    let mut acc = BigUint::one();
    for i in 1..=k {
        acc = acc * (n - k + i) / i;
    }
    acc.into()
}

/// `C(n, k)` for signed arguments with `n >= 0`; zero outside `0 <= k <= n`.
pub fn choose(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::ZERO;
    }
    binomial(n as u64, k as u64)
}

/// `x (x-1) ... (x-k+1) / k!` for rational `x`; `gen_binomial(x, 0) = 1`.
pub fn gen_binomial(x: &Rational, k: u64) -> Rational {
    let mut falling = Rational::one();
    for i in 0..k {
        falling *= x - Rational::from(i);
    }
    // k! is never zero
    falling / Rational::from(factorial(k))
}

/// `(-1)^k` as a rational.
pub fn sign(k: i64) -> Rational {
    if k.rem_euclid(2) == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}
