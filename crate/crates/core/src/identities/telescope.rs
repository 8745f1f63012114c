//! Summation-by-parts checks for arbitrary sequences. Each function evaluates
//! both sides of its telescoping relation exactly and returns `(lhs, rhs)`.

use crate::exact_math::{gen_binomial, sign, Rational};

type Seq<'a> = &'a dyn Fn(i64) -> Rational;

fn recip(k: i64) -> Rational {
    Rational::frac(1, k)
}

/// `sum_{k=1}^n H_k (a_{k+1} - a_k)` against `H_n a_{n+1} - sum_{k=1}^n a_k / k`.
/// Needs `a` on `1..=n+1`.
pub fn telescope_harmonic_check(a: Seq<'_>, n: u64) -> (Rational, Rational) {
    let n = n as i64;
    let mut h = Rational::zero();
    let mut lhs = Rational::zero();
    let mut weighted = Rational::zero();
    for k in 1..=n {
        h += recip(k);
        let ak = a(k);
        lhs += &h * (a(k + 1) - &ak);
        weighted += ak * recip(k);
    }
    let rhs = h * a(n + 1) - weighted;
    (lhs, rhs)
}

/// `sum_{k=1}^n (a_k - a_{k-1}) / k` against
/// `sum_{k=1}^n a_k / (k(k+1)) - a_0 + a_n / (n+1)`. Needs `a` on `0..=n`.
pub fn telescope_reciprocal_check(a: Seq<'_>, n: u64) -> (Rational, Rational) {
    let n = n as i64;
    let lhs: Rational = (1..=n).map(|k| (a(k) - a(k - 1)) * recip(k)).sum();
    let tail: Rational = (1..=n).map(|k| a(k) * recip(k * (k + 1))).sum();
    let rhs = tail - a(0) + a(n) * recip(n + 1);
    (lhs, rhs)
}

/// `sum_{k=0}^n (-1)^k C(r-1, k) (a_{k+1} - a_k)` against
/// `(-1)^n C(r-1, n) a_{n+1} - sum_{k=0}^n (-1)^k C(r, k) a_k`, for any
/// rational `r`. Needs `a` on `0..=n+1`.
pub fn telescope_kollar_check(a: Seq<'_>, r: &Rational, n: u64) -> (Rational, Rational) {
    let r_minus = r - Rational::one();
    let lhs: Rational = (0..=n)
        .map(|k| sign(k as i64) * gen_binomial(&r_minus, k) * (a(k as i64 + 1) - a(k as i64)))
        .sum();
    let tail: Rational = (0..=n)
        .map(|k| sign(k as i64) * gen_binomial(r, k) * a(k as i64))
        .sum();
    let rhs = sign(n as i64) * gen_binomial(&r_minus, n) * a(n as i64 + 1) - tail;
    (lhs, rhs)
}

/// `sum_{k=1}^n k (a_k - a_{k-1})` against `n a_n - sum_{k=1}^n a_{k-1}`.
/// Needs `a` on `0..=n`.
pub fn telescope_linear_check(a: Seq<'_>, n: u64) -> (Rational, Rational) {
    let n = n as i64;
    let lhs: Rational = (1..=n).map(|k| Rational::from(k) * (a(k) - a(k - 1))).sum();
    let tail: Rational = (1..=n).map(|k| a(k - 1)).sum();
    (lhs, Rational::from(n) * a(n) - tail)
}
