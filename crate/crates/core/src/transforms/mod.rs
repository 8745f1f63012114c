//! Binomial sums `S_n(a, b, m) = sum_k C(n,k) a^k b^{n-k} H_k(m)`: the literal
//! sum, the Stirling-number closed form, the `m = 1, 2, 3` specializations,
//! and the generic forward/inverse binomial transforms.
//!
//! Powers follow `0^0 = 1` and empty sums are zero throughout.

use serde::{Deserialize, Serialize};

use crate::exact_math::{binomial, factorial, sign, Rational};
use crate::sequences::SeqCache;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BinomialSumParams {
    pub a: Rational,
    pub b: Rational,
    pub m: u64,
    pub n: u64,
}

impl BinomialSumParams {
    pub fn new(a: Rational, b: Rational, m: u64, n: u64) -> Self {
        BinomialSumParams { a, b, m, n }
    }
}

/// The `(a, b)` pairs every binomial-sum check runs over.
pub fn fixture_pairs() -> Vec<(Rational, Rational)> {
    let r = Rational::frac;
    vec![
        (r(1, 1), r(1, 1)),
        (r(-1, 1), r(1, 1)),
        (r(2, 1), r(1, 1)),
        (r(1, 1), r(2, 1)),
        (r(1, 2), r(-1, 3)),
        (r(3, 1), r(-2, 1)),
        (r(0, 1), r(1, 1)),
        (r(1, 1), r(0, 1)),
    ]
}

fn int(x: impl Into<Rational>) -> Rational {
    x.into()
}

/// `sum_{k=0}^n C(n,k) a^k b^{n-k} H_k(m)`.
pub fn binomial_sum_direct(p: &BinomialSumParams, cache: &SeqCache) -> Rational {
    let n = p.n;
    (0..=n)
        .map(|k| int(binomial(n, k)) * p.a.upow(k) * p.b.upow(n - k) * cache.harmonic_like(k, p.m))
        .sum()
}

/// Closed form through Stirling numbers of the first kind:
/// `sum_j C(m,j) sum_k H_k(j) (a+b)^k (m-j)!/(n-k)! (-1)^{n-k} b^{n-k} s(n-k, m-j)`.
pub fn binomial_sum_closed(p: &BinomialSumParams, cache: &SeqCache) -> Rational {
    let (n, m) = (p.n, p.m);
    let total = &p.a + &p.b;
    let mut acc = Rational::zero();
    for j in 0..=m {
        let outer = int(binomial(m, j)) * int(factorial(m - j));
        for k in 0..=n {
            let stirling = cache.stirling1(n - k, m - j);
            if stirling == 0.into() {
                continue;
            }
            let term = cache.harmonic_like(k, j)
                * total.upow(k)
                * sign((n - k) as i64)
                * p.b.upow(n - k)
                * int(stirling)
                / int(factorial(n - k));
            acc += &outer * term;
        }
    }
    acc
}

/// `m = 1`: `H_n (a+b)^n - sum_{k=0}^{n-1} (a+b)^k b^{n-k} / (n-k)`.
pub fn binomial_sum_m1(a: &Rational, b: &Rational, n: u64, cache: &SeqCache) -> Rational {
    let total = a + b;
    let correction: Rational = (0..n)
        .map(|k| total.upow(k) * b.upow(n - k) * Rational::frac(1, (n - k) as i64))
        .sum();
    cache.harmonic(n) * total.upow(n) - correction
}

/// `m = 2`: `H_n(2)(a+b)^n + 2 sum_{k=1}^n (a+b)^{n-k} b^k (H_{k-1} - H_{n-k}) / k`.
pub fn binomial_sum_m2(a: &Rational, b: &Rational, n: u64, cache: &SeqCache) -> Rational {
    let total = a + b;
    let correction: Rational = (1..=n)
        .map(|k| {
            total.upow(n - k)
                * b.upow(k)
                * (cache.harmonic(k - 1) - cache.harmonic(n - k))
                * Rational::frac(1, k as i64)
        })
        .sum();
    cache.harmonic_like(n, 2) * total.upow(n) + Rational::from(2) * correction
}

/// `m = 3`: `H_n(3)(a+b)^n - 3 sum_{k=1}^n (a+b)^{n-k} b^k D_k / k` with
/// `D_k = H_{k-1}^2 - H_{k-1}^{(2)} - 2 H_{k-1} H_{n-k} + H_{n-k}^2 - H_{n-k}^{(2)}`.
pub fn binomial_sum_m3(a: &Rational, b: &Rational, n: u64, cache: &SeqCache) -> Rational {
    let total = a + b;
    let correction: Rational = (1..=n)
        .map(|k| {
            let (x, y) = (cache.harmonic(k - 1), cache.harmonic(n - k));
            let d = &x * &x - cache.harmonic_order(k - 1, 2) - Rational::from(2) * &x * &y
                + &y * &y
                - cache.harmonic_order(n - k, 2);
            total.upow(n - k) * b.upow(k) * d * Rational::frac(1, k as i64)
        })
        .sum();
    cache.harmonic_like(n, 3) * total.upow(n) - Rational::from(3) * correction
}

/// Forward transform at `n`: `sum_k C(n,k) seq(k)`, or with `signed`,
/// `sum_k C(n,k) (-1)^k seq(k)`.
pub fn binomial_transform(seq: &dyn Fn(u64) -> Rational, n: u64, signed: bool) -> Rational {
    (0..=n)
        .map(|k| {
            let term = int(binomial(n, k)) * seq(k);
            if signed {
                sign(k as i64) * term
            } else {
                term
            }
        })
        .sum()
}

/// Inverse of [`binomial_transform`] with the same `signed` flag. The signed
/// transform is an involution; the unsigned one inverts to
/// `sum_k C(n,k) (-1)^{n-k} seq(k)`.
pub fn inverse_binomial_transform(seq: &dyn Fn(u64) -> Rational, n: u64, signed: bool) -> Rational {
    if signed {
        return binomial_transform(seq, n, true);
    }
    (0..=n)
        .map(|k| sign((n - k) as i64) * int(binomial(n, k)) * seq(k))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(p: i64, q: i64) -> Rational {
        Rational::frac(p, q)
    }

    fn params(a: Rational, b: Rational, m: u64, n: u64) -> BinomialSumParams {
        BinomialSumParams::new(a, b, m, n)
    }

    #[test]
    fn direct_sum_examples() {
        let c = SeqCache::new();
        assert_eq!(
            binomial_sum_direct(&params(r(2, 1), r(1, 1), 0, 3), &c),
            Rational::from(27)
        );
        assert_eq!(
            binomial_sum_direct(&params(r(1, 1), r(1, 1), 1, 2), &c),
            r(7, 2)
        );
        assert_eq!(
            binomial_sum_direct(&params(r(1, 1), r(1, 1), 2, 2), &c),
            Rational::one()
        );
        assert_eq!(
            binomial_sum_direct(&params(r(0, 1), r(0, 1), 0, 0), &c),
            Rational::one()
        );
    }

    #[test]
    fn closed_form_examples() {
        let c = SeqCache::new();
        let s32 = Rational::from(c.stirling1(3, 2));
        let expected = -(Rational::from(2) / Rational::from(6)) * s32;
        assert_eq!(
            binomial_sum_closed(&params(r(-1, 1), r(1, 1), 2, 3), &c),
            expected
        );
        assert_eq!(expected, Rational::one());
        assert_eq!(
            binomial_sum_closed(&params(r(1, 1), r(1, 1), 1, 2), &c),
            r(7, 2)
        );
        for (a, b) in fixture_pairs() {
            for n in 0..8 {
                let total = &a + &b;
                assert_eq!(
                    binomial_sum_closed(&params(a.clone(), b.clone(), 0, n), &c),
                    total.upow(n)
                );
            }
        }
    }

    #[test]
    fn closed_form_equals_direct_sum_on_fixtures() {
        let c = SeqCache::new();
        for (a, b) in fixture_pairs() {
            for m in 0..=4 {
                for n in 0..=12 {
                    let p = params(a.clone(), b.clone(), m, n);
                    assert_eq!(
                        binomial_sum_closed(&p, &c),
                        binomial_sum_direct(&p, &c),
                        "{p:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn m1_specialization() {
        let c = SeqCache::new();
        assert_eq!(binomial_sum_m1(&r(1, 1), &r(1, 1), 2, &c), r(7, 2));
        // a + b = 0 keeps only the k = 0 correction term
        let (a, b) = (r(1, 1), r(-1, 1));
        let direct: Rational = (0..=3)
            .map(|k| Rational::from(binomial(3, k)) * sign(3 - k as i64) * c.harmonic(k))
            .sum();
        assert_eq!(binomial_sum_m1(&a, &b, 3, &c), direct);
        assert_eq!(direct, r(1, 3));
        for n in 0..10 {
            let a = r(-5, 3);
            assert_eq!(
                binomial_sum_m1(&a, &Rational::zero(), n, &c),
                c.harmonic(n) * a.upow(n)
            );
        }
    }

    #[test]
    fn m2_specialization() {
        let c = SeqCache::new();
        assert_eq!(binomial_sum_m2(&r(1, 1), &r(1, 1), 2, &c), Rational::one());
        assert_eq!(binomial_sum_m2(&r(-1, 1), &r(1, 1), 3, &c), Rational::one());
        assert_eq!(r(2, 3) * c.harmonic(2), Rational::one());
        for n in 0..10 {
            let a = r(7, 2);
            assert_eq!(
                binomial_sum_m2(&a, &Rational::zero(), n, &c),
                c.harmonic_like(n, 2) * a.upow(n)
            );
        }
    }

    #[test]
    fn m3_specialization() {
        let c = SeqCache::new();
        for n in 0..10 {
            let a = r(-2, 5);
            assert_eq!(
                binomial_sum_m3(&a, &Rational::zero(), n, &c),
                c.harmonic_like(n, 3) * a.upow(n)
            );
        }
        let one = Rational::one();
        assert_eq!(
            binomial_sum_m3(&one, &one, 4, &c),
            binomial_sum_direct(&params(one.clone(), one.clone(), 3, 4), &c)
        );
        let expected = Rational::from(6) / Rational::from(24) * Rational::from(c.stirling1(4, 3));
        assert_eq!(binomial_sum_m3(&-&one, &one, 4, &c), expected);
    }

    #[test]
    fn specializations_match_closed_form() {
        let c = SeqCache::new();
        for (a, b) in fixture_pairs() {
            for n in 0..=12 {
                let closed = |m| binomial_sum_closed(&params(a.clone(), b.clone(), m, n), &c);
                assert_eq!(binomial_sum_m1(&a, &b, n, &c), closed(1));
                assert_eq!(binomial_sum_m2(&a, &b, n, &c), closed(2));
                assert_eq!(binomial_sum_m3(&a, &b, n, &c), closed(3));
            }
        }
    }

    #[test]
    fn transform_examples() {
        let c = SeqCache::new();
        let h = |k: u64| c.harmonic(k);
        assert_eq!(binomial_transform(&h, 3, true), r(-1, 3));
        let h2 = |k: u64| c.harmonic_like(k, 2);
        assert_eq!(binomial_transform(&h2, 3, true), Rational::one());
        let xs = [r(1, 1), r(1, 2), r(1, 3), r(1, 4)];
        let fwd: Vec<Rational> = (0..4)
            .map(|n| binomial_transform(&|k| xs[k as usize].clone(), n, true))
            .collect();
        let back: Vec<Rational> = (0..4)
            .map(|n| inverse_binomial_transform(&|k| fwd[k as usize].clone(), n, true))
            .collect();
        assert_eq!(back, xs);
    }

    #[test]
    fn inverse_recovers_stirling_column() {
        // the signed transform of H_k(m) is (-1)^n m!/n! s(n,m); undoing the
        // sign on that image and summing unsigned gives back H_n(m)/m!
        let c = SeqCache::new();
        for m in 0..=5u64 {
            for n in 0..=30u64 {
                let image =
                    |k: u64| Rational::from(c.stirling1(k, m)) / Rational::from(factorial(k));
                let lhs = binomial_transform(&image, n, false);
                assert_eq!(
                    lhs,
                    c.harmonic_like(n, m) / Rational::from(factorial(m)),
                    "m={m} n={n}"
                );
            }
        }
    }

    proptest! {
        #[test]
        fn signed_transform_is_an_involution(xs in proptest::collection::vec((-100i64..100, 1i64..50), 21)) {
            let seq: Vec<Rational> = xs.into_iter().map(|(p, q)| Rational::frac(p, q)).collect();
            let fwd: Vec<Rational> = (0..=20).map(|n| binomial_transform(&|k| seq[k as usize].clone(), n, true)).collect();
            let twice: Vec<Rational> = (0..=20).map(|n| binomial_transform(&|k| fwd[k as usize].clone(), n, true)).collect();
            prop_assert_eq!(twice, seq.clone());
            let up: Vec<Rational> = (0..=20).map(|n| binomial_transform(&|k| seq[k as usize].clone(), n, false)).collect();
            let down: Vec<Rational> = (0..=20).map(|n| inverse_binomial_transform(&|k| up[k as usize].clone(), n, false)).collect();
            prop_assert_eq!(down, seq);
        }
    }
}
