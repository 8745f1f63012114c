//! Generating-function cross-checks: each family pairs a recurrence-side
//! evaluator with a truncated power series and compares coefficients.

use harmonic_like::exact_math::{binomial, factorial};
use harmonic_like::power_series::{
    gf_harmonic_like, gf_hyperharmonic, gf_odd_central, gf_stirling_column, TruncatedSeries,
};
use harmonic_like::sequences::SeqCache;
use harmonic_like::Rational;

pub trait GfCheck: Send + Sync {
    fn name(&self) -> &'static str;
    /// Required parameter and its minimum, if any.
    fn param(&self) -> Option<(&'static str, i64)>;
    fn recurrence(&self, n: u64, param: u64, cache: &SeqCache) -> Rational;
    /// Coefficient `n` of the series, after any normalization.
    fn series(&self, param: u64, order: usize) -> Vec<Rational>;
}

struct HarmonicLike;
struct Stirling1;
struct Hyperharmonic;
struct OddCentral;

fn coeffs(s: TruncatedSeries) -> Vec<Rational> {
    s.coeffs().to_vec()
}

impl GfCheck for HarmonicLike {
    fn name(&self) -> &'static str {
        "harmonic_like"
    }
    fn param(&self) -> Option<(&'static str, i64)> {
        Some(("m", 0))
    }
    fn recurrence(&self, n: u64, m: u64, cache: &SeqCache) -> Rational {
        cache.harmonic_like(n, m)
    }
    fn series(&self, m: u64, order: usize) -> Vec<Rational> {
        coeffs(gf_harmonic_like(m, order))
    }
}

impl GfCheck for Stirling1 {
    fn name(&self) -> &'static str {
        "stirling1"
    }
    fn param(&self) -> Option<(&'static str, i64)> {
        Some(("k", 0))
    }
    fn recurrence(&self, n: u64, k: u64, cache: &SeqCache) -> Rational {
        cache.stirling1(n, k).into()
    }
    // n! [z^n] ln^k(1+z)/k!
    fn series(&self, k: u64, order: usize) -> Vec<Rational> {
        gf_stirling_column(k, order)
            .coeffs()
            .iter()
            .enumerate()
            .map(|(n, c)| c * Rational::from(factorial(n as u64)))
            .collect()
    }
}

impl GfCheck for Hyperharmonic {
    fn name(&self) -> &'static str {
        "hyperharmonic"
    }
    fn param(&self) -> Option<(&'static str, i64)> {
        Some(("p", 1))
    }
    fn recurrence(&self, n: u64, p: u64, cache: &SeqCache) -> Rational {
        cache.hyperharmonic(n, p).expect("p >= 1")
    }
    fn series(&self, p: u64, order: usize) -> Vec<Rational> {
        coeffs(gf_hyperharmonic(p - 1, order))
    }
}

impl GfCheck for OddCentral {
    fn name(&self) -> &'static str {
        "odd_central"
    }
    fn param(&self) -> Option<(&'static str, i64)> {
        None
    }
    fn recurrence(&self, n: u64, _: u64, cache: &SeqCache) -> Rational {
        Rational::from(binomial(2 * n, n)) * cache.odd_harmonic(n)
    }
    fn series(&self, _: u64, order: usize) -> Vec<Rational> {
        coeffs(gf_odd_central(order))
    }
}

pub fn registry() -> Vec<Box<dyn GfCheck>> {
    vec![
        Box::new(HarmonicLike),
        Box::new(Stirling1),
        Box::new(Hyperharmonic),
        Box::new(OddCentral),
    ]
}

pub fn lookup(name: &str) -> Option<Box<dyn GfCheck>> {
    registry().into_iter().find(|c| c.name() == name)
}

pub fn names() -> Vec<&'static str> {
    registry().iter().map(|c| c.name()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_family_agrees_at_small_order() {
        let cache = SeqCache::new();
        for check in registry() {
            let param = check.param().map_or(0, |(_, min)| min as u64 + 2);
            let series = check.series(param, 12);
            assert_eq!(series.len(), 13, "{}", check.name());
            for (n, coeff) in series.iter().enumerate() {
                assert_eq!(
                    *coeff,
                    check.recurrence(n as u64, param, &cache),
                    "{} n={n}",
                    check.name()
                );
            }
        }
        assert!(lookup("fibonacci").is_none());
        assert_eq!(
            names(),
            ["harmonic_like", "stirling1", "hyperharmonic", "odd_central"]
        );
    }
}
