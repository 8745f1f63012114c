//! Truncated formal power series over [`Rational`].
//!
//! A [`TruncatedSeries`] of order `N` holds the coefficients of `z^0..=z^N`;
//! binary operations truncate to the smaller of the two orders. The `gf_*`
//! constructors build the generating functions used as independent oracles
//! for the recurrence-based sequences.

use std::ops::{Add, Mul, Neg, Sub};

use thiserror::Error;

use crate::exact_math::{binomial, factorial, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("series has zero constant term and is not invertible")]
    NotInvertible,
    #[error("square root needs constant term 1, found {0}")]
    SqrtConstantTerm(Rational),
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncatedSeries {
    coeffs: Vec<Rational>,
}

impl TruncatedSeries {
    /// Takes `coeffs` as `z^0..`; the order is `coeffs.len() - 1`.
    pub fn new(coeffs: Vec<Rational>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a truncated series needs at least one coefficient"
        );
        TruncatedSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![Rational::zero(); order + 1],
        }
    }

    pub fn constant(c: Rational, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    pub fn one(order: usize) -> Self {
        Self::constant(Rational::one(), order)
    }

    /// The series `z` (zero when `order = 0`).
    pub fn z(order: usize) -> Self {
        let mut s = Self::zero(order);
        if order >= 1 {
            s.coeffs[1] = Rational::one();
        }
        s
    }

    /// `c_0 + c_1 z + ...` from a short coefficient list, zero-padded to `order`.
    pub fn from_poly(coeffs: &[Rational], order: usize) -> Self {
        let mut s = Self::zero(order);
        for (slot, c) in s.coeffs.iter_mut().zip(coeffs) {
            *slot = c.clone();
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &Rational {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        let keep = order.min(self.order());
        TruncatedSeries {
            coeffs: self.coeffs[..=keep].to_vec(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Cauchy product truncated at the smaller order.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let coeffs = (0..=order)
            .map(|n| {
                (0..=n)
                    .filter(|&i| !self.coeffs[i].is_zero())
                    .map(|i| &self.coeffs[i] * &other.coeffs[n - i])
                    .sum()
            })
            .collect();
        TruncatedSeries { coeffs }
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&Rational, &Rational) -> Rational) -> Self {
        let order = self.order().min(other.order());
        TruncatedSeries {
            coeffs: (0..=order)
                .map(|i| f(&self.coeffs[i], &other.coeffs[i]))
                .collect(),
        }
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn inverse(&self) -> Result<Self, SeriesError> {
        let c0 = &self.coeffs[0];
        let inv0 = c0.recip().map_err(|_| SeriesError::NotInvertible)?;
        let mut g: Vec<Rational> = Vec::with_capacity(self.coeffs.len());
        g.push(inv0.clone());
        for n in 1..=self.order() {
            let acc: Rational = (1..=n).map(|i| &self.coeffs[i] * &g[n - i]).sum();
            g.push(-(acc * &inv0));
        }
        Ok(TruncatedSeries { coeffs: g })
    }

    /// `f^m` by repeated Cauchy products; `f^0` is the constant 1.
    pub fn pow(&self, m: u64) -> Self {
        let mut acc = Self::one(self.order());
        let mut base = self.clone();
        let mut e = m;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// The square root with constant term 1, from the coefficient recurrence
    /// of `g^2 = f`.
    pub fn sqrt(&self) -> Result<Self, SeriesError> {
        if self.coeffs[0] != Rational::one() {
            return Err(SeriesError::SqrtConstantTerm(self.coeffs[0].clone()));
        }
        let half = Rational::frac(1, 2);
        let mut g = vec![Rational::one()];
        for n in 1..=self.order() {
            let cross: Rational = (1..n).map(|i| &g[i] * &g[n - i]).sum();
            g.push((&self.coeffs[n] - cross) * &half);
        }
        Ok(TruncatedSeries { coeffs: g })
    }

    /// `f(c z)`.
    pub fn substitute_scaled(&self, c: &Rational) -> Self {
        let mut power = Rational::one();
        let coeffs = self
            .coeffs
            .iter()
            .map(|x| {
                let out = x * &power;
                power *= c;
                out
            })
            .collect();
        TruncatedSeries { coeffs }
    }

    /// `f(a z / (1 - b z))` truncated at `order`, using
    /// `[z^n] (a z)^k / (1 - b z)^k = a^k C(n-1, n-k) b^{n-k}` for `1 <= k <= n`.
    pub fn compose_mobius(&self, a: &Rational, b: &Rational, order: usize) -> Self {
        let mut out = Self::zero(order);
        out.coeffs[0] = self.coeffs[0].clone();
        let top = self.order().min(order);
        let a_pows: Vec<Rational> = (0..=top as u64).map(|k| a.upow(k)).collect();
        let b_pows: Vec<Rational> = (0..=order as u64).map(|k| b.upow(k)).collect();
        for n in 1..=order {
            let mut acc = Rational::zero();
            for k in 1..=n.min(top) {
                if self.coeffs[k].is_zero() {
                    continue;
                }
                let weight = Rational::from(binomial((n - 1) as u64, (n - k) as u64));
                acc += &self.coeffs[k] * &a_pows[k] * weight * &b_pows[n - k];
            }
            out.coeffs[n] = acc;
        }
        out
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self.zip_with(rhs, |x, y| x + y)
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self.zip_with(rhs, |x, y| x - y)
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        TruncatedSeries::mul(self, rhs)
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|x| -x).collect(),
        }
    }
}

/// `-ln(1 - a z) = sum_{k>=1} a^k z^k / k`.
pub fn neg_log_one_minus(a: &Rational, order: usize) -> TruncatedSeries {
    let mut out = TruncatedSeries::zero(order);
    let mut power = Rational::one();
    for k in 1..=order {
        power *= a;
        out.coeffs[k] = &power * Rational::frac(1, k as i64);
    }
    out
}

/// `ln(1 + z)`, the negation of `-ln(1 - (-1) z)`.
pub fn log_one_plus(order: usize) -> TruncatedSeries {
    -&neg_log_one_minus(&-Rational::one(), order)
}

/// `1 / (1 - a z)`.
pub fn geometric(a: &Rational, order: usize) -> TruncatedSeries {
    TruncatedSeries::from_poly(&[Rational::one(), -a], order)
        .inverse()
        .expect("constant term 1")
}

/// `(-ln(1 - z))^m / (1 - z)`, whose coefficients are `H_n(m)`.
pub fn gf_harmonic_like(m: u64, order: usize) -> TruncatedSeries {
    neg_log_one_minus(&Rational::one(), order)
        .pow(m)
        .mul(&geometric(&Rational::one(), order))
}

/// `ln^k(1 + z) / k!`, whose `n`-th coefficient times `n!` is `s(n, k)`.
pub fn gf_stirling_column(k: u64, order: usize) -> TruncatedSeries {
    let scale = Rational::one() / Rational::from(factorial(k));
    log_one_plus(order).pow(k).scale(&scale)
}

/// `(-ln(1 - z)) / (1 - z)^{p+1}`, whose coefficients are `H_{n,p+1}`.
pub fn gf_hyperharmonic(p: u64, order: usize) -> TruncatedSeries {
    let denominator =
        TruncatedSeries::from_poly(&[Rational::one(), -Rational::one()], order).pow(p + 1);
    neg_log_one_minus(&Rational::one(), order).mul(&denominator.inverse().expect("constant term 1"))
}

/// `1 / sqrt(1 - 4 z)`, whose coefficients are `C(2n, n)`.
pub fn gf_central_binomial(order: usize) -> TruncatedSeries {
    TruncatedSeries::from_poly(&[Rational::one(), Rational::from(-4)], order)
        .sqrt()
        .expect("constant term 1")
        .inverse()
        .expect("constant term 1")
}

/// `(1/2) sqrt(1 - 4z) (-ln(1 - 4z)) / (1 - 4z)`, whose `n`-th coefficient
/// is `C(2n, n) O_n`.
pub fn gf_odd_central(order: usize) -> TruncatedSeries {
    let four = Rational::from(4);
    let root = TruncatedSeries::from_poly(&[Rational::one(), -&four], order)
        .sqrt()
        .expect("constant term 1");
    root.mul(&neg_log_one_minus(&four, order))
        .mul(&geometric(&four, order))
        .scale(&Rational::frac(1, 2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequences::{
        harmonic, harmonic_like, harmonic_order, hyperharmonic, odd_harmonic, stirling1,
    };
    use proptest::prelude::*;

    fn r(p: i64, q: i64) -> Rational {
        Rational::frac(p, q)
    }

    fn ints(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| Rational::from(x)).collect()
    }

    fn series_from(xs: &[(i64, i64)]) -> TruncatedSeries {
        TruncatedSeries::new(xs.iter().map(|&(p, q)| r(p, q)).collect())
    }

    #[test]
    fn arithmetic_basics() {
        let one_plus = TruncatedSeries::from_poly(&ints(&[1, 1]), 2);
        let one_minus = TruncatedSeries::from_poly(&ints(&[1, -1]), 2);
        assert_eq!(
            one_plus.mul(&one_minus).coeffs(),
            ints(&[1, 0, -1]).as_slice()
        );
        assert_eq!(&one_plus + &TruncatedSeries::zero(2), one_plus);
        let geo = TruncatedSeries::new(ints(&[1; 6]));
        let telescoped = geo.mul(&TruncatedSeries::from_poly(&ints(&[1, -1]), 5));
        assert_eq!(telescoped, TruncatedSeries::one(5));
        assert_eq!((&one_plus - &one_plus), TruncatedSeries::zero(2));
        assert_eq!(
            one_plus.scale(&r(1, 2)).coeffs(),
            &[r(1, 2), r(1, 2), r(0, 1)]
        );
    }

    #[test]
    fn mixed_orders_truncate_to_smaller() {
        let long = TruncatedSeries::new(ints(&[1, 2, 3, 4, 5]));
        let short = TruncatedSeries::new(ints(&[1, 1]));
        assert_eq!((&long + &short).order(), 1);
        assert_eq!(long.mul(&short).coeffs(), ints(&[1, 3]).as_slice());
        assert_eq!(long.truncate(2).coeffs(), ints(&[1, 2, 3]).as_slice());
    }

    #[test]
    fn inverse_of_geometric_factors() {
        let inv = TruncatedSeries::from_poly(&ints(&[1, -1]), 6)
            .inverse()
            .unwrap();
        assert_eq!(inv.coeffs(), ints(&[1; 7]).as_slice());
        let inv4 = TruncatedSeries::from_poly(&ints(&[1, -4]), 5)
            .inverse()
            .unwrap();
        assert_eq!(inv4.coeffs(), ints(&[1, 4, 16, 64, 256, 1024]).as_slice());
        assert_eq!(
            TruncatedSeries::from_poly(&ints(&[0, 1]), 3).inverse(),
            Err(SeriesError::NotInvertible)
        );
    }

    #[test]
    fn log_kernel() {
        let l = neg_log_one_minus(&Rational::one(), 4);
        assert_eq!(l.coeffs(), &[r(0, 1), r(1, 1), r(1, 2), r(1, 3), r(1, 4)]);
        assert_eq!(
            neg_log_one_minus(&Rational::zero(), 5),
            TruncatedSeries::zero(5)
        );
        let l4 = neg_log_one_minus(&Rational::from(4), 3);
        assert_eq!(l4.coeffs(), &[r(0, 1), r(4, 1), r(8, 1), r(64, 3)]);
        let ln1p = log_one_plus(4);
        assert_eq!(
            ln1p.coeffs(),
            &[r(0, 1), r(1, 1), r(-1, 2), r(1, 3), r(-1, 4)]
        );
    }

    #[test]
    fn powers() {
        let f = series_from(&[(2, 1), (1, 3), (-1, 2), (5, 7)]);
        assert_eq!(f.pow(0), TruncatedSeries::one(3));
        assert_eq!(f.pow(1), f);
        assert_eq!(f.pow(3), f.mul(&f).mul(&f));
        let l = neg_log_one_minus(&Rational::one(), 4);
        let g = l.pow(2).mul(&geometric(&Rational::one(), 4));
        assert_eq!(g.coeffs(), &[r(0, 1), r(0, 1), r(1, 1), r(2, 1), r(35, 12)]);
    }

    #[test]
    fn square_roots() {
        assert_eq!(
            TruncatedSeries::one(4).sqrt().unwrap(),
            TruncatedSeries::one(4)
        );
        let central = gf_central_binomial(4);
        assert_eq!(central.coeffs(), ints(&[1, 2, 6, 20, 70]).as_slice());
        assert!(matches!(
            TruncatedSeries::constant(Rational::from(4), 3).sqrt(),
            Err(SeriesError::SqrtConstantTerm(_))
        ));
        for n in 0..=30usize {
            assert_eq!(
                gf_central_binomial(30).coeff(n),
                &Rational::from(binomial(2 * n as u64, n as u64))
            );
        }
    }

    #[test]
    fn mobius_composition() {
        let one = Rational::one();
        let z_over = TruncatedSeries::z(4).compose_mobius(&one, &one, 4);
        assert_eq!(z_over.coeffs(), ints(&[0, 1, 1, 1, 1]).as_slice());
        let f = series_from(&[(3, 1), (1, 2), (-2, 3), (7, 5), (1, 9)]);
        assert_eq!(f.compose_mobius(&one, &Rational::zero(), 4), f);
        // substitution z -> c z is the b = 0 case
        let c = r(-3, 2);
        assert_eq!(
            f.compose_mobius(&c, &Rational::zero(), 4),
            f.substitute_scaled(&c)
        );
    }

    #[test]
    fn mobius_generates_binomial_sums() {
        let (a, b) = (Rational::from(2), Rational::from(3));
        let order = 12;
        let s = geometric(&b, order).mul(&gf_harmonic_like(1, order).compose_mobius(&a, &b, order));
        for n in 0..=order as u64 {
            let direct: Rational = (0..=n)
                .map(|k| Rational::from(binomial(n, k)) * a.upow(k) * b.upow(n - k) * harmonic(k))
                .sum();
            assert_eq!(s.coeff(n as usize), &direct, "n={n}");
        }
    }

    #[test]
    fn mobius_nesting_is_consistent() {
        let f = series_from(&[
            (1, 1),
            (2, 3),
            (-1, 4),
            (5, 2),
            (0, 1),
            (1, 7),
            (-3, 5),
            (2, 1),
            (1, 11),
            (-1, 3),
            (4, 9),
            (1, 13),
            (-2, 7),
        ]);
        let pairs = [
            ((r(2, 3), r(-1, 5)), (r(-7, 4), r(3, 2))),
            ((r(5, 1), r(1, 3)), (r(1, 6), r(-2, 1))),
        ];
        for ((a, b), (a2, b2)) in pairs {
            let nested = f.compose_mobius(&a2, &b2, 12).compose_mobius(&a, &b, 12);
            let direct = f.compose_mobius(&(&a * &a2), &(&b + &a * &b2), 12);
            assert_eq!(nested, direct);
        }
    }

    #[test]
    fn harmonic_like_generating_function() {
        assert_eq!(gf_harmonic_like(0, 5).coeffs(), ints(&[1; 6]).as_slice());
        assert_eq!(
            gf_harmonic_like(1, 4).coeffs(),
            &[r(0, 1), r(1, 1), r(3, 2), r(11, 6), r(25, 12)]
        );
        let h4 = harmonic(4);
        assert_eq!(
            gf_harmonic_like(2, 4).coeff(4),
            &(&h4 * &h4 - harmonic_order(4, 2))
        );
        for m in 0..=5u64 {
            let gf = gf_harmonic_like(m, 60);
            for n in 0..=60usize {
                assert_eq!(gf.coeff(n), &harmonic_like(n as u64, m), "m={m} n={n}");
            }
        }
    }

    #[test]
    fn stirling_generating_function() {
        assert_eq!(gf_stirling_column(0, 5), TruncatedSeries::one(5));
        let scaled = |k: u64, n: usize| {
            gf_stirling_column(k, n).coeff(n) * Rational::from(factorial(n as u64))
        };
        assert_eq!(scaled(1, 3), Rational::from(2));
        assert_eq!(scaled(2, 4), Rational::from(11));
        for k in 0..=6u64 {
            let gf = gf_stirling_column(k, 40);
            for n in 0..=40usize {
                let value = gf.coeff(n) * Rational::from(factorial(n as u64));
                assert_eq!(value, Rational::from(stirling1(n as u64, k)), "k={k} n={n}");
            }
        }
    }

    #[test]
    fn hyperharmonic_generating_function() {
        for p in 0..=5u64 {
            let gf = gf_hyperharmonic(p, 40);
            for n in 0..=40usize {
                assert_eq!(
                    gf.coeff(n),
                    &hyperharmonic(n as u64, p + 1).unwrap(),
                    "p={p} n={n}"
                );
            }
        }
    }

    #[test]
    fn odd_central_generating_function() {
        let gf = gf_odd_central(40);
        assert_eq!(gf.coeff(0), &Rational::zero());
        assert_eq!(gf.coeff(2), &Rational::from(8));
        assert_eq!(gf.coeff(3), &r(92, 3));
        for n in 0..=40u64 {
            let expected = Rational::from(binomial(2 * n, n)) * odd_harmonic(n);
            assert_eq!(gf.coeff(n as usize), &expected, "n={n}");
        }
    }

    fn arb_unit_series(order: usize) -> impl Strategy<Value = TruncatedSeries> {
        proptest::collection::vec((-50i64..50, 1i64..20), order).prop_map(|tail| {
            let mut coeffs = vec![Rational::one()];
            coeffs.extend(tail.into_iter().map(|(p, q)| Rational::frac(p, q)));
            TruncatedSeries::new(coeffs)
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]

        #[test]
        fn inverse_round_trips(f in arb_unit_series(20)) {
            let g = f.inverse().unwrap();
            prop_assert_eq!(f.mul(&g), TruncatedSeries::one(20));
            prop_assert_eq!(g.inverse().unwrap(), f);
        }

        #[test]
        fn sqrt_round_trips(f in arb_unit_series(16)) {
            let g = f.sqrt().unwrap();
            prop_assert_eq!(g.coeff(0), &Rational::one());
            prop_assert_eq!(g.mul(&g), f);
        }
    }
}
