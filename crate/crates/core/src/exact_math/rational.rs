//! Arbitrary-precision rationals kept in canonical form.
//!
//! [`Rational`] wraps [`num_rational::BigRational`], which reduces by the gcd and
//! moves the sign onto the numerator after every operation. Zero is always `0/1`.

use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::MathError;

/// Exact fraction `numerator / denominator` with `denominator > 0` and
/// `gcd(|numerator|, denominator) = 1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Rational(BigRational);

impl Rational {
    /// Builds `num / den`, reducing to lowest terms.
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self, MathError> {
        let den = den.into();
        if den.is_zero() {
            return Err(MathError::DivisionByZero);
        }
        Ok(Rational(BigRational::new(num.into(), den)))
    }

    /// `num / den` for nonzero literal denominators. Panics on `den == 0`.
    pub fn frac(num: i64, den: i64) -> Self {
        Self::new(num, den).expect("literal fraction with zero denominator")
    }

    pub fn from_int(value: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(value.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    /// Integer value when the denominator is one.
    pub fn to_integer(&self) -> Option<BigInt> {
        self.is_integer().then(|| self.0.numer().clone())
    }

    pub fn checked_div(&self, rhs: &Rational) -> Result<Rational, MathError> {
        if rhs.is_zero() {
            return Err(MathError::DivisionByZero);
        }
        Ok(Rational(&self.0 / &rhs.0))
    }

    pub fn recip(&self) -> Result<Rational, MathError> {
        Rational::one().checked_div(self)
    }

    /// `self^exp`; `0^0 = 1`, and a negative exponent on zero is an error.
    pub fn pow(&self, exp: i64) -> Result<Rational, MathError> {
        if exp < 0 {
            if self.is_zero() {
                return Err(MathError::DivisionByZero);
            }
            return Ok(Rational(self.0.recip().pow(exp.unsigned_abs() as i32)));
        }
        Ok(self.upow(exp as u64))
    }

    /// Nonnegative power by binary exponentiation, `0^0 = 1`.
    pub fn upow(&self, exp: u64) -> Rational {
        let mut base = self.0.clone();
        let mut acc = BigRational::one();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc *= &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        Rational(acc)
    }

    pub fn abs(&self) -> Rational {
        Rational(self.0.abs())
    }

    /// Decimal rendering rounded half away from zero to `digits` places.
    pub fn to_decimal(&self, digits: usize) -> String {
        let scale = BigInt::from(10u32).pow(digits as u32);
        let num = self.0.numer().abs() * &scale;
        let den = self.0.denom();
        let (mut q, r) = num.div_rem(den);
        if r * 2u32 >= *den {
            q += 1u32;
        }
        let mut body = q.to_string();
        if digits > 0 {
            if body.len() <= digits {
                body = format!("{}{}", "0".repeat(digits + 1 - body.len()), body);
            }
            body.insert(body.len() - digits, '.');
        }
        let zero = q.is_zero();
        if self.is_negative() && !zero {
            format!("-{body}")
        } else {
            body
        }
    }

    pub fn to_f64(&self) -> Option<f64> {
        self.0.to_f64()
    }

    pub fn as_big_rational(&self) -> &BigRational {
        &self.0
    }
}

impl From<BigRational> for Rational {
    fn from(value: BigRational) -> Self {
        Rational(value)
    }
}

impl From<BigInt> for Rational {
    fn from(value: BigInt) -> Self {
        Rational::from_int(value)
    }
}

impl From<&BigInt> for Rational {
    fn from(value: &BigInt) -> Self {
        Rational::from_int(value.clone())
    }
}

macro_rules! from_prim {
    ($($t:ty),*) => {$(
        impl From<$t> for Rational {
            fn from(value: $t) -> Self {
                Rational::from_int(value)
            }
        }
    )*};
}
from_prim!(i32, i64, u32, u64, usize);

/// `p/q`, or bare `p` when `q = 1`.
impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = MathError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let parse =
            |part: &str| BigInt::from_str(part.trim()).map_err(|_| MathError::Parse(s.to_string()));
        match s.split_once('/') {
            Some((p, q)) => Rational::new(parse(p)?, parse(q)?),
            None => Ok(Rational::from_int(parse(s)?)),
        }
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0 $op rhs.0)
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational(self.0 $op &rhs.0)
            }
        }
        impl $trait<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(&self.0 $op rhs.0)
            }
        }
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational(&self.0 $op &rhs.0)
            }
        }
    };
}
binop!(Add, add, +);
binop!(Sub, sub, -);
binop!(Mul, mul, *);

// Operator division panics on a zero divisor like integer division does;
// `checked_div` is the fallible form.
impl Div<Rational> for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        assert!(!rhs.is_zero(), "rational division by zero");
        Rational(self.0 / rhs.0)
    }
}
impl Div<&Rational> for Rational {
    type Output = Rational;
    fn div(self, rhs: &Rational) -> Rational {
        assert!(!rhs.is_zero(), "rational division by zero");
        Rational(self.0 / &rhs.0)
    }
}
impl Div<Rational> for &Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        assert!(!rhs.is_zero(), "rational division by zero");
        Rational(&self.0 / rhs.0)
    }
}
impl Div<&Rational> for &Rational {
    type Output = Rational;
    fn div(self, rhs: &Rational) -> Rational {
        assert!(!rhs.is_zero(), "rational division by zero");
        Rational(&self.0 / &rhs.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

impl AddAssign<Rational> for Rational {
    fn add_assign(&mut self, rhs: Rational) {
        self.0 += rhs.0;
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        self.0 -= &rhs.0;
    }
}

impl SubAssign<Rational> for Rational {
    fn sub_assign(&mut self, rhs: Rational) {
        self.0 -= rhs.0;
    }
}

impl MulAssign<&Rational> for Rational {
    fn mul_assign(&mut self, rhs: &Rational) {
        self.0 *= &rhs.0;
    }
}

impl MulAssign<Rational> for Rational {
    fn mul_assign(&mut self, rhs: Rational) {
        self.0 *= rhs.0;
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Rational> for Rational {
    fn sum<I: Iterator<Item = &'a Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl Product for Rational {
    fn product<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::one(), |acc, x| acc * x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(p: i64, q: i64) -> Rational {
        Rational::frac(p, q)
    }

    fn canonical(x: &Rational) -> bool {
        x.denom() > &BigInt::zero()
            && x.numer().gcd(x.denom()) == BigInt::one()
            && (!x.is_zero() || x.denom().is_one())
    }

    #[test]
    fn small_sums_and_products() {
        assert_eq!(r(1, 2) + r(1, 3), r(5, 6));
        assert_eq!(r(3, 4) * r(4, 3), Rational::one());
        assert_eq!((r(1, 2) + r(1, 3)).to_string(), "5/6");
    }

    #[test]
    fn construction_canonicalizes() {
        let x = Rational::new(-2, 6).unwrap();
        assert_eq!(x.to_string(), "-1/3");
        let y = Rational::new(2, -6).unwrap();
        assert_eq!(y.to_string(), "-1/3");
        let z = Rational::new(0, -17).unwrap();
        assert_eq!(z.numer(), &BigInt::zero());
        assert_eq!(z.denom(), &BigInt::one());
        assert_eq!(z.to_string(), "0");
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(Rational::new(1, 0), Err(MathError::DivisionByZero));
        assert_eq!(
            r(1, 2).checked_div(&Rational::zero()),
            Err(MathError::DivisionByZero)
        );
        assert_eq!(Rational::zero().recip(), Err(MathError::DivisionByZero));
        assert_eq!(Rational::zero().pow(-1), Err(MathError::DivisionByZero));
    }

    #[test]
    fn powers() {
        assert_eq!(Rational::zero().upow(0), Rational::one());
        assert_eq!(r(-2, 3).upow(3), r(-8, 27));
        assert_eq!(r(-2, 3).pow(-2).unwrap(), r(9, 4));
        assert_eq!(r(5, 7).pow(0).unwrap(), Rational::one());
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("-1/3".parse::<Rational>().unwrap(), r(-1, 3));
        assert_eq!("4/2".parse::<Rational>().unwrap().to_string(), "2");
        assert_eq!(" 7 ".parse::<Rational>().unwrap(), Rational::from(7));
        assert!("1/0".parse::<Rational>().is_err());
        assert!("x".parse::<Rational>().is_err());
        let json = serde_json::to_string(&r(-5, 6)).unwrap();
        assert_eq!(json, "\"-5/6\"");
        let back: Rational = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r(-5, 6));
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(r(1, 3).to_decimal(4), "0.3333");
        assert_eq!(r(2, 3).to_decimal(4), "0.6667");
        assert_eq!(r(-137, 60).to_decimal(3), "-2.283");
        assert_eq!(r(-1, 1000).to_decimal(2), "0.00");
        assert_eq!(r(5, 2).to_decimal(0), "3");
        assert_eq!(r(1, 20).to_decimal(1), "0.1");
    }

    fn arb_rational() -> impl Strategy<Value = Rational> {
        (-10_000i64..10_000, 1i64..10_000).prop_map(|(p, q)| Rational::frac(p, q))
    }

    proptest! {
        #[test]
        fn canonical_after_every_operation(x in arb_rational(), y in arb_rational(), e in -5i64..6) {
            prop_assert!(canonical(&(&x + &y)));
            prop_assert!(canonical(&(&x - &y)));
            prop_assert!(canonical(&(&x * &y)));
            prop_assert!(canonical(&(-&x)));
            if !y.is_zero() {
                prop_assert!(canonical(&x.checked_div(&y).unwrap()));
            }
            if !x.is_zero() {
                prop_assert!(canonical(&x.pow(e).unwrap()));
            }
        }

        #[test]
        fn field_laws_hold_exactly(x in arb_rational(), y in arb_rational(), z in arb_rational()) {
            prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
            prop_assert_eq!(&x * &y, &y * &x);
            prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
            if !y.is_zero() {
                prop_assert_eq!(&x.checked_div(&y).unwrap() * &y, x.clone());
            }
        }

        #[test]
        fn display_parse_round_trip(x in arb_rational()) {
            prop_assert_eq!(x.to_string().parse::<Rational>().unwrap(), x);
        }
    }
}
