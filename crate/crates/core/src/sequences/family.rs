//! Named sequence families behind one trait, looked up by their stable names.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::exact_math::Rational;

use super::{fibonacci, lucas, SeqCache, SeqError};

/// The public family vocabulary shared by the CLI and the identity registry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Harmonic,
    HarmonicOrder,
    OddHarmonic,
    HarmonicLike,
    Stirling1,
    Hyperharmonic,
    HyperharmonicHalf,
    Fibonacci,
    Lucas,
    HalfHarmonicOffset,
}

impl Family {
    pub const ALL: [Family; 10] = [
        Family::Harmonic,
        Family::HarmonicOrder,
        Family::OddHarmonic,
        Family::HarmonicLike,
        Family::Stirling1,
        Family::Hyperharmonic,
        Family::HyperharmonicHalf,
        Family::Fibonacci,
        Family::Lucas,
        Family::HalfHarmonicOffset,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Harmonic => "harmonic",
            Family::HarmonicOrder => "harmonic_order",
            Family::OddHarmonic => "odd_harmonic",
            Family::HarmonicLike => "harmonic_like",
            Family::Stirling1 => "stirling1",
            Family::Hyperharmonic => "hyperharmonic",
            Family::HyperharmonicHalf => "hyperharmonic_half",
            Family::Fibonacci => "fibonacci",
            Family::Lucas => "lucas",
            Family::HalfHarmonicOffset => "half_harmonic_offset",
        }
    }

    /// Parameter names the family requires, each with its smallest legal value.
    pub fn params(self) -> &'static [(&'static str, i64)] {
        match self {
            Family::HarmonicOrder => &[("r", 1)],
            Family::HarmonicLike => &[("m", 0)],
            Family::Stirling1 => &[("k", 0)],
            Family::Hyperharmonic | Family::HyperharmonicHalf => &[("p", 0)],
            _ => &[],
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = SeqError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| SeqError::UnknownFamily(s.to_string()))
    }
}

/// One evaluable sequence: index `n` to an exact value.
pub trait Sequence: Send + Sync {
    fn family(&self) -> Family;
    fn term(&self, n: u64, cache: &SeqCache) -> Result<Rational, SeqError>;
}

/// A validated `(family, parameters)` pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeqSpec {
    family: Family,
    params: BTreeMap<String, i64>,
}

impl SeqSpec {
    /// Checks that `params` holds exactly the family's parameters, each in range.
    pub fn new(family: Family, params: BTreeMap<String, i64>) -> Result<Self, SeqError> {
        let wanted = family.params();
        for (name, min) in wanted {
            let Some(&value) = params.get(*name) else {
                return Err(SeqError::MissingParam {
                    family: family.name(),
                    param: name,
                });
            };
            if value < *min {
                return Err(SeqError::InvalidParam {
                    param: name.to_string(),
                    value,
                    reason: format!("{} requires {name} >= {min}", family.name()),
                });
            }
        }
        if let Some(extra) = params.keys().find(|k| !wanted.iter().any(|(w, _)| w == k)) {
            return Err(SeqError::UnexpectedParam {
                family: family.name(),
                param: extra.clone(),
            });
        }
        Ok(SeqSpec { family, params })
    }

    pub fn parse(family: &str, params: BTreeMap<String, i64>) -> Result<Self, SeqError> {
        Self::new(family.parse()?, params)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn params(&self) -> &BTreeMap<String, i64> {
        &self.params
    }

    fn param(&self, name: &str) -> u64 {
        self.params[name] as u64
    }

    /// Instantiates the evaluator for this spec.
    pub fn build(&self) -> Box<dyn Sequence> {
        match self.family {
            Family::Harmonic => Box::new(Harmonic),
            Family::HarmonicOrder => Box::new(HarmonicOrder(self.param("r") as u32)),
            Family::OddHarmonic => Box::new(OddHarmonic),
            Family::HarmonicLike => Box::new(HarmonicLike(self.param("m"))),
            Family::Stirling1 => Box::new(Stirling1(self.param("k"))),
            Family::Hyperharmonic => Box::new(Hyperharmonic(self.param("p"))),
            Family::HyperharmonicHalf => Box::new(HyperharmonicHalf(self.param("p"))),
            Family::Fibonacci => Box::new(Fibonacci),
            Family::Lucas => Box::new(Lucas),
            Family::HalfHarmonicOffset => Box::new(HalfHarmonicOffset),
        }
    }

    pub fn eval(&self, n: u64, cache: &SeqCache) -> Result<Rational, SeqError> {
        self.build().term(n, cache)
    }
}

struct Harmonic;
struct HarmonicOrder(u32);
struct OddHarmonic;
struct HarmonicLike(u64);
struct Stirling1(u64);
struct Hyperharmonic(u64);
struct HyperharmonicHalf(u64);
struct Fibonacci;
struct Lucas;
struct HalfHarmonicOffset;

impl Sequence for Harmonic {
    fn family(&self) -> Family {
        Family::Harmonic
    }
    fn term(&self, n: u64, cache: &SeqCache) -> Result<Rational, SeqError> {
        Ok(cache.harmonic(n))
    }
}

impl Sequence for HarmonicOrder {
    fn family(&self) -> Family {
        Family::HarmonicOrder
    }
    fn term(&self, n: u64, cache: &SeqCache) -> Result<Rational, SeqError> {
        Ok(cache.harmonic_order(n, self.0))
    }
}

impl Sequence for OddHarmonic {
    fn family(&self) -> Family {
        Family::OddHarmonic
    }
    fn term(&self, n: u64, cache: &SeqCache) -> Result<Rational, SeqError> {
        Ok(cache.odd_harmonic(n))
    }
}

impl Sequence for HarmonicLike {
    fn family(&self) -> Family {
        Family::HarmonicLike
    }
    fn term(&self, n: u64, cache: &SeqCache) -> Result<Rational, SeqError> {
        Ok(cache.harmonic_like(n, self.0))
    }
}

impl Sequence for Stirling1 {
    fn family(&self) -> Family {
        Family::Stirling1
    }
    fn term(&self, n: u64, cache: &SeqCache) -> Result<Rational, SeqError> {
        Ok(cache.stirling1(n, self.0).into())
    }
}

impl Sequence for Hyperharmonic {
    fn family(&self) -> Family {
        Family::Hyperharmonic
    }
    fn term(&self, n: u64, cache: &SeqCache) -> Result<Rational, SeqError> {
        cache.hyperharmonic(n, self.0)
    }
}

/// Indexed by `r` in `H_{r,p+1/2}`.
impl Sequence for HyperharmonicHalf {
    fn family(&self) -> Family {
        Family::HyperharmonicHalf
    }
    fn term(&self, n: u64, cache: &SeqCache) -> Result<Rational, SeqError> {
        Ok(cache.hyperharmonic_half(n, self.0))
    }
}

impl Sequence for Fibonacci {
    fn family(&self) -> Family {
        Family::Fibonacci
    }
    fn term(&self, n: u64, _: &SeqCache) -> Result<Rational, SeqError> {
        Ok(fibonacci(n).into())
    }
}

impl Sequence for Lucas {
    fn family(&self) -> Family {
        Family::Lucas
    }
    fn term(&self, n: u64, _: &SeqCache) -> Result<Rational, SeqError> {
        Ok(lucas(n).into())
    }
}

impl Sequence for HalfHarmonicOffset {
    fn family(&self) -> Family {
        Family::HalfHarmonicOffset
    }
    fn term(&self, n: u64, cache: &SeqCache) -> Result<Rational, SeqError> {
        Ok(cache.half_harmonic_offset(n))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(pairs: &[(&str, i64)]) -> BTreeMap<String, i64> {
        pairs.iter().map(|(k, v)| (k.to_string(), *v)).collect()
    }

    #[test]
    fn names_round_trip() {
        for f in Family::ALL {
            assert_eq!(f.name().parse::<Family>().unwrap(), f);
        }
        assert!(matches!(
            "nope".parse::<Family>(),
            Err(SeqError::UnknownFamily(_))
        ));
    }

    #[test]
    fn parameter_sets_are_exact() {
        assert!(SeqSpec::parse("harmonic_like", params(&[("m", 2)])).is_ok());
        assert!(matches!(
            SeqSpec::parse("harmonic_like", params(&[])),
            Err(SeqError::MissingParam { param: "m", .. })
        ));
        assert!(matches!(
            SeqSpec::parse("harmonic_like", params(&[("m", -1)])),
            Err(SeqError::InvalidParam { .. })
        ));
        assert!(matches!(
            SeqSpec::parse("harmonic", params(&[("m", 1)])),
            Err(SeqError::UnexpectedParam { .. })
        ));
        assert!(matches!(
            SeqSpec::parse("harmonic_order", params(&[("r", 0)])),
            Err(SeqError::InvalidParam { .. })
        ));
    }

    #[test]
    fn evaluators_dispatch_by_family() {
        let cache = SeqCache::new();
        let spec = SeqSpec::parse("harmonic_like", params(&[("m", 2)])).unwrap();
        let seq = spec.build();
        assert_eq!(seq.family(), Family::HarmonicLike);
        let values: Vec<String> = (0..=5)
            .map(|n| seq.term(n, &cache).unwrap().to_string())
            .collect();
        assert_eq!(values, ["0", "0", "1", "2", "35/12", "15/4"]);

        let s = SeqSpec::parse("stirling1", params(&[("k", 2)])).unwrap();
        assert_eq!(s.eval(5, &cache).unwrap(), Rational::from(-50));
        let hyp = SeqSpec::parse("hyperharmonic", params(&[("p", 0)])).unwrap();
        assert!(hyp.eval(0, &cache).is_err());
        let lucas = SeqSpec::parse("lucas", params(&[])).unwrap();
        assert_eq!(lucas.eval(0, &cache).unwrap(), Rational::from(2));
    }
}
