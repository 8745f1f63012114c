//! Identity registry and verifier.
//!
//! Every identity implements [`Identity`]: two independent evaluators (left and
//! right side) over a parameter [`Grid`]. The [`IdentityRegistry`] holds them by
//! id; verification evaluates both sides exactly on every grid point and
//! records the first point, in grid order, where they differ.

mod grid;
mod section1;
mod section2;
mod section3;
mod section4;
mod telescope;

pub use grid::{Axis, Binding, Grid, GridOverrides, Param};
pub use telescope::{
    telescope_harmonic_check, telescope_kollar_check, telescope_linear_check,
    telescope_reciprocal_check,
};

use std::collections::BTreeMap;
use std::ops::RangeInclusive;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::exact_math::{choose, factorial, gen_binomial, Rational};
use crate::sequences::SeqCache;

pub const SECTION1: &str = "section1";
pub const SECTION2: &str = "section2";
pub const SECTION3: &str = "section3";
pub const SECTION4: &str = "section4";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdentityError {
    #[error("unknown identity {0:?}")]
    UnknownId(String),
    #[error("identity {0:?} is already registered")]
    Duplicate(String),
}

/// One checkable equality.
pub trait Identity: Send + Sync {
    fn id(&self) -> &str;
    fn title(&self) -> &str;
    /// The statement being checked, written out.
    fn anchor(&self) -> &str;
    fn tags(&self) -> &[&'static str];
    fn domain(&self) -> Grid;
    fn lhs(&self, binding: &Binding, cache: &SeqCache) -> Rational;
    fn rhs(&self, binding: &Binding, cache: &SeqCache) -> Rational;
}

/// Evaluation context handed to side evaluators.
pub struct Env<'a> {
    pub binding: &'a Binding,
    pub cache: &'a SeqCache,
}

fn idx(k: i64) -> u64 {
    u64::try_from(k).unwrap_or_else(|_| panic!("negative sequence index {k}"))
}

impl Env<'_> {
    pub fn int(&self, name: &str) -> i64 {
        self.binding.int(name)
    }
    pub fn n(&self) -> i64 {
        self.int("n")
    }
    pub fn m(&self) -> i64 {
        self.int("m")
    }
    pub fn p(&self) -> i64 {
        self.int("p")
    }
    pub fn rat(&self, name: &str) -> Rational {
        self.binding.rat(name)
    }

    /// `H_k`
    pub fn h(&self, k: i64) -> Rational {
        self.cache.harmonic(idx(k))
    }
    /// `H_k^{(2)}`
    pub fn h2(&self, k: i64) -> Rational {
        self.cache.harmonic_order(idx(k), 2)
    }
    /// `H_k(m)`
    pub fn hm(&self, k: i64, m: i64) -> Rational {
        self.cache.harmonic_like(idx(k), idx(m))
    }
    /// `O_k`
    pub fn o(&self, k: i64) -> Rational {
        self.cache.odd_harmonic(idx(k))
    }
    /// `s(n, k)`
    pub fn s(&self, n: i64, k: i64) -> Rational {
        self.cache.stirling1(idx(n), idx(k)).into()
    }
    /// `H_{n,p}`
    pub fn hyp(&self, n: i64, p: i64) -> Rational {
        self.cache
            .hyperharmonic(idx(n), idx(p))
            .expect("grid excludes H_{0,0}")
    }
    /// `F_k`
    pub fn fib(&self, k: i64) -> Rational {
        crate::sequences::fibonacci(idx(k)).into()
    }
    /// `L_k`
    pub fn luc(&self, k: i64) -> Rational {
        crate::sequences::lucas(idx(k)).into()
    }
}

/// `sum_{k in range} f(k)`, zero for an empty range.
pub fn sum(range: RangeInclusive<i64>, f: impl FnMut(i64) -> Rational) -> Rational {
    range.map(f).sum()
}

/// `C(n, k)` as a rational, zero outside `0 <= k <= n`.
pub fn c(n: i64, k: i64) -> Rational {
    choose(n, k).into()
}

pub fn fact(n: i64) -> Rational {
    factorial(idx(n)).into()
}

pub fn q(x: i64) -> Rational {
    Rational::from(x)
}

pub fn frac(p: i64, d: i64) -> Rational {
    Rational::frac(p, d)
}

/// `x^k` for `k >= 0`.
pub fn pow(x: &Rational, k: i64) -> Rational {
    x.upow(idx(k))
}

/// `C(x, k)` for rational `x`.
pub fn gbinom(x: &Rational, k: i64) -> Rational {
    gen_binomial(x, idx(k))
}

type Side = fn(&Env) -> Rational;

/// An identity given by a pair of plain evaluator functions.
pub struct IdentityDef {
    pub id: &'static str,
    pub tags: &'static [&'static str],
    pub title: &'static str,
    pub anchor: &'static str,
    pub grid: Grid,
    pub lhs: Side,
    pub rhs: Side,
}

impl Identity for IdentityDef {
    fn id(&self) -> &str {
        self.id
    }
    fn title(&self) -> &str {
        self.title
    }
    fn anchor(&self) -> &str {
        self.anchor
    }
    fn tags(&self) -> &[&'static str] {
        self.tags
    }
    fn domain(&self) -> Grid {
        self.grid.clone()
    }
    fn lhs(&self, binding: &Binding, cache: &SeqCache) -> Rational {
        (self.lhs)(&Env { binding, cache })
    }
    fn rhs(&self, binding: &Binding, cache: &SeqCache) -> Rational {
        (self.rhs)(&Env { binding, cache })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub binding: Binding,
    pub lhs: Rational,
    pub rhs: Rational,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub identity: String,
    pub anchor: String,
    pub cases: u64,
    pub passed: bool,
    pub first_failure: Option<Failure>,
    pub elapsed_ms: f64,
}

impl VerificationReport {
    /// Equality ignoring `elapsed_ms`.
    pub fn same_outcome(&self, other: &VerificationReport) -> bool {
        self.identity == other.identity
            && self.anchor == other.anchor
            && self.cases == other.cases
            && self.passed == other.passed
            && self.first_failure == other.first_failure
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CatalogEntry {
    pub id: String,
    pub title: String,
    pub anchor: String,
    pub tags: Vec<String>,
    pub cases: usize,
}

/// Checks `identity` on every point of its (possibly overridden) grid.
pub fn verify_identity(
    identity: &dyn Identity,
    overrides: &GridOverrides,
    cache: &SeqCache,
) -> VerificationReport {
    let start = Instant::now();
    let points = identity.domain().with_overrides(overrides).points();
    let mut first_failure = None;
    for binding in &points {
        let lhs = identity.lhs(binding, cache);
        let rhs = identity.rhs(binding, cache);
        if lhs != rhs && first_failure.is_none() {
            first_failure = Some(Failure {
                binding: binding.clone(),
                lhs,
                rhs,
            });
        }
    }
    VerificationReport {
        identity: identity.id().to_string(),
        anchor: identity.anchor().to_string(),
        cases: points.len() as u64,
        passed: first_failure.is_none(),
        first_failure,
        elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
    }
}

/// Identities keyed by id.
#[derive(Default)]
pub struct IdentityRegistry {
    entries: BTreeMap<String, Box<dyn Identity>>,
}

impl IdentityRegistry {
    pub fn new() -> Self {
        Self::default()
    }

    /// Every identity this crate ships.
    pub fn standard() -> Self {
        let mut reg = Self::new();
        section1::register(&mut reg);
        section2::register(&mut reg);
        section3::register(&mut reg);
        section4::register(&mut reg);
        reg
    }

    pub fn register(&mut self, identity: Box<dyn Identity>) -> Result<(), IdentityError> {
        let id = identity.id().to_string();
        if self.entries.contains_key(&id) {
            return Err(IdentityError::Duplicate(id));
        }
        self.entries.insert(id, identity);
        Ok(())
    }

    fn add(&mut self, def: IdentityDef) {
        self.register(Box::new(def))
            .expect("identity ids are unique");
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, id: &str) -> Option<&dyn Identity> {
        self.entries.get(id).map(|b| b.as_ref())
    }

    pub fn ids(&self) -> impl Iterator<Item = &str> {
        self.entries.keys().map(String::as_str)
    }

    pub fn catalog(&self) -> Vec<CatalogEntry> {
        self.entries
            .values()
            .map(|e| CatalogEntry {
                id: e.id().to_string(),
                title: e.title().to_string(),
                anchor: e.anchor().to_string(),
                tags: e.tags().iter().map(|t| t.to_string()).collect(),
                cases: e.domain().cardinality(),
            })
            .collect()
    }

    pub fn verify(
        &self,
        id: &str,
        overrides: &GridOverrides,
        cache: &SeqCache,
    ) -> Result<VerificationReport, IdentityError> {
        let identity = self
            .get(id)
            .ok_or_else(|| IdentityError::UnknownId(id.to_string()))?;
        Ok(verify_identity(identity, overrides, cache))
    }

    /// Verifies every identity carrying `tag` (all when `None`), in parallel,
    /// returning reports sorted by id.
    pub fn verify_all(
        &self,
        tag: Option<&str>,
        overrides: &GridOverrides,
        cache: &SeqCache,
    ) -> Vec<VerificationReport> {
        let selected: Vec<&dyn Identity> = self
            .entries
            .values()
            .map(|b| b.as_ref())
            .filter(|e| tag.is_none_or(|t| e.tags().contains(&t)))
            .collect();
        let mut reports: Vec<VerificationReport> = selected
            .into_par_iter()
            .map(|e| verify_identity(e, overrides, cache))
            .collect();
        reports.sort_by(|a, b| a.identity.cmp(&b.identity));
        reports
    }
}
