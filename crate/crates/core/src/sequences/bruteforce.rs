use crate::exact_math::{binomial, Rational};

use super::SeqError;

/// Default ceiling on the number of tuples the composition oracle may visit.
pub const DEFAULT_TUPLE_CEILING: u64 = 2_000_000;

/// Lazily enumerates `m`-tuples of positive integers with sum at most `n`,
/// in lexicographic order.
#[derive(Debug, Clone)]
pub struct BoundedCompositions {
    bound: u64,
    parts: Vec<u64>,
    sum: u64,
    started: bool,
    done: bool,
}

impl BoundedCompositions {
    pub fn new(bound: u64, len: usize) -> Self {
        let sum = len as u64;
        BoundedCompositions {
            bound,
            parts: vec![1; len],
            sum,
            started: false,
            done: len == 0 || sum > bound,
        }
    }
}

impl Iterator for BoundedCompositions {
    type Item = Vec<u64>;

    fn next(&mut self) -> Option<Vec<u64>> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(self.parts.clone());
        }
        // odometer: bump the rightmost part that still fits, reset the rest to 1
        for i in (0..self.parts.len()).rev() {
            if self.sum < self.bound {
                self.parts[i] += 1;
                self.sum += 1;
                return Some(self.parts.clone());
            }
            self.sum -= self.parts[i] - 1;
            self.parts[i] = 1;
        }
        self.done = true;
        None
    }
}

/// The literal defining sum `sum 1/(k_1 ... k_m)` over positive tuples with
/// `k_1 + ... + k_m <= n`, refused when the tuple count `C(n, m)` exceeds
/// `ceiling`.
pub fn harmonic_like_bruteforce_with_ceiling(
    n: u64,
    m: u64,
    ceiling: u64,
) -> Result<Rational, SeqError> {
    if m == 0 {
        return Err(SeqError::Domain(
            "the composition oracle needs m >= 1".into(),
        ));
    }
    let count = binomial(n, m);
    if count > ceiling.into() {
        return Err(SeqError::TooExpensive {
            tuples: count.to_string(),
            ceiling,
        });
    }
    Ok(BoundedCompositions::new(n, m as usize)
        .map(|tuple| {
            let product: u128 = tuple.iter().map(|&k| k as u128).product();
            Rational::new(1, product).expect("positive parts")
        })
        .sum())
}

pub fn harmonic_like_bruteforce(n: u64, m: u64) -> Result<Rational, SeqError> {
    harmonic_like_bruteforce_with_ceiling(n, m, DEFAULT_TUPLE_CEILING)
}
