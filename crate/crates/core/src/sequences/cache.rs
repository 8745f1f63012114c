use std::collections::HashMap;
use std::sync::{LazyLock, RwLock};

use num_bigint::BigInt;
use num_traits::One;

use crate::exact_math::{binomial, gen_binomial, Rational};

use super::SeqError;

static GLOBAL: LazyLock<SeqCache> = LazyLock::new(SeqCache::new);

/// Memo tables for every recurrence-defined family.
///
/// Tables only ever grow by appending, and every entry is a pure function of
/// its index, so concurrent readers observe the same values regardless of
/// which thread extended a table first. Writers are serialized per table.
#[derive(Default)]
pub struct SeqCache {
    harmonic: RwLock<Vec<Rational>>,
    orders: RwLock<HashMap<u32, Vec<Rational>>>,
    odd: RwLock<Vec<Rational>>,
    // harmonic_like[m][n] = H_n(m)
    harmonic_like: RwLock<Vec<Vec<Rational>>>,
    stirling: RwLock<Vec<Vec<BigInt>>>,
    // hyper[p][n] = H_{n,p}; hyper[0][0] is a placeholder and never returned
    hyper: RwLock<Vec<Vec<Rational>>>,
}

fn prefix_table(
    lock: &RwLock<Vec<Rational>>,
    n: usize,
    term: impl Fn(usize) -> Rational,
) -> Rational {
    if let Some(v) = lock.read().expect("cache lock poisoned").get(n) {
        return v.clone();
    }
    let mut table = lock.write().expect("cache lock poisoned");
    if table.is_empty() {
        table.push(Rational::zero());
    }
    while table.len() <= n {
        let k = table.len();
        let next = &table[k - 1] + term(k);
        table.push(next);
    }
    table[n].clone()
}

impl SeqCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// Process-wide cache used by the free functions in [`crate::sequences`].
    pub fn global() -> &'static SeqCache {
        &GLOBAL
    }

    /// `H_n`, with `H_0 = 0`.
    pub fn harmonic(&self, n: u64) -> Rational {
        prefix_table(&self.harmonic, n as usize, |k| Rational::frac(1, k as i64))
    }

    /// `H_n^{(r)} = sum 1/k^r`.
    pub fn harmonic_order(&self, n: u64, r: u32) -> Rational {
        if r == 1 {
            return self.harmonic(n);
        }
        let n = n as usize;
        if let Some(v) = self
            .orders
            .read()
            .expect("cache lock poisoned")
            .get(&r)
            .and_then(|t| t.get(n))
        {
            return v.clone();
        }
        let mut orders = self.orders.write().expect("cache lock poisoned");
        let table = orders.entry(r).or_insert_with(|| vec![Rational::zero()]);
        while table.len() <= n {
            let k = table.len();
            let term = Rational::one() / Rational::from(k).upow(r as u64);
            let next = &table[k - 1] + term;
            table.push(next);
        }
        table[n].clone()
    }

    /// `O_n = sum 1/(2k-1)`, with `O_0 = 0`.
    pub fn odd_harmonic(&self, n: u64) -> Rational {
        prefix_table(&self.odd, n as usize, |k| {
            Rational::frac(1, 2 * k as i64 - 1)
        })
    }

    /// `H_n(m)` through `H_n(m+1) = sum_{j=1}^n H_{n-j}(m) / j`, seeded with
    /// `H_n(0) = 1` and `H_0(m) = 0` for `m >= 1`.
    pub fn harmonic_like(&self, n: u64, m: u64) -> Rational {
        let (n, m) = (n as usize, m as usize);
        if let Some(v) = self
            .harmonic_like
            .read()
            .expect("cache lock poisoned")
            .get(m)
            .and_then(|row| row.get(n))
        {
            return v.clone();
        }
        let mut rows = self.harmonic_like.write().expect("cache lock poisoned");
        while rows.len() <= m {
            rows.push(Vec::new());
        }
        for level in 0..=m {
            let have = rows[level].len();
            if have > n {
                continue;
            }
            if level == 0 {
                rows[0].resize(n + 1, Rational::one());
                continue;
            }
            let (lower, upper) = rows.split_at_mut(level);
            let prev = &lower[level - 1];
            let row = &mut upper[0];
            for k in have..=n {
                let value = if k == 0 {
                    Rational::zero()
                } else {
                    (1..=k)
                        .map(|j| &prev[k - j] * Rational::frac(1, j as i64))
                        .sum()
                };
                row.push(value);
            }
        }
        rows[m][n].clone()
    }

    /// Full row `H_0(m), ..., H_n(m)`.
    pub fn harmonic_like_row(&self, m: u64, n: u64) -> Vec<Rational> {
        self.harmonic_like(n, m);
        let rows = self.harmonic_like.read().expect("cache lock poisoned");
        rows[m as usize][..=n as usize].to_vec()
    }

    /// Signed Stirling number of the first kind from the triangle
    /// `s(n+1, k) = s(n, k-1) - n s(n, k)`, `s(0, 0) = 1`.
    pub fn stirling1(&self, n: u64, k: u64) -> BigInt {
        if k > n {
            return BigInt::ZERO;
        }
        let (n, k) = (n as usize, k as usize);
        if let Some(row) = self.stirling.read().expect("cache lock poisoned").get(n) {
            return row[k].clone();
        }
        let mut tri = self.stirling.write().expect("cache lock poisoned");
        if tri.is_empty() {
            tri.push(vec![BigInt::one()]);
        }
        while tri.len() <= n {
            let i = tri.len() - 1;
            let prev = &tri[i];
            let mut row = vec![BigInt::ZERO; i + 2];
            for (j, slot) in row.iter_mut().enumerate() {
                let left = if j >= 1 {
                    prev[j - 1].clone()
                } else {
                    BigInt::ZERO
                };
                let here = prev.get(j).cloned().unwrap_or(BigInt::ZERO);
                *slot = left - here * i;
            }
            tri.push(row);
        }
        tri[n][k].clone()
    }

    /// Hyperharmonic `H_{n,p}` by iterated partial sums of `H_{n,0} = 1/n`.
    pub fn hyperharmonic(&self, n: u64, p: u64) -> Result<Rational, SeqError> {
        if n == 0 && p == 0 {
            return Err(SeqError::Domain(
                "hyperharmonic H_{0,0} is undefined (H_{n,0} = 1/n)".into(),
            ));
        }
        let (n, p) = (n as usize, p as usize);
        if let Some(v) = self
            .hyper
            .read()
            .expect("cache lock poisoned")
            .get(p)
            .and_then(|row| row.get(n))
        {
            return Ok(v.clone());
        }
        let mut rows = self.hyper.write().expect("cache lock poisoned");
        while rows.len() <= p {
            rows.push(vec![Rational::zero()]);
        }
        for level in 0..=p {
            let (lower, upper) = rows.split_at_mut(level);
            let row = &mut upper[0];
            while row.len() <= n {
                let k = row.len();
                let next = if level == 0 {
                    Rational::frac(1, k as i64)
                } else {
                    &row[k - 1] + &lower[level - 1][k]
                };
                row.push(next);
            }
        }
        Ok(rows[p][n].clone())
    }

    /// Closed form `H_{n,p+1} = C(n+p, n) (H_{n+p} - H_p)`, independent of the
    /// partial-sum tables.
    pub fn hyperharmonic_closed(&self, n: u64, p: u64) -> Result<Rational, SeqError> {
        if p == 0 {
            if n == 0 {
                return Err(SeqError::Domain(
                    "hyperharmonic H_{0,0} is undefined (H_{n,0} = 1/n)".into(),
                ));
            }
            return Ok(Rational::frac(1, n as i64));
        }
        let q = p - 1;
        Ok(Rational::from(binomial(n + q, n)) * (self.harmonic(n + q) - self.harmonic(q)))
    }

    /// `H_{r,p+1/2} = 2^{1-2r} C(2p,p)^{-1} C(2(r+p), r+p) C(r+p, r) (O_{r+p} - O_p)`.
    pub fn hyperharmonic_half(&self, r: u64, p: u64) -> Rational {
        let scale = Rational::from(2) / Rational::from(4).upow(r);
        scale / Rational::from(binomial(2 * p, p))
            * Rational::from(binomial(2 * (r + p), r + p))
            * Rational::from(binomial(r + p, r))
            * (self.odd_harmonic(r + p) - self.odd_harmonic(p))
    }

    /// Second route for `H_{r,p+1/2}`: the generalized binomial
    /// `C(r+p-1/2, r)` times the half-integer harmonic difference
    /// `H_{r+p-1/2} - H_{p-1/2}`, the latter summed from its functional equation.
    pub fn hyperharmonic_half_via_gen_binomial(&self, r: u64, p: u64) -> Rational {
        let x = Rational::from(r + p) - Rational::frac(1, 2);
        gen_binomial(&x, r) * half_harmonic_diff((r + p) as i64, p as i64)
    }

    /// `Ĥ_n = H_{n-1/2} - H_{-1/2} = 2 O_n`.
    pub fn half_harmonic_offset(&self, n: u64) -> Rational {
        Rational::from(2) * self.odd_harmonic(n)
    }
}

/// `H_{upper-1/2} - H_{lower-1/2}` for integers of either sign, summed from
/// `H_x - H_{x-1} = 1/x`. Never forms an absolute half-integer harmonic value.
pub fn half_harmonic_diff(upper: i64, lower: i64) -> Rational {
    let step = |j: i64| Rational::frac(2, 2 * j - 1);
    if upper >= lower {
        (lower + 1..=upper).map(step).sum()
    } else {
        -(upper + 1..=lower).map(step).sum::<Rational>()
    }
}
