//! Hyperharmonic numbers, odd harmonic numbers and the half-integer
//! hyperharmonic values `H_{r,p+1/2}`.
//!
//! Half-integer harmonic numbers only ever appear as differences
//! `H_{a-1/2} - H_{b-1/2}`, which are rational.

use super::{c, frac, gbinom, pow, q, sum, Env, Grid, IdentityDef, IdentityRegistry, SECTION4};
use crate::exact_math::Rational;
use crate::sequences::half_harmonic_diff;

/// `C(2(k+p), k+p) C(k+p, k)`
fn w(k: i64, p: i64) -> Rational {
    c(2 * (k + p), k + p) * c(k + p, k)
}

/// `C(2k, k)`
fn cb(k: i64) -> Rational {
    c(2 * k, k)
}

fn quarter(k: i64) -> Rational {
    Rational::one() / pow(&q(4), k)
}

fn sq_minus(e: &Env, k: i64) -> Rational {
    let h = e.h(k);
    &h * &h - e.h2(k)
}

fn half_hyper(e: &Env, r: i64, p: i64) -> Rational {
    e.cache.hyperharmonic_half(r as u64, p as u64)
}

fn lemma(
    id: &'static str,
    anchor: &'static str,
    lhs: fn(&Env) -> Rational,
    rhs: fn(&Env) -> Rational,
) -> IdentityDef {
    IdentityDef {
        id,
        tags: &[SECTION4],
        title: "Half-integer harmonic differences through odd harmonic numbers",
        anchor,
        grid: Grid::new().range("n", 0, 30),
        lhs,
        rhs,
    }
}

pub(super) fn register(reg: &mut IdentityRegistry) {
    reg.add(IdentityDef {
        id: "hyperharmonic_closed_form",
        tags: &[SECTION4],
        title: "Compact form of hyperharmonic numbers",
        anchor: "H_{n,p+1} = C(n+p, n) (H_{n+p} - H_p)",
        grid: Grid::new().range("n", 0, 40).range("p", 0, 8),
        lhs: |e| e.hyp(e.n(), e.p() + 1),
        rhs: |e| {
            let (n, p) = (e.n(), e.p());
            c(n + p, n) * (e.h(n + p) - e.h(p))
        },
    });

    reg.add(IdentityDef {
        id: "hyperharmonic_step",
        tags: &[SECTION4],
        title: "Backward difference of hyperharmonic numbers",
        anchor: "H_{k,p+1} - H_{k-1,p+1} = H_{k,p}, k >= 1",
        grid: Grid::new().range("n", 1, 40).range("p", 0, 8),
        lhs: |e| {
            let (k, p) = (e.n() as u64, e.p() as u64);
            let closed = |n| e.cache.hyperharmonic_closed(n, p + 1).expect("p + 1 >= 1");
            closed(k) - closed(k - 1)
        },
        rhs: |e| e.hyp(e.n(), e.p()),
    });

    reg.add(IdentityDef {
        id: "thm_hyphar",
        tags: &[SECTION4],
        title: "Hyperharmonic convolution raising the order of H_n(m)",
        anchor:
            "sum_{k=0}^n C(k+p,k) H_{n-k}(m) (H_{k+p} - H_p) = sum_{k=0}^n C(k+p,k) H_{n-k}(m+1)",
        grid: Grid::new()
            .range("n", 0, 25)
            .range("p", 0, 5)
            .range("m", 0, 4),
        lhs: |e| {
            let (n, p, m) = (e.n(), e.p(), e.m());
            sum(0..=n, |k| {
                c(k + p, k) * e.hm(n - k, m) * (e.h(k + p) - e.h(p))
            })
        },
        rhs: |e| {
            let (n, p, m) = (e.n(), e.p(), e.m());
            sum(0..=n, |k| c(k + p, k) * e.hm(n - k, m + 1))
        },
    });

    reg.add(IdentityDef {
        id: "hyphar_m0",
        tags: &[SECTION4],
        title: "Hyperharmonic convolution, m = 0",
        anchor: "sum_{k=0}^n C(k+p,k) (H_{k+p} - H_p) = sum_{k=0}^n C(k+p,k) H_{n-k}",
        grid: Grid::new().range("n", 0, 30).range("p", 0, 6),
        lhs: |e| {
            let p = e.p();
            sum(0..=e.n(), |k| c(k + p, k) * (e.h(k + p) - e.h(p)))
        },
        rhs: |e| {
            let (n, p) = (e.n(), e.p());
            sum(0..=n, |k| c(k + p, k) * e.h(n - k))
        },
    });

    reg.add(IdentityDef {
        id: "hyphar_m1",
        tags: &[SECTION4],
        title: "Hyperharmonic convolution, m = 1",
        anchor: "sum_{k=0}^n C(k+p,k) H_{n-k} (H_{k+p} - H_p) = sum_{k=0}^n C(k+p,k) (H_{n-k}^2 - H_{n-k}^(2))",
        grid: Grid::new().range("n", 0, 30).range("p", 0, 6),
        lhs: |e| {
            let (n, p) = (e.n(), e.p());
            sum(0..=n, |k| c(k + p, k) * e.h(n - k) * (e.h(k + p) - e.h(p)))
        },
        rhs: |e| {
            let (n, p) = (e.n(), e.p());
            sum(0..=n, |k| c(k + p, k) * sq_minus(e, n - k))
        },
    });

    reg.add(IdentityDef {
        id: "odd_even_split",
        tags: &[SECTION4],
        title: "Harmonic numbers of even index",
        anchor: "H_{2n} = H_n/2 + O_n",
        grid: Grid::new().range("n", 0, 40),
        lhs: |e| e.h(2 * e.n()),
        rhs: |e| e.h(e.n()) * frac(1, 2) + e.o(e.n()),
    });

    reg.add(IdentityDef {
        id: "odd_odd_split",
        tags: &[SECTION4],
        title: "Harmonic numbers of odd index",
        anchor: "H_{2n-1} = H_{n-1}/2 + O_n, n >= 1",
        grid: Grid::new().range("n", 1, 40),
        lhs: |e| e.h(2 * e.n() - 1),
        rhs: |e| e.h(e.n() - 1) * frac(1, 2) + e.o(e.n()),
    });

    reg.add(lemma(
        "lemma_czxfdu7_1",
        "H_{n-1/2} - H_{-1/2} = 2 O_n",
        |e| half_harmonic_diff(e.n(), 0),
        |e| q(2) * e.o(e.n()),
    ));
    reg.add(lemma(
        "lemma_czxfdu7_2",
        "H_{n-1/2} - H_{1/2} = 2 (O_n - 1)",
        |e| half_harmonic_diff(e.n(), 1),
        |e| q(2) * (e.o(e.n()) - Rational::one()),
    ));
    reg.add(lemma(
        "lemma_czxfdu7_3",
        "H_{n+1/2} - H_{-1/2} = 2 O_{n+1}",
        |e| half_harmonic_diff(e.n() + 1, 0),
        |e| q(2) * e.o(e.n() + 1),
    ));
    reg.add(lemma(
        "lemma_czxfdu7_4",
        "H_{n+1/2} - H_{1/2} = 2 (O_{n+1} - 1)",
        |e| half_harmonic_diff(e.n() + 1, 1),
        |e| q(2) * (e.o(e.n() + 1) - Rational::one()),
    ));
    reg.add(lemma(
        "lemma_czxfdu7_5",
        "H_{n+1/2} - H_{n-1/2} = 2/(2n+1)",
        |e| half_harmonic_diff(e.n() + 1, e.n()),
        |e| frac(2, 2 * e.n() + 1),
    ));
    reg.add(lemma(
        "lemma_czxfdu7_6",
        "H_{n-1/2} - H_{-3/2} = 2 (O_n - 1)",
        |e| half_harmonic_diff(e.n(), -1),
        |e| q(2) * (e.o(e.n()) - Rational::one()),
    ));
    reg.add(lemma(
        "lemma_czxfdu7_7",
        "H_{n+1/2} - H_{-3/2} = 2 (O_{n+1} - 1)",
        |e| half_harmonic_diff(e.n() + 1, -1),
        |e| q(2) * (e.o(e.n() + 1) - Rational::one()),
    ));

    reg.add(IdentityDef {
        id: "tb96ki2",
        tags: &[SECTION4],
        title: "Shifted half-integer harmonic difference",
        anchor: "H_{r+p-1/2} - H_{p-1/2} = 2 (O_{r+p} - O_p)",
        grid: Grid::new().range("r", 0, 15).range("p", 0, 15),
        lhs: |e| half_harmonic_diff(e.int("r") + e.p(), e.p()),
        rhs: |e| {
            let (r, p) = (e.int("r"), e.p());
            q(2) * (e.o(r + p) - e.o(p))
        },
    });

    reg.add(IdentityDef {
        id: "j80dqx2",
        tags: &[SECTION4],
        title: "Generalized binomial at a half-integer",
        anchor: "C(r+p-1/2, r) = 4^{-r} C(2p,p)^{-1} C(2(r+p), r+p) C(r+p, r)",
        grid: Grid::new().range("r", 0, 15).range("p", 0, 15),
        lhs: |e| {
            let (r, p) = (e.int("r"), e.p());
            gbinom(&(q(r + p) - frac(1, 2)), r)
        },
        rhs: |e| {
            let (r, p) = (e.int("r"), e.p());
            quarter(r) / cb(p) * w(r, p)
        },
    });

    reg.add(IdentityDef {
        id: "lemma_m2jjbl5",
        tags: &[SECTION4],
        title: "Half-integer hyperharmonic numbers, central-binomial and generalized-binomial routes",
        anchor: "H_{r,p+1/2} = 2^{1-2r} C(2p,p)^{-1} C(2(r+p), r+p) C(r+p, r) (O_{r+p} - O_p) = C(r+p-1/2, r) (H_{r+p-1/2} - H_{p-1/2})",
        grid: Grid::new().range("r", 0, 15).range("p", 0, 15),
        lhs: |e| half_hyper(e, e.int("r"), e.p()),
        rhs: |e| {
            let (r, p) = (e.int("r") as u64, e.p() as u64);
            e.cache.hyperharmonic_half_via_gen_binomial(r, p)
        },
    });

    reg.add(IdentityDef {
        id: "hyperharmonic_half_partial_sums",
        tags: &[SECTION4],
        title: "Partial sums of half-integer hyperharmonic numbers",
        anchor: "sum_{k=1}^n H_{k,p+1/2} = H_{n,p+3/2}",
        grid: Grid::new().range("n", 0, 20).range("p", 0, 10),
        lhs: |e| {
            let p = e.p();
            sum(1..=e.n(), |k| half_hyper(e, k, p))
        },
        rhs: |e| half_hyper(e, e.n(), e.p() + 1),
    });

    reg.add(IdentityDef {
        id: "thm_suzj3to",
        tags: &[SECTION4],
        title: "Central-binomial sums of odd harmonic differences",
        anchor: "sum_{k=1}^n 4^{-k} C(2(k+p),k+p) C(k+p,k) (O_{k+p} - O_p) = 2^{-2n-1} (p+1)/(2p+1) C(2(n+p+1),n+p+1) C(n+p+1,n) (O_{n+p+1} - O_{p+1})",
        grid: Grid::new().range("n", 0, 20).range("p", 0, 20),
        lhs: |e| {
            let p = e.p();
            sum(1..=e.n(), |k| quarter(k) * w(k, p) * (e.o(k + p) - e.o(p)))
        },
        rhs: |e| {
            let (n, p) = (e.n(), e.p());
            quarter(n) * frac(p + 1, 2 * (2 * p + 1)) * w(n, p + 1) * (e.o(n + p + 1) - e.o(p + 1))
        },
    });

    reg.add(IdentityDef {
        id: "oklok93",
        tags: &[SECTION4],
        title: "Central-binomial sum of odd harmonic numbers",
        anchor: "sum_{k=1}^n O_k C(2k,k)/4^k = (n+1)/2^{2n+1} C(2(n+1),n+1) (O_{n+1} - 1)",
        grid: Grid::new().range("n", 0, 30),
        lhs: |e| sum(1..=e.n(), |k| e.o(k) * quarter(k) * cb(k)),
        rhs: |e| {
            let n = e.n();
            quarter(n) * frac(n + 1, 2) * cb(n + 1) * (e.o(n + 1) - Rational::one())
        },
    });

    reg.add(IdentityDef {
        id: "thm_odd_id1",
        tags: &[SECTION4],
        title: "Odd harmonic convolution raising the order of H_n(m)",
        anchor:
            "sum_{k=0}^n C(2k,k) O_k H_{n-k}(m)/4^k = (1/2) sum_{k=0}^n C(2k,k) H_{n-k}(m+1)/4^k",
        grid: Grid::new().range("n", 0, 25).range("m", 0, 4),
        lhs: |e| {
            let (n, m) = (e.n(), e.m());
            sum(0..=n, |k| cb(k) * e.o(k) * e.hm(n - k, m) * quarter(k))
        },
        rhs: |e| {
            let (n, m) = (e.n(), e.m());
            sum(0..=n, |k| cb(k) * e.hm(n - k, m + 1) * quarter(k)) * frac(1, 2)
        },
    });

    reg.add(IdentityDef {
        id: "zfc0q8z",
        tags: &[SECTION4],
        title: "Odd harmonic convolution, m = 0",
        anchor: "sum_{k=0}^n C(2k,k) O_k/4^k = (1/2) sum_{k=0}^n C(2k,k) H_{n-k}/4^k",
        grid: Grid::new().range("n", 0, 30),
        lhs: |e| sum(0..=e.n(), |k| cb(k) * e.o(k) * quarter(k)),
        rhs: |e| {
            let n = e.n();
            sum(0..=n, |k| cb(k) * e.h(n - k) * quarter(k)) * frac(1, 2)
        },
    });

    reg.add(IdentityDef {
        id: "odd_id1_sq",
        tags: &[SECTION4],
        title: "Odd harmonic convolution, m = 1",
        anchor: "sum_{k=0}^n C(2k,k) O_k H_{n-k}/4^k = (1/2) sum_{k=0}^n C(2k,k) (H_{n-k}^2 - H_{n-k}^(2))/4^k",
        grid: Grid::new().range("n", 0, 30),
        lhs: |e| {
            let n = e.n();
            sum(0..=n, |k| cb(k) * e.o(k) * e.h(n - k) * quarter(k))
        },
        rhs: |e| {
            let n = e.n();
            sum(0..=n, |k| cb(k) * sq_minus(e, n - k) * quarter(k)) * frac(1, 2)
        },
    });

    reg.add(IdentityDef {
        id: "tb6ik5l",
        tags: &[SECTION4],
        title: "Central-binomial convolution of harmonic numbers",
        anchor: "sum_{k=0}^n C(2k,k) H_{n-k}/4^k = (n+1)/2^{2n} C(2(n+1),n+1) (O_{n+1} - 1)",
        grid: Grid::new().range("n", 0, 30),
        lhs: |e| {
            let n = e.n();
            sum(0..=n, |k| cb(k) * e.h(n - k) * quarter(k))
        },
        rhs: |e| {
            let n = e.n();
            quarter(n) * q(n + 1) * cb(n + 1) * (e.o(n + 1) - Rational::one())
        },
    });

    reg.add(IdentityDef {
        id: "thm_general_p",
        tags: &[SECTION4],
        title: "Half-integer hyperharmonic convolution raising the order of H_n(m)",
        anchor: "sum_{k=0}^n 4^{-k} C(2(k+p),k+p) C(k+p,k) H_{n-k}(m) (O_{k+p} - O_p) = (1/2) sum_{k=0}^n 4^{-k} C(2(k+p),k+p) C(k+p,k) H_{n-k}(m+1)",
        grid: Grid::new().range("n", 0, 20).range("p", 0, 5).range("m", 0, 3),
        lhs: |e| {
            let (n, p, m) = (e.n(), e.p(), e.m());
            sum(0..=n, |k| quarter(k) * w(k, p) * e.hm(n - k, m) * (e.o(k + p) - e.o(p)))
        },
        rhs: |e| {
            let (n, p, m) = (e.n(), e.p(), e.m());
            sum(0..=n, |k| quarter(k) * w(k, p) * e.hm(n - k, m + 1)) * frac(1, 2)
        },
    });

    reg.add(IdentityDef {
        id: "general_p_particular",
        tags: &[SECTION4],
        title: "Central-binomial convolution of harmonic numbers with shift p",
        anchor: "sum_{k=0}^n 4^{-k} C(2(k+p),k+p) C(k+p,k) H_{n-k} = 4^{-n} (p+1)/(2p+1) C(2(n+p+1),n+p+1) C(n+p+1,n) (O_{n+p+1} - O_{p+1})",
        grid: Grid::new().range("n", 0, 25).range("p", 0, 6),
        lhs: |e| {
            let (n, p) = (e.n(), e.p());
            sum(0..=n, |k| quarter(k) * w(k, p) * e.h(n - k))
        },
        rhs: |e| {
            let (n, p) = (e.n(), e.p());
            quarter(n) * frac(p + 1, 2 * p + 1) * w(n, p + 1) * (e.o(n + p + 1) - e.o(p + 1))
        },
    });

    reg.add(IdentityDef {
        id: "thm_xld8bhi",
        tags: &[SECTION4],
        title: "Index-weighted sum of hyperharmonic numbers",
        anchor: "sum_{k=1}^n k H_{k,p} = n H_{n,p+1} - H_{n-1,p+2}, n >= 1",
        grid: Grid::new().range("n", 1, 25).range("p", 0, 6),
        lhs: |e| {
            let p = e.p();
            sum(1..=e.n(), |k| q(k) * e.hyp(k, p))
        },
        rhs: |e| {
            let (n, p) = (e.n(), e.p());
            q(n) * e.hyp(n, p + 1) - e.hyp(n - 1, p + 2)
        },
    });

    reg.add(IdentityDef {
        id: "thm_k_weighted_half",
        tags: &[SECTION4],
        title: "Index-weighted central-binomial sums of odd harmonic differences",
        anchor: "sum_{k=1}^n k 4^{-k} C(2(k+p),k+p) C(k+p,k) (O_{k+p} - O_p) = n 4^{-n} C(2(p+1),p+1)^{-1} C(2p,p) C(2(n+p+1),n+p+1) C(n+p+1,n) (O_{n+p+1} - O_{p+1}) - 2^{2-2n} C(2(p+2),p+2)^{-1} C(2p,p) C(2(n+p+1),n+p+1) C(n+p+1,n-1) (O_{n+p+1} - O_{p+2})",
        grid: Grid::new().range("n", 0, 25).range("p", 0, 6),
        lhs: |e| {
            let p = e.p();
            sum(1..=e.n(), |k| q(k) * quarter(k) * w(k, p) * (e.o(k + p) - e.o(p)))
        },
        rhs: |e| {
            let (n, p) = (e.n(), e.p());
            let top = c(2 * (n + p + 1), n + p + 1) * cb(p);
            let first = q(n) * quarter(n) / cb(p + 1)
                * &top
                * c(n + p + 1, n)
                * (e.o(n + p + 1) - e.o(p + 1));
            let second = q(4) * quarter(n) / cb(p + 2)
                * &top
                * c(n + p + 1, n - 1)
                * (e.o(n + p + 1) - e.o(p + 2));
            first - second
        },
    });

    reg.add(IdentityDef {
        id: "k_weighted_half_particular",
        tags: &[SECTION4],
        title: "Index-weighted central-binomial sum of odd harmonic numbers",
        anchor: "sum_{k=1}^n k C(2k,k) O_k/4^k = n(n+1)/2^{2n+1} C(2(n+1),n+1) (O_{n+1} - 1) - n(n+1)/(3 4^n) C(2(n+1),n+1) (O_{n+1} - 4/3)",
        grid: Grid::new().range("n", 0, 30),
        lhs: |e| sum(1..=e.n(), |k| q(k) * quarter(k) * cb(k) * e.o(k)),
        rhs: |e| {
            let n = e.n();
            let base = q(n * (n + 1)) * quarter(n) * cb(n + 1);
            let o = e.o(n + 1);
            &base * frac(1, 2) * (&o - Rational::one()) - base * frac(1, 3) * (o - frac(4, 3))
        },
    });

    reg.add(IdentityDef {
        id: "thm_yycg1tg",
        tags: &[SECTION4],
        title: "Inverse central-binomial sums of odd harmonic differences",
        anchor: "sum_{k=1}^n C(2k,k)^{-1} C(2(k+p),k+p) C(k+p,k) (O_{k+p} - O_k) = (1/4) C(2n,n)^{-1} C(2(n+p+1),n+p+1) C(n+p+1,n) (O_{n+p+1} - O_n) - (1/4) C(2(p+1),p+1) O_{p+1}",
        grid: Grid::new().range("n", 0, 20).range("p", 0, 8),
        lhs: |e| {
            let p = e.p();
            sum(1..=e.n(), |k| w(k, p) / cb(k) * (e.o(k + p) - e.o(k)))
        },
        rhs: |e| {
            let (n, p) = (e.n(), e.p());
            let quarter1 = frac(1, 4);
            &quarter1 * w(n, p + 1) / cb(n) * (e.o(n + p + 1) - e.o(n))
                - quarter1 * cb(p + 1) * e.o(p + 1)
        },
    });
}
