//! Identities obtained from summation by parts: harmonic-weighted sums of
//! `H_n(m)`, reciprocal-weight sums and the alternating generalized-binomial
//! variant.

use super::{c, fact, frac, gbinom, q, sum, Env, Grid, IdentityDef, IdentityRegistry, SECTION3};
use crate::exact_math::{sign, Rational};

/// `sum_{j=lo}^{hi} C(top, j-1) s(j, m) / j!`
fn stirling_window(e: &Env, top: i64, lo: i64, hi: i64, m: i64) -> Rational {
    sum(lo..=hi, |j| c(top, j - 1) * e.s(j, m) / fact(j))
}

/// `H_k^2 - H_k^(2)`
fn sq_minus(e: &Env, k: i64) -> Rational {
    let h = e.h(k);
    &h * &h - e.h2(k)
}

fn kollar_r_values() -> Vec<Rational> {
    vec![q(3), frac(1, 2), frac(5, 2), frac(-2, 3)]
}

/// `(-1)^n C(r-1, n)`, the boundary weight of the alternating variant.
fn kollar_edge(e: &Env) -> Rational {
    let r = e.rat("r");
    sign(e.n()) * gbinom(&(r - Rational::one()), e.n())
}

pub(super) fn register(reg: &mut IdentityRegistry) {
    reg.add(IdentityDef {
        id: "warmup_hk_minus1_over_k",
        tags: &[SECTION3],
        title: "Sum of H_{k-1}/k",
        anchor: "sum_{k=1}^n H_{k-1}/k = (H_n^2 - H_n^(2))/2",
        grid: Grid::new().range("n", 0, 40),
        lhs: |e| sum(1..=e.n(), |k| e.h(k - 1) * frac(1, k)),
        rhs: |e| sq_minus(e, e.n()) * frac(1, 2),
    });

    reg.add(IdentityDef {
        id: "warmup_sum_hk",
        tags: &[SECTION3],
        title: "Sum of harmonic numbers",
        anchor: "sum_{k=1}^n H_k = (n+1) H_n - n",
        grid: Grid::new().range("n", 0, 40),
        lhs: |e| sum(1..=e.n(), |k| e.h(k)),
        rhs: |e| q(e.n() + 1) * e.h(e.n()) - q(e.n()),
    });

    reg.add(IdentityDef {
        id: "warmup_fib_hk",
        tags: &[SECTION3],
        title: "Fibonacci-weighted sum of harmonic numbers",
        anchor: "sum_{k=1}^n H_k F_k = H_n F_{n+2} - sum_{k=1}^n F_{k+1}/k",
        grid: Grid::new().range("n", 0, 40),
        lhs: |e| sum(1..=e.n(), |k| e.h(k) * e.fib(k)),
        rhs: |e| {
            let n = e.n();
            e.h(n) * e.fib(n + 2) - sum(1..=n, |k| e.fib(k + 1) * frac(1, k))
        },
    });

    reg.add(IdentityDef {
        id: "e04wpeg",
        tags: &[SECTION3],
        title: "Backward difference of H_k(m) through Stirling numbers",
        anchor: "H_k(m) - H_{k-1}(m) = m! sum_{j=m}^k C(k-1,j-1) s(j,m)/j!, k >= 1",
        grid: Grid::new().range("n", 1, 30).range("m", 0, 5),
        lhs: |e| e.hm(e.n(), e.m()) - e.hm(e.n() - 1, e.m()),
        rhs: |e| {
            let (k, m) = (e.n(), e.m());
            fact(m) * stirling_window(e, k - 1, m, k, m)
        },
    });

    reg.add(IdentityDef {
        id: "thm_o107dby",
        tags: &[SECTION3],
        title: "Harmonic-weighted sum of Stirling windows",
        anchor: "sum_{k=1}^n H_k sum_{j=m}^k C(k-1,j-1) s(j,m)/j! = (1/m!) H_n(m) H_n - (1/m!) sum_{k=1}^n H_{k-1}(m)/k",
        grid: Grid::new().range("n", 0, 25).range("m", 0, 4),
        lhs: |e| {
            let m = e.m();
            sum(1..=e.n(), |k| e.h(k) * stirling_window(e, k - 1, m, k, m))
        },
        rhs: |e| {
            let (n, m) = (e.n(), e.m());
            (e.hm(n, m) * e.h(n) - sum(1..=n, |k| e.hm(k - 1, m) * frac(1, k))) / fact(m)
        },
    });

    reg.add(IdentityDef {
        id: "o107dby_m1",
        tags: &[SECTION3],
        title: "Sum of H_k/k",
        anchor: "sum_{k=1}^n H_k/k = (H_n^2 + H_n^(2))/2",
        grid: Grid::new().range("n", 0, 40),
        lhs: |e| sum(1..=e.n(), |k| e.h(k) * frac(1, k)),
        rhs: |e| {
            let h = e.h(e.n());
            (&h * &h + e.h2(e.n())) * frac(1, 2)
        },
    });

    reg.add(IdentityDef {
        id: "o107dby_m2",
        tags: &[SECTION3],
        title: "Harmonic-weighted alternating binomial sums of H_{j-1}/j",
        anchor: "2 sum_{k=1}^n H_k sum_{j=1}^k (-1)^j C(k-1,j-1) H_{j-1}/j = H_n^3 - H_n^(2) H_n - sum_{k=1}^n (H_{k-1}^2 - H_{k-1}^(2))/k",
        grid: Grid::new().range("n", 0, 30),
        lhs: |e| {
            let inner = |k: i64| sum(1..=k, |j| sign(j) * c(k - 1, j - 1) * e.h(j - 1) * frac(1, j));
            q(2) * sum(1..=e.n(), |k| e.h(k) * inner(k))
        },
        rhs: |e| {
            let n = e.n();
            let h = e.h(n);
            &h * &h * &h - e.h2(n) * &h - sum(1..=n, |k| sq_minus(e, k - 1) * frac(1, k))
        },
    });

    reg.add(IdentityDef {
        id: "thm_Hnp1",
        tags: &[SECTION3],
        title: "Harmonic-weighted Stirling windows summing to H_{n+1}(m+1)",
        anchor: "sum_{k=1}^n H_k sum_{j=m}^{n-k+1} C(n-k,j-1) s(j,m)/j! = (1/m!) H_{n+1}(m+1), n, m >= 1",
        grid: Grid::new().range("n", 1, 25).range("m", 1, 4),
        lhs: |e| {
            let (n, m) = (e.n(), e.m());
            sum(1..=n, |k| e.h(k) * stirling_window(e, n - k, m, n - k + 1, m))
        },
        rhs: |e| e.hm(e.n() + 1, e.m() + 1) / fact(e.m()),
    });

    reg.add(IdentityDef {
        id: "Hnp1_sq",
        tags: &[SECTION3],
        title: "Convolution of H_k with reciprocals",
        anchor: "sum_{k=1}^n H_k/(n-k+1) = H_{n+1}^2 - H_{n+1}^(2)",
        grid: Grid::new().range("n", 0, 40),
        lhs: |e| {
            let n = e.n();
            sum(1..=n, |k| e.h(k) * frac(1, n - k + 1))
        },
        rhs: |e| sq_minus(e, e.n() + 1),
    });

    reg.add(IdentityDef {
        id: "Hnp1_double",
        tags: &[SECTION3],
        title: "Harmonic-weighted alternating sums against a nested double sum",
        anchor: "sum_{k=1}^n H_k sum_{j=2}^{n-k+1} (-1)^j C(n-k,j-1) H_{j-1}/j = (1/2) sum_{k=1}^{n+1} (1/k) sum_{j=1}^{n+1-k} H_{n-k-j+1}/j",
        grid: Grid::new().range("n", 0, 25),
        lhs: |e| {
            let n = e.n();
            sum(1..=n, |k| {
                let inner =
                    sum(2..=n - k + 1, |j| sign(j) * c(n - k, j - 1) * e.h(j - 1) * frac(1, j));
                e.h(k) * inner
            })
        },
        rhs: |e| {
            let n = e.n();
            let nested = sum(1..=n + 1, |k| {
                frac(1, k) * sum(1..=n + 1 - k, |j| e.h(n - k - j + 1) * frac(1, j))
            });
            nested * frac(1, 2)
        },
    });

    reg.add(IdentityDef {
        id: "har_helper",
        tags: &[SECTION3],
        title: "Sum of 1/(k(k+p))",
        anchor: "sum_{k=1}^n 1/(k(k+p)) = H_n^(2) if p = 0, (H_n + H_p - H_{n+p})/p otherwise",
        grid: Grid::new().range("n", 0, 30).range("p", 0, 6),
        lhs: |e| {
            let p = e.p();
            sum(1..=e.n(), |k| frac(1, k * (k + p)))
        },
        rhs: |e| {
            let (n, p) = (e.n(), e.p());
            if p == 0 {
                e.h2(n)
            } else {
                (e.h(n) + e.h(p) - e.h(n + p)) * frac(1, p)
            }
        },
    });

    reg.add(IdentityDef {
        id: "har_example_p0",
        tags: &[SECTION3],
        title: "Sum of H_k/(k(k+1))",
        anchor: "sum_{k=1}^n H_k/(k(k+1)) = H_n^(2) - H_n/(n+1)",
        grid: Grid::new().range("n", 0, 40),
        lhs: |e| sum(1..=e.n(), |k| e.h(k) * frac(1, k * (k + 1))),
        rhs: |e| e.h2(e.n()) - e.h(e.n()) * frac(1, e.n() + 1),
    });

    reg.add(IdentityDef {
        id: "har_example",
        tags: &[SECTION3],
        title: "Sum of H_{k+p}/(k(k+1))",
        anchor:
            "sum_{k=1}^n H_{k+p}/(k(k+1)) = (H_n + H_p - H_{n+p})/p + H_p - H_{n+p}/(n+1), p >= 1",
        grid: Grid::new().range("n", 0, 30).range("p", 1, 6),
        lhs: |e| {
            let p = e.p();
            sum(1..=e.n(), |k| e.h(k + p) * frac(1, k * (k + 1)))
        },
        rhs: |e| {
            let (n, p) = (e.n(), e.p());
            (e.h(n) + e.h(p) - e.h(n + p)) * frac(1, p) + e.h(p) - e.h(n + p) * frac(1, n + 1)
        },
    });

    reg.add(IdentityDef {
        id: "thm_kk1",
        tags: &[SECTION3],
        title: "Sum of H_{n-k}(m)/(k(k+1))",
        anchor: "sum_{k=1}^n H_{n-k}(m)/(k(k+1)) = H_n(m) + H_n(m+1) - H_{n+1}(m+1), n >= 1",
        grid: Grid::new().range("n", 1, 25).range("m", 0, 4),
        lhs: |e| {
            let (n, m) = (e.n(), e.m());
            sum(1..=n, |k| e.hm(n - k, m) * frac(1, k * (k + 1)))
        },
        rhs: |e| {
            let (n, m) = (e.n(), e.m());
            e.hm(n, m) + e.hm(n, m + 1) - e.hm(n + 1, m + 1)
        },
    });

    reg.add(IdentityDef {
        id: "kk1_h1",
        tags: &[SECTION3],
        title: "Sum of H_{n-k}/(k(k+1))",
        anchor: "sum_{k=1}^n H_{n-k}/(k(k+1)) = H_n + H_n^2 - H_n^(2) - H_{n+1}^2 + H_{n+1}^(2), n >= 1",
        grid: Grid::new().range("n", 1, 40),
        lhs: |e| {
            let n = e.n();
            sum(1..=n, |k| e.h(n - k) * frac(1, k * (k + 1)))
        },
        rhs: |e| {
            let n = e.n();
            e.h(n) + sq_minus(e, n) - sq_minus(e, n + 1)
        },
    });

    reg.add(IdentityDef {
        id: "kk1_h2",
        tags: &[SECTION3],
        title: "Sum of (H_{n-k}^2 - H_{n-k}^(2))/(k(k+1))",
        anchor: "sum_{k=1}^n (H_{n-k}^2 - H_{n-k}^(2))/(k(k+1)) = H_n^2 - H_n^(2) + H_n(3) - H_{n+1}(3), n >= 1",
        grid: Grid::new().range("n", 1, 30),
        lhs: |e| {
            let n = e.n();
            sum(1..=n, |k| sq_minus(e, n - k) * frac(1, k * (k + 1)))
        },
        rhs: |e| {
            let n = e.n();
            sq_minus(e, n) + e.hm(n, 3) - e.hm(n + 1, 3)
        },
    });

    reg.add(IdentityDef {
        id: "thm_kollar",
        tags: &[SECTION3],
        title: "Alternating generalized-binomial sums of Stirling windows",
        anchor: "sum_{k=0}^n (-1)^k C(r-1,k) sum_{j=m}^{k+1} C(k,j-1) s(j,m)/j! = (-1)^n C(r-1,n) H_{n+1}(m)/m! - (1/m!) sum_{k=0}^n (-1)^k C(r,k) H_k(m)",
        grid: Grid::new()
            .range("n", 0, 20)
            .range("m", 1, 4)
            .rationals("r", kollar_r_values()),
        lhs: |e| {
            let (n, m) = (e.n(), e.m());
            let r1 = e.rat("r") - Rational::one();
            sum(0..=n, |k| sign(k) * gbinom(&r1, k) * stirling_window(e, k, m, k + 1, m))
        },
        rhs: |e| {
            let (n, m) = (e.n(), e.m());
            let r = e.rat("r");
            let tail = sum(0..=n, |k| sign(k) * gbinom(&r, k) * e.hm(k, m));
            (kollar_edge(e) * e.hm(n + 1, m) - tail) / fact(m)
        },
    });

    reg.add(IdentityDef {
        id: "kollar_reciprocal",
        tags: &[SECTION3],
        title: "Alternating generalized-binomial sum of 1/(k+1)",
        anchor: "sum_{k=0}^n (-1)^k C(r-1,k)/(k+1) = (-1)^n C(r-1,n) H_{n+1} - sum_{k=0}^n (-1)^k C(r,k) H_k",
        grid: Grid::new().range("n", 0, 25).rationals("r", kollar_r_values()),
        lhs: |e| {
            let r1 = e.rat("r") - Rational::one();
            sum(0..=e.n(), |k| sign(k) * gbinom(&r1, k) * frac(1, k + 1))
        },
        rhs: |e| {
            let n = e.n();
            let r = e.rat("r");
            kollar_edge(e) * e.h(n + 1) - sum(0..=n, |k| sign(k) * gbinom(&r, k) * e.h(k))
        },
    });

    // The printed version carries H_n^(2) in the boundary term; H_{n+1}^(2) is
    // what the m = 2 case of thm_kollar gives, and the printed one fails at n = 0.
    reg.add(IdentityDef {
        id: "kollar_sq",
        tags: &[SECTION3],
        title: "Alternating generalized-binomial sum of harmonic-weighted windows",
        anchor: "sum_{k=0}^n (-1)^k C(r-1,k) sum_{j=2}^{k+1} (-1)^j C(k,j-1) H_{j-1}/j = (-1)^n C(r-1,n) (H_{n+1}^2 - H_{n+1}^(2))/2 - (1/2) sum_{k=0}^n (-1)^k C(r,k) (H_k^2 - H_k^(2))",
        grid: Grid::new().range("n", 0, 25).rationals("r", kollar_r_values()),
        lhs: |e| {
            let r1 = e.rat("r") - Rational::one();
            sum(0..=e.n(), |k| {
                let inner = sum(2..=k + 1, |j| sign(j) * c(k, j - 1) * e.h(j - 1) * frac(1, j));
                sign(k) * gbinom(&r1, k) * inner
            })
        },
        rhs: |e| {
            let n = e.n();
            let r = e.rat("r");
            let tail = sum(0..=n, |k| sign(k) * gbinom(&r, k) * sq_minus(e, k));
            (kollar_edge(e) * sq_minus(e, n + 1) - tail) * frac(1, 2)
        },
    });
}
