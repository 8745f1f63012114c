//! Binomial sums of harmonic-like numbers: the Stirling closed form for
//! `S_n(a, b, m)`, its corollaries and the worked special cases.

use super::{c, fact, frac, pow, q, sum, Env, Grid, IdentityDef, IdentityRegistry, SECTION2};
use crate::exact_math::{sign, Rational};
use crate::transforms::{
    binomial_sum_closed, binomial_sum_direct, binomial_sum_m1, binomial_sum_m2, binomial_sum_m3,
    fixture_pairs, BinomialSumParams,
};

fn direct(e: &Env, m: u64) -> Rational {
    let p = BinomialSumParams::new(e.rat("a"), e.rat("b"), m, e.n() as u64);
    binomial_sum_direct(&p, e.cache)
}

fn ab_grid(n_max: i64) -> Grid {
    Grid::new()
        .pairs(("a", "b"), fixture_pairs())
        .range("n", 0, n_max)
}

/// `sum_{k=1}^n w(n-k) (H_{k-1} - H_{n-k}) / k`, the correction sum shared by
/// the `m = 2` examples.
fn m2_correction(e: &Env, weight: impl Fn(i64, i64) -> Rational) -> Rational {
    let n = e.n();
    sum(1..=n, |k| {
        weight(n, k) * (e.h(k - 1) - e.h(n - k)) * frac(1, k)
    })
}

pub(super) fn register(reg: &mut IdentityRegistry) {
    reg.add(IdentityDef {
        id: "main_id1",
        tags: &[SECTION2],
        title: "Closed form of S_n(a,b,m) through Stirling numbers",
        anchor: "S_n(a,b,m) = sum_{j=0}^m C(m,j) sum_{k=0}^n H_k(j) (a+b)^k (m-j)!/(n-k)! (-1)^{n-k} b^{n-k} s(n-k,m-j)",
        grid: Grid::new()
            .pairs(("a", "b"), fixture_pairs())
            .range("m", 0, 4)
            .range("n", 0, 25),
        lhs: |e| direct(e, e.m() as u64),
        rhs: |e| {
            let p = BinomialSumParams::new(e.rat("a"), e.rat("b"), e.m() as u64, e.n() as u64);
            binomial_sum_closed(&p, e.cache)
        },
    });

    reg.add(IdentityDef {
        id: "remark_m0",
        tags: &[SECTION2],
        title: "S_n(a,b,0) is a binomial expansion",
        anchor: "S_n(a,b,0) = sum_k C(n,k) a^k b^{n-k} = (a+b)^n",
        grid: ab_grid(25),
        lhs: |e| direct(e, 0),
        rhs: |e| pow(&(e.rat("a") + e.rat("b")), e.n()),
    });

    reg.add(IdentityDef {
        id: "remark_m1",
        tags: &[SECTION2],
        title: "Binomial sum of harmonic numbers with two parameters",
        anchor: "S_n(a,b,1) = H_n (a+b)^n - sum_{k=0}^{n-1} (a+b)^k b^{n-k} / (n-k)",
        grid: ab_grid(25),
        lhs: |e| direct(e, 1),
        rhs: |e| binomial_sum_m1(&e.rat("a"), &e.rat("b"), e.n() as u64, e.cache),
    });

    reg.add(IdentityDef {
        id: "cor_id1",
        tags: &[SECTION2],
        title: "Alternating binomial sum of H_k(m)",
        anchor: "sum_{k=0}^n C(n,k) (-1)^k H_k(m) = (-1)^n m!/n! s(n,m)",
        grid: Grid::new().range("n", 0, 25).range("m", 0, 5),
        lhs: |e| {
            let (n, m) = (e.n(), e.m());
            sum(0..=n, |k| c(n, k) * sign(k) * e.hm(k, m))
        },
        rhs: |e| {
            let (n, m) = (e.n(), e.m());
            sign(n) * fact(m) / fact(n) * e.s(n, m)
        },
    });

    reg.add(IdentityDef {
        id: "cor_id2",
        tags: &[SECTION2],
        title: "Inverse binomial transform of the Stirling column",
        anchor: "sum_{k=m}^n C(n,k) s(k,m)/k! = H_n(m)/m!",
        grid: Grid::new().range("n", 0, 30).range("m", 0, 5),
        lhs: |e| {
            let (n, m) = (e.n(), e.m());
            sum(m..=n, |k| c(n, k) * e.s(k, m) / fact(k))
        },
        rhs: |e| e.hm(e.n(), e.m()) / fact(e.m()),
    });

    reg.add(IdentityDef {
        id: "cor_id3",
        tags: &[SECTION2],
        title: "Unweighted binomial sum of H_k(m) (a = b = 1)",
        anchor: "sum_{k=0}^n C(n,k) H_k(m) = sum_{j=0}^m C(m,j) sum_{k=0}^n H_k(j) (-1)^{n-k} 2^k (m-j)!/(n-k)! s(n-k,m-j)",
        grid: Grid::new().range("n", 0, 25).range("m", 0, 4),
        lhs: |e| {
            let (n, m) = (e.n(), e.m());
            sum(0..=n, |k| c(n, k) * e.hm(k, m))
        },
        rhs: |e| {
            let (n, m) = (e.n(), e.m());
            let two = q(2);
            sum(0..=m, |j| {
                c(m, j)
                    * sum(0..=n, |k| {
                        e.hm(k, j) * sign(n - k) * pow(&two, k) * fact(m - j) / fact(n - k)
                            * e.s(n - k, m - j)
                    })
            })
        },
    });

    reg.add(IdentityDef {
        id: "classical_Hk",
        tags: &[SECTION2],
        title: "Binomial sum of harmonic numbers",
        anchor: "sum_{k=0}^n C(n,k) H_k = 2^n (H_n - sum_{k=1}^n 1/(2^k k))",
        grid: Grid::new().range("n", 0, 40),
        lhs: |e| sum(0..=e.n(), |k| c(e.n(), k) * e.h(k)),
        rhs: |e| {
            let n = e.n();
            let two = q(2);
            pow(&two, n) * (e.h(n) - sum(1..=n, |k| Rational::one() / (pow(&two, k) * q(k))))
        },
    });

    reg.add(IdentityDef {
        id: "cor_id4",
        tags: &[SECTION2],
        title: "Two-parameter binomial sum of H_k(2)",
        anchor: "S_n(a,b,2) = H_n(2)(a+b)^n + 2 sum_{k=1}^n (a+b)^{n-k} b^k (H_{k-1} - H_{n-k})/k",
        grid: ab_grid(25),
        lhs: |e| direct(e, 2),
        rhs: |e| binomial_sum_m2(&e.rat("a"), &e.rat("b"), e.n() as u64, e.cache),
    });

    reg.add(IdentityDef {
        id: "ex_Hk2_2n",
        tags: &[SECTION2],
        title: "Binomial sum of H_k(2)",
        anchor:
            "sum_{k=0}^n C(n,k) H_k(2) = 2^n (H_n(2) + 2 sum_{k=1}^n (H_{k-1} - H_{n-k})/(2^k k))",
        grid: Grid::new().range("n", 0, 30),
        lhs: |e| sum(0..=e.n(), |k| c(e.n(), k) * e.hm(k, 2)),
        rhs: |e| {
            let two = q(2);
            let corr = m2_correction(e, |_, k| Rational::one() / pow(&two, k));
            pow(&two, e.n()) * (e.hm(e.n(), 2) + q(2) * corr)
        },
    });

    reg.add(IdentityDef {
        id: "ex_alt_Hk2",
        tags: &[SECTION2],
        title: "Alternating binomial sum of H_k(2)",
        anchor: "sum_{k=0}^n C(n,k) (-1)^k H_k(2) = (2/n) H_{n-1}, n >= 1",
        grid: Grid::new().range("n", 1, 30),
        lhs: |e| sum(0..=e.n(), |k| c(e.n(), k) * sign(k) * e.hm(k, 2)),
        rhs: |e| frac(2, e.n()) * e.h(e.n() - 1),
    });

    reg.add(IdentityDef {
        id: "ex_alt_Hk2sq",
        tags: &[SECTION2],
        title: "Alternating binomial sum of second-order harmonic numbers",
        anchor: "sum_{k=0}^n C(n,k) (-1)^k H_k^(2) = -H_n/n, n >= 1",
        grid: Grid::new().range("n", 1, 30),
        lhs: |e| sum(0..=e.n(), |k| c(e.n(), k) * sign(k) * e.h2(k)),
        rhs: |e| -e.h(e.n()) * frac(1, e.n()),
    });

    reg.add(IdentityDef {
        id: "ex_alt_Hksq",
        tags: &[SECTION2],
        title: "Alternating binomial sum of squared harmonic numbers",
        anchor: "sum_{k=0}^n C(n,k) (-1)^k H_k^2 = H_n/n - 2/n^2, n >= 1",
        grid: Grid::new().range("n", 1, 30),
        lhs: |e| {
            sum(0..=e.n(), |k| {
                let h = e.h(k);
                c(e.n(), k) * sign(k) * &h * &h
            })
        },
        rhs: |e| {
            let n = e.n();
            e.h(n) * frac(1, n) - frac(2, n * n)
        },
    });

    reg.add(IdentityDef {
        id: "ex_inv_HkOverK",
        tags: &[SECTION2],
        title: "Alternating binomial sum of H_k/k",
        anchor: "sum_{k=1}^n C(n,k) (-1)^{k+1} H_k/k = H_n^(2)",
        grid: Grid::new().range("n", 0, 30),
        lhs: |e| {
            sum(1..=e.n(), |k| {
                c(e.n(), k) * sign(k + 1) * e.h(k) * frac(1, k)
            })
        },
        rhs: |e| e.h2(e.n()),
    });

    reg.add(IdentityDef {
        id: "ex_2k_alt",
        tags: &[SECTION2],
        title: "Binomial sum of H_k(2) with weights 2^k (-1)^{n-k}",
        anchor: "sum_{k=0}^n C(n,k) 2^k (-1)^{n-k} H_k(2) = H_n(2) + 2 sum_{k=1}^n (-1)^k (H_{k-1} - H_{n-k})/k",
        grid: Grid::new().range("n", 0, 30),
        lhs: |e| {
            let n = e.n();
            let two = q(2);
            sum(0..=n, |k| c(n, k) * pow(&two, k) * sign(n - k) * e.hm(k, 2))
        },
        rhs: |e| e.hm(e.n(), 2) + q(2) * m2_correction(e, |_, k| sign(k)),
    });

    reg.add(IdentityDef {
        id: "ex_3n",
        tags: &[SECTION2],
        title: "Binomial sum of H_k(2) with weights 2^k",
        anchor: "sum_{k=0}^n C(n,k) 2^k H_k(2) = 3^n (H_n(2) + 2 sum_{k=1}^n (H_{k-1} - H_{n-k})/(3^k k))",
        grid: Grid::new().range("n", 0, 30),
        lhs: |e| {
            let two = q(2);
            sum(0..=e.n(), |k| c(e.n(), k) * pow(&two, k) * e.hm(k, 2))
        },
        rhs: |e| {
            let three = q(3);
            let corr = m2_correction(e, |_, k| Rational::one() / pow(&three, k));
            pow(&three, e.n()) * (e.hm(e.n(), 2) + q(2) * corr)
        },
    });

    reg.add(IdentityDef {
        id: "fib_Hk2",
        tags: &[SECTION2],
        title: "Fibonacci-weighted binomial sum of H_k(2)",
        anchor: "sum_{k=0}^n C(n,k) F_k H_k(2) = H_n(2) F_{2n} + 2 sum_{k=1}^n F_{2(n-k)} (H_{k-1} - H_{n-k})/k",
        grid: Grid::new().range("n", 0, 30),
        lhs: |e| sum(0..=e.n(), |k| c(e.n(), k) * e.fib(k) * e.hm(k, 2)),
        rhs: |e| {
            e.hm(e.n(), 2) * e.fib(2 * e.n()) + q(2) * m2_correction(e, |n, k| e.fib(2 * (n - k)))
        },
    });

    reg.add(IdentityDef {
        id: "lucas_Hk2",
        tags: &[SECTION2],
        title: "Lucas-weighted binomial sum of H_k(2)",
        anchor: "sum_{k=0}^n C(n,k) L_k H_k(2) = H_n(2) L_{2n} + 2 sum_{k=1}^n L_{2(n-k)} (H_{k-1} - H_{n-k})/k",
        grid: Grid::new().range("n", 0, 30),
        lhs: |e| sum(0..=e.n(), |k| c(e.n(), k) * e.luc(k) * e.hm(k, 2)),
        rhs: |e| {
            e.hm(e.n(), 2) * e.luc(2 * e.n()) + q(2) * m2_correction(e, |n, k| e.luc(2 * (n - k)))
        },
    });

    reg.add(IdentityDef {
        id: "fib_alt_Hk2",
        tags: &[SECTION2],
        title: "Alternating Fibonacci-weighted binomial sum of H_k(2)",
        anchor: "sum_{k=0}^n C(n,k) (-1)^{k+1} F_k H_k(2) = H_n(2) F_n + 2 sum_{k=1}^n F_{n-k} (H_{k-1} - H_{n-k})/k",
        grid: Grid::new().range("n", 0, 30),
        lhs: |e| sum(0..=e.n(), |k| c(e.n(), k) * sign(k + 1) * e.fib(k) * e.hm(k, 2)),
        rhs: |e| e.hm(e.n(), 2) * e.fib(e.n()) + q(2) * m2_correction(e, |n, k| e.fib(n - k)),
    });

    reg.add(IdentityDef {
        id: "lucas_alt_Hk2",
        tags: &[SECTION2],
        title: "Alternating Lucas-weighted binomial sum of H_k(2)",
        anchor: "sum_{k=0}^n C(n,k) (-1)^k L_k H_k(2) = H_n(2) L_n + 2 sum_{k=1}^n L_{n-k} (H_{k-1} - H_{n-k})/k",
        grid: Grid::new().range("n", 0, 30),
        lhs: |e| sum(0..=e.n(), |k| c(e.n(), k) * sign(k) * e.luc(k) * e.hm(k, 2)),
        rhs: |e| e.hm(e.n(), 2) * e.luc(e.n()) + q(2) * m2_correction(e, |n, k| e.luc(n - k)),
    });

    reg.add(IdentityDef {
        id: "cor_id5",
        tags: &[SECTION2],
        title: "Two-parameter binomial sum of H_k(3)",
        anchor: "S_n(a,b,3) = H_n(3)(a+b)^n - 3 sum_{k=1}^n (a+b)^{n-k} b^k (H_{k-1}^2 - H_{k-1}^(2) - 2 H_{k-1} H_{n-k} + H_{n-k}^2 - H_{n-k}^(2))/k",
        grid: ab_grid(25),
        lhs: |e| direct(e, 3),
        rhs: |e| binomial_sum_m3(&e.rat("a"), &e.rat("b"), e.n() as u64, e.cache),
    });

    reg.add(IdentityDef {
        id: "stirling_s3",
        tags: &[SECTION2],
        title: "Stirling numbers s(n,3) through harmonic numbers",
        anchor: "s(n,3) = (1/2) (-1)^{n-1} (n-1)! (H_{n-1}^2 - H_{n-1}^(2)), n >= 1",
        grid: Grid::new().range("n", 1, 40),
        lhs: |e| e.s(e.n(), 3),
        rhs: |e| {
            let n = e.n();
            let h = e.h(n - 1);
            frac(1, 2) * sign(n - 1) * fact(n - 1) * (&h * &h - e.h2(n - 1))
        },
    });
}
