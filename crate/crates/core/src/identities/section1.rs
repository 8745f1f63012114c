//! Basic facts about `H_n(m)`: the recurrence against the composition oracle and
//! the explicit forms for `m = 2, 3`.

use super::{frac, sum, Grid, IdentityDef, IdentityRegistry, SECTION1};
use crate::sequences::harmonic_like_bruteforce;

pub(super) fn register(reg: &mut IdentityRegistry) {
    reg.add(IdentityDef {
        id: "lemma_rhzasjc",
        tags: &[SECTION1],
        title: "Recurrence for H_n(m+1) against the composition sum",
        anchor: "H_n(m+1) = sum_{j=1}^n H_{n-j}(m)/j, with H_n(m) = sum over k_1+...+k_m <= n of 1/(k_1...k_m)",
        grid: Grid::new()
            .range("n", 0, 14)
            .range("m", 0, 14)
            .filter(|b| b.int("n") + b.int("m") < 16),
        lhs: |e| {
            harmonic_like_bruteforce(e.n() as u64, e.m() as u64 + 1).expect("small grid")
        },
        rhs: |e| {
            let (n, m) = (e.n(), e.m());
            sum(1..=n, |j| e.hm(n - j, m) * frac(1, j))
        },
    });

    reg.add(IdentityDef {
        id: "h2_closed_forms",
        tags: &[SECTION1],
        title: "H_n(2) as a weighted harmonic sum and as H_n^2 - H_n^(2)",
        anchor: "H_n(2) = sum_{j=1}^n (2/j) H_{j-1} = H_n^2 - H_n^(2)",
        grid: Grid::new().range("n", 0, 60),
        lhs: |e| sum(1..=e.n(), |j| frac(2, j) * e.h(j - 1)),
        rhs: |e| {
            let h = e.h(e.n());
            &h * &h - e.h2(e.n())
        },
    });

    reg.add(IdentityDef {
        id: "h3_nested",
        tags: &[SECTION1],
        title: "H_n(3) as a nested harmonic sum",
        anchor: "H_n(3) = sum_{j=1}^n (1/j) sum_{l=1}^{n-j} H_{n-j-l}/l",
        grid: Grid::new().range("n", 0, 40),
        lhs: |e| e.hm(e.n(), 3),
        rhs: |e| {
            let n = e.n();
            sum(1..=n, |j| {
                frac(1, j) * sum(1..=n - j, |l| e.h(n - j - l) * frac(1, l))
            })
        },
    });
}
