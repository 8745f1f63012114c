//! Acceptance run: one PASS/FAIL line per criterion, exact equality throughout.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use harmonic_like::exact_math::{binomial, factorial};
use harmonic_like::identities::{
    telescope_harmonic_check, telescope_kollar_check, telescope_linear_check,
    telescope_reciprocal_check, Binding, GridOverrides, IdentityRegistry, Param,
};
use harmonic_like::power_series::{gf_harmonic_like, gf_odd_central, gf_stirling_column};
use harmonic_like::sequences::{fibonacci, harmonic_like_bruteforce, SeqCache};
use harmonic_like::transforms::{
    binomial_sum_closed, binomial_sum_direct, binomial_sum_m1, binomial_sum_m2, binomial_sum_m3,
    fixture_pairs, BinomialSumParams,
};
use harmonic_like::Rational;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};
use serde_json::Value;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, budget: Duration) -> Result<(), String> {
    let spent = start.elapsed();
    ensure(spent <= budget, || {
        format!("took {spent:?}, budget {budget:?}")
    })
}

fn hlike(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_hlike"))
        .args(args)
        .env_remove("HLIKE_OUTPUT_DIR")
        .output()
        .expect("hlike runs")
}

fn oracle_equivalence() -> Check {
    let start = Instant::now();
    let cache = SeqCache::new();
    let mut cases = 0;
    for m in 1..=16u64 {
        for n in 0..=16 - m {
            let brute = harmonic_like_bruteforce(n, m).map_err(|e| e.to_string())?;
            let rec = cache.harmonic_like(n, m);
            ensure(brute == rec, || {
                format!("H_{n}({m}): oracle {brute}, recurrence {rec}")
            })?;
            cases += 1;
        }
    }
    within(start, Duration::from_secs(10))?;
    Ok(format!("{cases} pairs with n + m <= 16"))
}

fn gf_cross_check() -> Check {
    let cache = SeqCache::new();
    let start = Instant::now();
    for m in 0..=5 {
        let gf = gf_harmonic_like(m, 60);
        for n in 0..=60u64 {
            let rec = cache.harmonic_like(n, m);
            ensure(gf.coeff(n as usize) == &rec, || {
                format!("H_{n}({m}): gf {}, rec {rec}", gf.coeff(n as usize))
            })?;
        }
    }
    within(start, Duration::from_secs(5))?;
    let start = Instant::now();
    for k in 0..=6 {
        let gf = gf_stirling_column(k, 40);
        for n in 0..=40u64 {
            let scaled = gf.coeff(n as usize) * Rational::from(factorial(n));
            let s = Rational::from(cache.stirling1(n, k));
            ensure(scaled == s, || {
                format!("s({n},{k}): gf {scaled}, triangle {s}")
            })?;
        }
    }
    within(start, Duration::from_secs(5))?;
    let start = Instant::now();
    let gf = gf_odd_central(40);
    for n in 0..=40u64 {
        let direct = Rational::from(binomial(2 * n, n)) * cache.odd_harmonic(n);
        ensure(gf.coeff(n as usize) == &direct, || {
            format!("C(2n,n) O_n at n = {n}")
        })?;
    }
    within(start, Duration::from_secs(5))?;
    Ok("H_n(m) m<=5 n<=60, s(n,k) k<=6 n<=40, C(2n,n) O_n n<=40".into())
}

fn fixture_grid() -> impl Iterator<Item = BinomialSumParams> {
    fixture_pairs().into_iter().flat_map(|(a, b)| {
        (0..=4u64).flat_map(move |m| {
            let (a, b) = (a.clone(), b.clone());
            (0..=25u64).map(move |n| BinomialSumParams::new(a.clone(), b.clone(), m, n))
        })
    })
}

fn theorem_one() -> Check {
    let start = Instant::now();
    let cache = SeqCache::new();
    let mut cases = 0;
    for p in fixture_grid() {
        let closed = binomial_sum_closed(&p, &cache);
        let direct = binomial_sum_direct(&p, &cache);
        ensure(closed == direct, || {
            format!("{p:?}: closed {closed}, direct {direct}")
        })?;
        cases += 1;
    }
    within(start, Duration::from_secs(30))?;
    Ok(format!("{cases} cases, 8 (a,b) pairs x m<=4 x n<=25"))
}

fn specializations() -> Check {
    let cache = SeqCache::new();
    let mut cases = 0;
    for p in fixture_grid().filter(|p| (1..=3).contains(&p.m)) {
        let closed = binomial_sum_closed(&p, &cache);
        let special = match p.m {
            1 => binomial_sum_m1(&p.a, &p.b, p.n, &cache),
            2 => binomial_sum_m2(&p.a, &p.b, p.n, &cache),
            _ => binomial_sum_m3(&p.a, &p.b, p.n, &cache),
        };
        ensure(closed == special, || {
            format!("{p:?}: closed {closed}, specialization {special}")
        })?;
        cases += 1;
    }
    let s = binomial_sum_direct(
        &BinomialSumParams::new(Rational::from(-1), Rational::one(), 2, 3),
        &cache,
    );
    ensure(s == Rational::one(), || format!("S_3(-1,1,2) = {s}"))?;

    let reg = IdentityRegistry::standard();
    let spot = |id: &str, binding: Binding, want: Rational| -> Result<(), String> {
        let identity = reg.get(id).ok_or_else(|| format!("{id} not registered"))?;
        let (l, r) = (
            identity.lhs(&binding, &cache),
            identity.rhs(&binding, &cache),
        );
        ensure(l == want && r == want, || {
            format!("{id} {binding}: lhs {l}, rhs {r}, want {want}")
        })
    };
    spot(
        "cor_id1",
        Binding::new()
            .with("n", Param::Int(3))
            .with("m", Param::Int(2)),
        Rational::one(),
    )?;
    spot(
        "classical_Hk",
        Binding::new().with("n", Param::Int(2)),
        Rational::frac(7, 2),
    )?;
    Ok(format!(
        "{cases} specialization cases; S_3(-1,1,2) = 1, cor_id1(3,2) = 1, classical_Hk(2) = 7/2"
    ))
}

fn full_registry() -> Check {
    let list = hlike(&["verify", "--list"]);
    let catalog: Value = serde_json::from_slice(&list.stdout).map_err(|e| e.to_string())?;
    let catalog = catalog.as_array().ok_or("catalog is not an array")?;
    let tagged = catalog
        .iter()
        .filter(|e| {
            e["tags"].as_array().is_some_and(|t| {
                t.iter().any(|t| {
                    ["section2", "section3", "section4"].contains(&t.as_str().unwrap_or(""))
                })
            })
        })
        .count();
    ensure(tagged >= 45, || {
        format!("only {tagged} identities tagged section2..section4")
    })?;

    let start = Instant::now();
    let out = hlike(&["verify"]);
    let spent = start.elapsed();
    ensure(out.status.code() == Some(0), || {
        format!(
            "verify exited {:?}: {}",
            out.status.code(),
            String::from_utf8_lossy(&out.stderr)
        )
    })?;
    let reports: Value = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
    let reports = reports.as_array().ok_or("report is not an array")?;
    ensure(reports.len() == catalog.len(), || {
        format!("{} reports for {} identities", reports.len(), catalog.len())
    })?;
    let failed: Vec<&str> = reports
        .iter()
        .filter(|r| r["passed"] != Value::Bool(true))
        .filter_map(|r| r["identity"].as_str())
        .collect();
    ensure(failed.is_empty(), || {
        format!("failed: {}", failed.join(", "))
    })?;
    let cases: u64 = reports.iter().filter_map(|r| r["cases"].as_u64()).sum();
    ensure(spent <= Duration::from_secs(60), || {
        format!("verify took {spent:?}")
    })?;
    Ok(format!(
        "{} identities ({tagged} in section2..4), {cases} grid points, exit 0 in {spent:.2?}",
        reports.len()
    ))
}

fn random_sequence() -> impl Strategy<Value = Vec<Rational>> {
    proptest::collection::vec((-10_000i64..10_000, 1i64..500), 32)
        .prop_map(|v| v.into_iter().map(|(p, q)| Rational::frac(p, q)).collect())
}

fn telescoping() -> Check {
    let mut runner = TestRunner::new(Config {
        cases: 50,
        failure_persistence: None,
        ..Config::default()
    });
    let strategy = (random_sequence(), 1u64..=30, -40i64..40, 1i64..9);
    let trials = std::cell::Cell::new(0);
    runner
        .run(&strategy, |(seq, n, rp, rq)| {
            let a = |k: i64| seq[k as usize].clone();
            let (l, r) = telescope_harmonic_check(&a, n);
            prop_assert_eq!(l, r);
            let (l, r) = telescope_reciprocal_check(&a, n);
            prop_assert_eq!(l, r);
            let (l, r) = telescope_kollar_check(&a, &Rational::frac(rp, rq), n);
            prop_assert_eq!(l, r);
            let (l, r) = telescope_linear_check(&a, n);
            prop_assert_eq!(l, r);
            trials.set(trials.get() + 1);
            Ok(())
        })
        .map_err(|e| e.to_string())?;
    ensure(trials.get() == 50, || {
        format!("{} random sequences", trials.get())
    })?;

    let cache = SeqCache::new();
    let h = |k: i64| cache.harmonic(k as u64);
    let (l, r) = telescope_harmonic_check(&|k| h(k - 1), 5);
    let h5 = h(5);
    ensure(
        l == r && &h5 * &h5 - &l == (&h5 * &h5 - cache.harmonic_order(5, 2)) * Rational::frac(1, 2),
        || format!("a_k = H_(k-1): {l} vs {r}"),
    )?;
    let (l, r) = telescope_harmonic_check(&Rational::from, 6);
    ensure(
        l == r && l == Rational::from(7) * h(6) - Rational::from(6),
        || format!("a_k = k: {l} vs {r}"),
    )?;
    let fib = |k: i64| Rational::from(fibonacci(k as u64));
    let (l, r) = telescope_harmonic_check(&|k| fib(k + 1), 5);
    let direct: Rational = (1..=5).map(|k| h(k) * fib(k)).sum();
    ensure(l == r && l == direct, || {
        format!("a_k = F_(k+1): {l} vs {r}")
    })?;
    let p = 1u64;
    let hyp = |n: u64, p: u64| cache.hyperharmonic(n, p).expect("p >= 1");
    let (l, r) = telescope_linear_check(&|k| hyp(k as u64, p + 1), 5);
    let want = Rational::from(5) * hyp(5, p + 1) - hyp(4, p + 2);
    let weighted: Rational = (1..=5u64).map(|k| Rational::from(k) * hyp(k, p)).sum();
    ensure(l == r && r == want && l == weighted, || {
        format!("a_k = H_(k,p+1): {l} vs {r}")
    })?;
    Ok("50 random sequences per combinator; fixtures H_(k-1), k, F_(k+1), H_(k,p+1)".into())
}

fn half_integer() -> Check {
    let cache = SeqCache::new();
    for r in 0..=15 {
        for p in 0..=15 {
            let a = cache.hyperharmonic_half(r, p);
            let b = cache.hyperharmonic_half_via_gen_binomial(r, p);
            ensure(a == b, || format!("H_({r},{p}+1/2): {a} vs {b}"))?;
        }
    }
    let reg = IdentityRegistry::standard();
    let ok = reg.get("oklok93").ok_or("oklok93 not registered")?;
    let b = Binding::new().with("n", Param::Int(1));
    let (l, r) = (ok.lhs(&b, &cache), ok.rhs(&b, &cache));
    ensure(
        l == Rational::frac(1, 2) && r == Rational::frac(1, 2),
        || format!("oklok93 at n = 1: {l}, {r}"),
    )?;
    let o = GridOverrides::none().with_max("n", 20).with_max("p", 20);
    let report = reg
        .verify("thm_suzj3to", &o, &cache)
        .map_err(|e| e.to_string())?;
    ensure(report.passed && report.cases == 441, || {
        format!("thm_suzj3to: {report:?}")
    })?;
    Ok("two routes agree for r, p <= 15; oklok93(1) = 1/2; thm_suzj3to 441 cases".into())
}

fn strip_timing(bytes: &[u8]) -> String {
    String::from_utf8_lossy(bytes)
        .lines()
        .filter(|l| !l.trim_start().starts_with("\"elapsed_ms\""))
        .collect::<Vec<_>>()
        .join("\n")
}

fn determinism() -> Check {
    let first = hlike(&["verify"]);
    let second = hlike(&["verify"]);
    ensure(first.status.success() && second.status.success(), || {
        "verify failed".into()
    })?;
    let (a, b) = (strip_timing(&first.stdout), strip_timing(&second.stdout));
    ensure(!a.is_empty() && a == b, || {
        "reports differ beyond elapsed_ms".into()
    })?;
    Ok(format!(
        "{} bytes identical after dropping elapsed_ms",
        a.len()
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("1 oracle equivalence", oracle_equivalence),
        ("2 generating-function cross-check", gf_cross_check),
        ("3 binomial-sum closed form", theorem_one),
        ("4 closed-form specializations", specializations),
        ("5 full identity registry", full_registry),
        ("6 telescoping combinators", telescoping),
        ("7 half-integer machinery", half_integer),
        ("8 determinism", determinism),
    ];
    let mut failures = 0;
    for (name, check) in criteria {
        let start = Instant::now();
        match check() {
            Ok(detail) => println!("PASS criterion {name}: {detail} [{:.2?}]", start.elapsed()),
            Err(why) => {
                failures += 1;
                println!("FAIL criterion {name}: {why}");
            }
        }
    }
    println!("acceptance: {} passed, {failures} failed", 8 - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
