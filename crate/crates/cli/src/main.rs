//! `hlike`: sequence tables, identity verification, generating-function
//! cross-checks and binomial transforms, all in exact rational arithmetic.

mod gfcheck;
mod table;

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use harmonic_like::identities::{GridOverrides, IdentityError, IdentityRegistry};
use harmonic_like::sequences::{SeqCache, SeqSpec};
use harmonic_like::transforms::{
    binomial_sum_closed, binomial_sum_direct, binomial_transform, inverse_binomial_transform,
    BinomialSumParams,
};
use harmonic_like::Rational;

use table::{value_table, Cell, Format, Table};

const AFTER_HELP: &str = "\
Exit status: 0 on success, 1 when a verification or cross-check fails,
2 on usage or domain errors.

Sequence families: harmonic, harmonic_order (--r), odd_harmonic,
harmonic_like (--m), stirling1 (--k), hyperharmonic (--p),
hyperharmonic_half (--p, indexed by r), fibonacci, lucas,
half_harmonic_offset.

Rationals are always printed exactly as p/q; --decimal adds an
approximate column next to the exact one.";

#[derive(Parser, Debug)]
#[command(name = "hlike", version, about = "Exact harmonic-like number toolkit", after_help = AFTER_HELP)]
struct Cli {
    /// Directory that relative --output paths are resolved against.
    #[arg(long, global = true, env = "HLIKE_OUTPUT_DIR", value_name = "DIR")]
    output_dir: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print terms 0..=N of a sequence family as `n,value` rows.
    Seq(SeqArgs),
    /// Verify registered identities exactly over their parameter grids (JSON report).
    Verify(VerifyArgs),
    /// Compare generating-function coefficients with the recurrence values.
    GfCheck(GfCheckArgs),
    /// Binomial sums S_n(a,b,m), or the binomial transform of a sequence family.
    Transform(TransformArgs),
}

#[derive(Args, Debug, Clone)]
struct FamilyParams {
    /// Order m of H_n(m).
    #[arg(long, allow_hyphen_values = true)]
    m: Option<i64>,
    /// Column k of the Stirling triangle.
    #[arg(long, allow_hyphen_values = true)]
    k: Option<i64>,
    /// Order r of H_n^(r).
    #[arg(long, allow_hyphen_values = true)]
    r: Option<i64>,
    /// Hyperharmonic order p.
    #[arg(long, allow_hyphen_values = true)]
    p: Option<i64>,
}

impl FamilyParams {
    fn to_map(&self) -> BTreeMap<String, i64> {
        [("m", self.m), ("k", self.k), ("r", self.r), ("p", self.p)]
            .into_iter()
            .filter_map(|(name, v)| v.map(|v| (name.to_string(), v)))
            .collect()
    }
}

#[derive(Args, Debug, Clone)]
struct OutputArgs {
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
    /// Write to this file instead of standard output.
    #[arg(long, value_name = "PATH")]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct SeqArgs {
    #[arg(long)]
    family: String,
    /// Last index N; rows run over 0..=N.
    #[arg(long)]
    n: u64,
    #[command(flatten)]
    params: FamilyParams,
    /// Add a decimal column rounded to this many places.
    #[arg(long, value_name = "DIGITS")]
    decimal: Option<usize>,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Verify a single identity.
    #[arg(long, conflicts_with = "tag")]
    id: Option<String>,
    /// Verify every identity carrying this tag (section1..section4).
    #[arg(long)]
    tag: Option<String>,
    /// Upper bound for the n axis.
    #[arg(long)]
    n_max: Option<u32>,
    /// Upper bound for the m axis.
    #[arg(long)]
    m_max: Option<u32>,
    /// Upper bound for the p axis.
    #[arg(long)]
    p_max: Option<u32>,
    /// Upper bound for the r axis.
    #[arg(long)]
    r_max: Option<u32>,
    /// Print the catalog (id, title, anchor, tags, default grid size) instead.
    #[arg(long)]
    list: bool,
    /// Write the JSON report to this file instead of standard output.
    #[arg(long, value_name = "PATH")]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct GfCheckArgs {
    /// One of harmonic_like (--m), stirling1 (--k), hyperharmonic (--p >= 1), odd_central.
    #[arg(long)]
    family: String,
    /// Truncation order; coefficients 0..=ORDER are compared.
    #[arg(long, default_value_t = 25)]
    order: usize,
    #[command(flatten)]
    params: FamilyParams,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args, Debug)]
struct TransformArgs {
    /// Weight a in S_n(a,b,m) = sum_k C(n,k) a^k b^(n-k) H_k(m); accepts p/q.
    #[arg(long, allow_hyphen_values = true, requires_all = ["b", "m"], conflicts_with = "family")]
    a: Option<Rational>,
    /// Weight b in S_n(a,b,m).
    #[arg(long, allow_hyphen_values = true, requires = "a")]
    b: Option<Rational>,
    /// Sequence family to transform instead of a binomial sum; its parameters
    /// are given with --k, --r, --p (and --m).
    #[arg(long, required_unless_present = "a")]
    family: Option<String>,
    /// Last index N; rows run over 0..=N.
    #[arg(long)]
    n: u64,
    #[command(flatten)]
    params: FamilyParams,
    /// Use the alternating weights (-1)^k.
    #[arg(long, requires = "family")]
    signed: bool,
    /// Apply the inverse transform.
    #[arg(long, requires = "family")]
    inverse: bool,
    #[arg(long, value_name = "DIGITS")]
    decimal: Option<usize>,
    #[command(flatten)]
    out: OutputArgs,
}

enum Failure {
    Usage(String),
    Check(String),
}

type Outcome = Result<(), Failure>;

fn usage(e: impl std::fmt::Display) -> Failure {
    Failure::Usage(e.to_string())
}

fn resolve(path: &Path, dir: Option<&Path>) -> PathBuf {
    match dir {
        Some(dir) if path.is_relative() => dir.join(path),
        _ => path.to_path_buf(),
    }
}

fn emit(text: &str, output: Option<&Path>, dir: Option<&Path>) -> Outcome {
    match output {
        None => {
            print!("{text}");
            Ok(())
        }
        Some(path) => {
            let path = resolve(path, dir);
            if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
                fs::create_dir_all(parent)
                    .map_err(|e| usage(format!("{}: {e}", parent.display())))?;
            }
            fs::write(&path, text).map_err(|e| usage(format!("{}: {e}", path.display())))
        }
    }
}

fn sequence_terms(
    family: &str,
    params: &FamilyParams,
    n: u64,
    cache: &SeqCache,
) -> Result<Vec<Rational>, Failure> {
    let spec = SeqSpec::parse(family, params.to_map()).map_err(usage)?;
    let seq = spec.build();
    (0..=n).map(|i| seq.term(i, cache).map_err(usage)).collect()
}

fn cmd_seq(args: &SeqArgs, dir: Option<&Path>) -> Outcome {
    let cache = SeqCache::new();
    let values = sequence_terms(&args.family, &args.params, args.n, &cache)?;
    let text = value_table(&values, args.decimal).render(args.out.format);
    emit(&text, args.out.output.as_deref(), dir)
}

fn cmd_verify(args: &VerifyArgs, dir: Option<&Path>) -> Outcome {
    let reg = IdentityRegistry::standard();
    if args.list {
        let text =
            serde_json::to_string_pretty(&reg.catalog()).expect("serializable catalog") + "\n";
        return emit(&text, args.output.as_deref(), dir);
    }
    let mut overrides = GridOverrides::none();
    for (axis, max) in [
        ("n", args.n_max),
        ("m", args.m_max),
        ("p", args.p_max),
        ("r", args.r_max),
    ] {
        if let Some(max) = max {
            overrides = overrides.with_max(axis, i64::from(max));
        }
    }
    let cache = SeqCache::new();
    let reports = match &args.id {
        Some(id) => vec![reg.verify(id, &overrides, &cache).map_err(|e| match e {
            IdentityError::UnknownId(_) => usage(format!("{e}; see `hlike verify --list`")),
            other => usage(other),
        })?],
        None => {
            let reports = reg.verify_all(args.tag.as_deref(), &overrides, &cache);
            if reports.is_empty() {
                return Err(usage(format!(
                    "no identities carry tag {:?}",
                    args.tag.as_deref().unwrap_or("")
                )));
            }
            reports
        }
    };
    let text = serde_json::to_string_pretty(&reports).expect("serializable reports") + "\n";
    emit(&text, args.output.as_deref(), dir)?;
    let failed: Vec<&str> = reports
        .iter()
        .filter(|r| !r.passed)
        .map(|r| r.identity.as_str())
        .collect();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Failure::Check(format!(
            "identities failed: {}",
            failed.join(", ")
        )))
    }
}

fn cmd_gf_check(args: &GfCheckArgs, dir: Option<&Path>) -> Outcome {
    let check = gfcheck::lookup(&args.family).ok_or_else(|| {
        usage(format!(
            "gf-check does not support family {:?}; expected one of {}",
            args.family,
            gfcheck::names().join(", ")
        ))
    })?;
    let given = args.params.to_map();
    let param = match check.param() {
        Some((name, min)) => {
            let value = *given
                .get(name)
                .ok_or_else(|| usage(format!("{} needs --{name}", check.name())))?;
            if value < min {
                return Err(usage(format!("{} requires {name} >= {min}", check.name())));
            }
            if given.len() > 1 {
                return Err(usage(format!("{} takes only --{name}", check.name())));
            }
            value as u64
        }
        None if !given.is_empty() => {
            return Err(usage(format!("{} takes no parameters", check.name())))
        }
        None => 0,
    };
    let cache = SeqCache::new();
    let series = check.series(param, args.order);
    let mut table = Table::new(vec!["n", "recurrence_value", "gf_value", "equal"]);
    let mut mismatches = 0usize;
    for (n, gf) in series.into_iter().enumerate() {
        let rec = check.recurrence(n as u64, param, &cache);
        let equal = rec == gf;
        mismatches += usize::from(!equal);
        table.push(vec![
            Cell::Int(n as u64),
            Cell::Rat(rec),
            Cell::Rat(gf),
            Cell::Bool(equal),
        ]);
    }
    emit(
        &table.render(args.out.format),
        args.out.output.as_deref(),
        dir,
    )?;
    if mismatches == 0 {
        Ok(())
    } else {
        Err(Failure::Check(format!(
            "{mismatches} coefficient(s) differ"
        )))
    }
}

fn cmd_transform(args: &TransformArgs, dir: Option<&Path>) -> Outcome {
    let cache = SeqCache::new();
    let values = match (&args.a, &args.b, &args.family) {
        (Some(a), Some(b), None) => {
            let m = match args.params.m {
                Some(m) if m >= 0 => m as u64,
                Some(m) => return Err(usage(format!("binomial sums require m >= 0, got {m}"))),
                None => return Err(usage("binomial-sum mode needs --m")),
            };
            if args.params.k.is_some() || args.params.r.is_some() || args.params.p.is_some() {
                return Err(usage("binomial-sum mode takes only --a, --b, --m"));
            }
            let mut values = Vec::new();
            for n in 0..=args.n {
                let p = BinomialSumParams::new(a.clone(), b.clone(), m, n);
                let closed = binomial_sum_closed(&p, &cache);
                let direct = binomial_sum_direct(&p, &cache);
                if closed != direct {
                    return Err(Failure::Check(format!(
                        "closed form {closed} differs from direct sum {direct} at n = {n}"
                    )));
                }
                values.push(closed);
            }
            values
        }
        (None, None, Some(family)) => {
            let terms = sequence_terms(family, &args.params, args.n, &cache)?;
            let seq = |k: u64| terms[k as usize].clone();
            (0..=args.n)
                .map(|n| {
                    if args.inverse {
                        inverse_binomial_transform(&seq, n, args.signed)
                    } else {
                        binomial_transform(&seq, n, args.signed)
                    }
                })
                .collect()
        }
        _ => return Err(usage("give either --a/--b/--m or --family")),
    };
    let text = value_table(&values, args.decimal).render(args.out.format);
    emit(&text, args.out.output.as_deref(), dir)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let dir = cli.output_dir.as_deref();
    let outcome = match &cli.command {
        Command::Seq(a) => cmd_seq(a, dir),
        Command::Verify(a) => cmd_verify(a, dir),
        Command::GfCheck(a) => cmd_gf_check(a, dir),
        Command::Transform(a) => cmd_transform(a, dir),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(msg)) => {
            eprintln!("hlike: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("hlike: {msg}");
            ExitCode::from(2)
        }
    }
}
