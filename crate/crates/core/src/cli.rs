//! Command-line front end: ingest distributions, evaluate divergences
//! and the bound catalog, run extremal searches and local-behavior
//! probes, and emit JSON or markdown reports.
//!
//! Exit codes: 0 on success (and when every non-skipped bound holds),
//! 1 when a report contains a violated bound (every catalog entry is a
//! theorem, so a violation means a numerical defect worth failing CI
//! over), 2 on validation errors, 3 on absolute-continuity errors.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;
use serde_json::json;

use crate::bounds::{BoundReport, Kernel};
use crate::distributions::{divergence, DiscreteDist};
use crate::error::{Error, Result};
use crate::extremal::{
    constrained_ratio_search, local_behavior_probe, ratio_supremum_search, Direction, FeasibleSet,
    RatioObjective, SearchConfig,
};
use crate::generators::{builtin, star, sum, Generator};
use crate::kappa::kappa_limits_at_one;

#[derive(Debug, Parser)]
#[command(name = "fdiv", version, about = "f-divergence evaluation, bound certification, and extremal search")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate one divergence between two distribution files.
    Eval(EvalArgs),
    /// Evaluate the full inequality catalog on a pair of distributions.
    Report(ReportArgs),
    /// Search for extremal pairs of a divergence-ratio objective.
    Search(SearchArgs),
    /// Probe D_f/D_g along a mixture path shrinking onto Q.
    Local(LocalArgs),
    /// Evaluate the strengthened Jensen inequality for a kernel file.
    Jensen(JensenArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum UnitsArg {
    Nats,
    Bits,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Json,
    Markdown,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    /// Generator name or sum expression, e.g. `kl` or `marton_s+star(marton_s)`.
    #[arg(long = "f")]
    pub f: String,
    /// Path to the P distribution (JSON or CSV).
    #[arg(long = "p")]
    pub p: PathBuf,
    /// Path to the Q distribution (JSON or CSV).
    #[arg(long = "q")]
    pub q: PathBuf,
    #[arg(long, value_enum, default_value = "nats")]
    pub units: UnitsArg,
    #[arg(long, value_enum, default_value = "markdown")]
    pub format: FormatArg,
    /// Accept inputs summing to 1 within 1e-6 and renormalize.
    #[arg(long)]
    pub renormalize: bool,
    /// Override the simplex validation tolerance.
    #[arg(long)]
    pub input_tol: Option<f64>,
}

#[derive(Debug, Args)]
pub struct ReportArgs {
    #[arg(long = "p")]
    pub p: PathBuf,
    #[arg(long = "q")]
    pub q: PathBuf,
    #[arg(long, value_enum, default_value = "nats")]
    pub units: UnitsArg,
    #[arg(long, value_enum, default_value = "markdown")]
    pub format: FormatArg,
    #[arg(long)]
    pub renormalize: bool,
    #[arg(long)]
    pub input_tol: Option<f64>,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    /// Numerator generator expression.
    #[arg(long = "f")]
    pub f: String,
    /// Denominator generator expression.
    #[arg(long = "g")]
    pub g: String,
    #[arg(long = "alphabet-size", default_value_t = 2)]
    pub alphabet_size: usize,
    #[arg(long, default_value_t = 64)]
    pub restarts: u32,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Pin the witness's beta1 (requires --beta2).
    #[arg(long)]
    pub beta1: Option<f64>,
    /// Pin the witness's beta2 (requires --beta1).
    #[arg(long)]
    pub beta2: Option<f64>,
    /// Search for the infimum instead of the supremum.
    #[arg(long)]
    pub minimize: bool,
    /// Restrict to mutually dominating pairs (no boundary witnesses).
    #[arg(long)]
    pub mutual: bool,
    #[arg(long, value_enum, default_value = "json")]
    pub format: FormatArg,
}

#[derive(Debug, Args)]
pub struct LocalArgs {
    #[arg(long = "f")]
    pub f: String,
    #[arg(long = "g")]
    pub g: String,
    /// Path to the base distribution Q.
    #[arg(long = "q")]
    pub q: PathBuf,
    /// Path to the mixture endpoint Q' (must satisfy Q' << Q).
    #[arg(long = "qp")]
    pub qp: PathBuf,
    /// Probe at eps = 2^-1 .. 2^-LEVELS.
    #[arg(long, default_value_t = 20)]
    pub levels: u32,
    #[arg(long, value_enum, default_value = "markdown")]
    pub format: FormatArg,
    #[arg(long)]
    pub renormalize: bool,
}

#[derive(Debug, Args)]
pub struct JensenArgs {
    /// Convex function on the reals: square, abs, or exp.
    #[arg(long = "fc", value_enum, default_value = "square")]
    pub fc: ConvexFn,
    #[arg(long = "pu")]
    pub pu: PathBuf,
    #[arg(long = "pz")]
    pub pz: PathBuf,
    /// Kernel file: {"kernel": {"<label>": [{"z": .., "p": ..}, ...]}}.
    #[arg(long = "channel")]
    pub channel: PathBuf,
    #[arg(long, value_enum, default_value = "markdown")]
    pub format: FormatArg,
    #[arg(long)]
    pub renormalize: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ConvexFn {
    Square,
    Abs,
    Exp,
}

impl ConvexFn {
    fn as_fn(self) -> fn(f64) -> f64 {
        match self {
            ConvexFn::Square => |x| x * x,
            ConvexFn::Abs => f64::abs,
            ConvexFn::Exp => f64::exp,
        }
    }
}

/// Runs a parsed command line and returns (output text, exit code).
pub fn execute(cli: Cli) -> (String, i32) {
    match run(cli) {
        Ok(outcome) => {
            let code = if outcome.bound_failed { 1 } else { 0 };
            (outcome.text, code)
        }
        Err(e) => (format!("error: {e}"), exit_code(&e)),
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::AbsoluteContinuity(_) => 3,
        _ => 2,
    }
}

struct Outcome {
    text: String,
    bound_failed: bool,
}

impl Outcome {
    fn ok(text: String) -> Outcome {
        Outcome {
            text,
            bound_failed: false,
        }
    }
}

fn run(cli: Cli) -> Result<Outcome> {
    match cli.command {
        Command::Eval(args) => cmd_eval(args),
        Command::Report(args) => cmd_report(args),
        Command::Search(args) => cmd_search(args),
        Command::Local(args) => cmd_local(args),
        Command::Jensen(args) => cmd_jensen(args),
    }
}

// ---------------------------------------------------------------------------
// Commands
// ---------------------------------------------------------------------------

fn cmd_eval(args: EvalArgs) -> Result<Outcome> {
    let f = parse_generator(&args.f)?;
    let tol = input_tolerance(args.renormalize, args.input_tol);
    let p = load_distribution(&args.p, tol)?;
    let q = load_distribution(&args.q, tol)?;
    let value_nats = divergence(&f, &p, &q)?;
    let (value, unit_name) = match args.units {
        UnitsArg::Nats => (value_nats, "nats"),
        UnitsArg::Bits => (value_nats.scale(1.0 / std::f64::consts::LN_2), "bits"),
    };
    let text = match args.format {
        FormatArg::Markdown => format!("{} {}", fmt_ext(value), unit_name),
        FormatArg::Json => serde_json::to_string_pretty(&json!({
            "generator": f.name(),
            "value": value,
            "units": unit_name,
        }))
        .expect("report serialization is infallible"),
    };
    Ok(Outcome::ok(text))
}

fn cmd_report(args: ReportArgs) -> Result<Outcome> {
    let tol = input_tolerance(args.renormalize, args.input_tol);
    let p = load_distribution(&args.p, tol)?;
    let q = load_distribution(&args.q, tol)?;
    let reports = crate::bounds::run_catalog(&p, &q)?;
    let reports: Vec<BoundReport> = match args.units {
        UnitsArg::Nats => reports,
        UnitsArg::Bits => reports.iter().map(BoundReport::in_bits).collect(),
    };
    let bound_failed = reports.iter().any(|r| !r.skipped && !r.holds);
    let text = match args.format {
        FormatArg::Json => {
            serde_json::to_string_pretty(&reports).expect("report serialization is infallible")
        }
        FormatArg::Markdown => render_report_table(&reports),
    };
    Ok(Outcome { text, bound_failed })
}

fn cmd_search(args: SearchArgs) -> Result<Outcome> {
    let f = parse_generator(&args.f)?;
    let g = parse_generator(&args.g)?;
    let feasible = if args.mutual {
        FeasibleSet::MutuallyDominated
    } else {
        FeasibleSet::Dominated
    };
    let obj = RatioObjective::new(f, g, feasible);
    let cfg = SearchConfig {
        alphabet_size: args.alphabet_size,
        restarts: args.restarts,
        seed: args.seed,
        ..SearchConfig::default()
    };
    let result = match (args.beta1, args.beta2) {
        (Some(b1), Some(b2)) => {
            let direction = if args.minimize {
                Direction::Minimize
            } else {
                Direction::Maximize
            };
            constrained_ratio_search(&obj, b1, b2, direction, &cfg)?
        }
        (None, None) => {
            if args.minimize {
                return Err(Error::SearchFailure(
                    "--minimize requires a pinned window (--beta1/--beta2)".into(),
                ));
            }
            ratio_supremum_search(&obj, &cfg)?
        }
        _ => {
            return Err(Error::SearchFailure(
                "--beta1 and --beta2 must be given together".into(),
            ))
        }
    };
    let text = match args.format {
        FormatArg::Json => {
            serde_json::to_string_pretty(&result).expect("result serialization is infallible")
        }
        FormatArg::Markdown => {
            let mut s = String::new();
            s.push_str(&format!("objective: {}\n", result.objective_id));
            s.push_str(&format!(
                "best value: {:.9} (claimed {}, attainment {})\n",
                result.best_value,
                result.claimed_constant,
                result
                    .attainment_ratio
                    .map_or("n/a".to_string(), |r| format!("{r:.4}")),
            ));
            s.push_str(&format!("witness P: {:?}\n", result.witness.p));
            s.push_str(&format!("witness Q: {:?}", result.witness.q));
            s
        }
    };
    Ok(Outcome::ok(text))
}

fn cmd_local(args: LocalArgs) -> Result<Outcome> {
    let f = parse_generator(&args.f)?;
    let g = parse_generator(&args.g)?;
    let tol = input_tolerance(args.renormalize, None);
    let q = load_distribution(&args.q, tol)?;
    let qp = load_distribution(&args.qp, tol)?;
    let schedule: Vec<f64> = (1..=args.levels).map(|k| 2f64.powi(-(k as i32))).collect();
    let points = local_behavior_probe(&q, &qp, &f, &g, &schedule)?;
    let limits = kappa_limits_at_one(&f, &g, None)?;
    let text = match args.format {
        FormatArg::Json => serde_json::to_string_pretty(&json!({
            "points": points,
            "kappa_limit_left": limits.0,
            "kappa_limit_right": limits.1,
        }))
        .expect("probe serialization is infallible"),
        FormatArg::Markdown => {
            let mut s = String::from("| eps | D_f/D_g |\n|---|---|\n");
            for pt in &points {
                let r = pt
                    .ratio
                    .map_or("skipped".to_string(), |v| format!("{v:.9}"));
                s.push_str(&format!("| {:.3e} | {} |\n", pt.eps, r));
            }
            s.push_str(&format!(
                "\nkappa limits at 1: left {}, right {}",
                fmt_ext(limits.0),
                fmt_ext(limits.1)
            ));
            s
        }
    };
    Ok(Outcome::ok(text))
}

fn cmd_jensen(args: JensenArgs) -> Result<Outcome> {
    let tol = input_tolerance(args.renormalize, None);
    let pu = load_distribution(&args.pu, tol)?;
    let pz = load_distribution(&args.pz, tol)?;
    let kernel = load_kernel(&args.channel)?;
    let report = crate::bounds::strengthened_jensen(args.fc.as_fn(), &pu, &pz, &kernel)?;
    let bound_failed = !report.skipped && !report.holds;
    let text = match args.format {
        FormatArg::Json => {
            serde_json::to_string_pretty(&report).expect("report serialization is infallible")
        }
        FormatArg::Markdown => render_report_table(std::slice::from_ref(&report)),
    };
    Ok(Outcome { text, bound_failed })
}

// ---------------------------------------------------------------------------
// Parsing and IO
// ---------------------------------------------------------------------------

fn input_tolerance(renormalize: bool, over: Option<f64>) -> f64 {
    over.unwrap_or(if renormalize {
        1e-6
    } else {
        crate::distributions::DiscreteDist::STRICT_TOL
    })
}

impl DiscreteDist {
    /// Strict validation tolerance used unless renormalization is
    /// requested.
    pub const STRICT_TOL: f64 = 1e-12;
}

/// Parses a generator expression: builtin names combined with `+` and
/// `star(...)`, e.g. `kl`, `marton_s+star(marton_s)`, `chi2+reverse_chi2`.
pub fn parse_generator(expr: &str) -> Result<Generator> {
    let mut acc: Option<Generator> = None;
    for raw in expr.split('+') {
        let term = raw.trim();
        let g = if let Some(inner) = term.strip_prefix("star(").and_then(|s| s.strip_suffix(')')) {
            star(&builtin(inner.trim())?)
        } else {
            builtin(term)?
        };
        acc = Some(match acc {
            None => g,
            Some(a) => sum(&a, &g)?,
        });
    }
    acc.ok_or_else(|| Error::UnknownGenerator(expr.to_string()))
}

#[derive(Deserialize)]
struct DistFile {
    atoms: Vec<AtomRecord>,
}

#[derive(Deserialize)]
struct AtomRecord {
    label: String,
    p: f64,
}

/// Loads a distribution from JSON (`{"atoms": [{"label": .., "p": ..}]}`)
/// or CSV with a `label,p` header, chosen by file extension.
pub fn load_distribution(path: &Path, tol: f64) -> Result<DiscreteDist> {
    let is_csv = path
        .extension()
        .map(|e| e.eq_ignore_ascii_case("csv"))
        .unwrap_or(false);
    let atoms = if is_csv {
        let mut reader = csv::Reader::from_path(path)
            .map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
        let mut atoms = Vec::new();
        for record in reader.deserialize() {
            let atom: AtomRecord =
                record.map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
            atoms.push((atom.label, atom.p));
        }
        atoms
    } else {
        let raw = fs::read_to_string(path)
            .map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
        let file: DistFile = serde_json::from_str(&raw)
            .map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
        file.atoms.into_iter().map(|a| (a.label, a.p)).collect()
    };
    DiscreteDist::with_tolerance(atoms, tol)
}

#[derive(Deserialize)]
struct KernelFile {
    kernel: BTreeMap<String, Vec<KernelEntry>>,
}

#[derive(Deserialize)]
struct KernelEntry {
    z: f64,
    p: f64,
}

fn load_kernel(path: &Path) -> Result<Kernel> {
    let raw =
        fs::read_to_string(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
    let file: KernelFile = serde_json::from_str(&raw)
        .map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
    Kernel::new(
        file.kernel
            .into_iter()
            .map(|(label, entries)| (label, entries.into_iter().map(|e| (e.z, e.p)).collect())),
    )
}

fn fmt_ext(v: crate::ext_real::ExtReal) -> String {
    match v.finite() {
        Some(x) => format!("{x:.6}"),
        None => v.to_string(),
    }
}

fn render_report_table(reports: &[BoundReport]) -> String {
    let mut s = String::from("| bound | lhs | rhs | slack | holds | skipped | anchor |\n|---|---|---|---|---|---|---|\n");
    for r in reports {
        let cell = |v: Option<crate::ext_real::ExtReal>| match v {
            Some(x) => fmt_ext(x),
            None => "-".to_string(),
        };
        s.push_str(&format!(
            "| {} | {} | {} | {} | {} | {} | {} |\n",
            r.bound_id,
            cell(r.lhs),
            cell(r.rhs),
            cell(r.slack),
            r.holds,
            r.skipped,
            r.paper_anchor
        ));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_expressions_parse() {
        assert_eq!(parse_generator("kl").unwrap().name(), "kl");
        assert_eq!(
            parse_generator("star(kl)").unwrap().name(),
            "star(kl)"
        );
        let sym = parse_generator("marton_s+star(marton_s)").unwrap();
        assert_eq!(sym.name(), "marton_s+star(marton_s)");
        assert!(parse_generator("hellinger").is_err());
        assert!(parse_generator("").is_err());
    }

    #[test]
    fn exit_codes_map_error_kinds() {
        assert_eq!(exit_code(&Error::AbsoluteContinuity("x".into())), 3);
        assert_eq!(exit_code(&Error::InvalidDistribution("x".into())), 2);
        assert_eq!(exit_code(&Error::Input("x".into())), 2);
    }
}
