//! Command-line front-end: `bound`, `verify`, `fuzz`, and `plot`.
//!
//! Exit codes: 0 success, 1 malformed input or bad parameter, 2 hypothesis
//! violated (or no feasible parameters), 3 verification inconclusive or not
//! established. Errors are printed as JSON objects
//! `{"error": {"code": ..., "message": ...}}` with machine-readable codes.

use crate::fuzz::{run_campaign, FuzzConfig, Regime};
use crate::optimizer::{
    best_bound, entry_for, k_min, optimize_t1, optimize_t2, optimize_t3, quality, rho_max,
    BoundEntry, BoundReport, ContainmentTag, OptError,
};
use crate::poly::{PolyError, Polynomial};
use crate::roots::{find_roots, RootSet};
use crate::svg::render_plot;
use crate::theorems::{feasible_lambdas, TheoremError, TheoremId, TheoremParams};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use std::ffi::OsString;
use std::path::PathBuf;
use std::str::FromStr;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_HYPOTHESIS: i32 = 2;
pub const EXIT_INCONCLUSIVE: i32 = 3;

/// Theorem selector: a single bound id or `all`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Selector {
    All,
    One(TheoremId),
}

impl FromStr for Selector {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        if s.eq_ignore_ascii_case("all") {
            Ok(Selector::All)
        } else {
            TheoremId::from_str(s).map(Selector::One)
        }
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "zerobound",
    version,
    about = "Coefficient-based disk bounds for the zeros of real polynomials",
    long_about = "Computes closed disks guaranteed to contain every zero of a real \
polynomial from inequalities on its coefficients (Enestrom-Kakeya-type bounds and \
their shifted/unimodal generalizations), optimizes the bounds' free parameters, and \
verifies each disk against an independent Aberth-Ehrlich root solver.\n\n\
Coefficients are always given in ascending power order: a_0,a_1,...,a_n.\n\
Bounds are ranked by quality = |center| + radius, the radius of the smallest \
origin-centered disk containing the bound disk.\n\n\
Fuzz streams come from the ChaCha8 generator (rand_chacha), so a seed pins the \
exact instance sequence across releases."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Compute disk bounds from the coefficient chain (no root solving)
    Bound(BoundArgs),
    /// Compute bounds, solve for the zeros, and check containment
    Verify(VerifyArgs),
    /// Run a seeded campaign of hypothesis-satisfying random instances
    Fuzz(FuzzArgs),
    /// Render bound disks and computed zeros as a standalone SVG
    Plot(PlotArgs),
}

#[derive(Args, Debug, Clone)]
pub struct ProblemArgs {
    /// Ascending coefficients "a_0,a_1,...,a_n" (or JSON {"coeffs": [...]})
    #[arg(short, long, allow_hyphen_values = true)]
    pub coeffs: String,
    /// Bound to apply: a, b, c, d, e, cor1, t1, t2, t3, or all
    #[arg(long, default_value = "all")]
    pub theorem: Selector,
    /// t1 top-end shift (chain a_0-beta <= a_1 <= ... <= a_n+alpha)
    #[arg(long, allow_negative_numbers = true)]
    pub alpha: Option<f64>,
    /// t1 bottom-end shift
    #[arg(long, allow_negative_numbers = true)]
    pub beta: Option<f64>,
    /// t2/t3 bottom-end shift (chain a_0-s <= a_1 <= ...)
    #[arg(long, allow_negative_numbers = true)]
    pub s: Option<f64>,
    /// t3 top-end shift (chain ... >= a_n+t)
    #[arg(long, allow_negative_numbers = true)]
    pub t: Option<f64>,
    /// Peak index for the unimodal chains (e, t2, t3), 1 <= lambda < n
    #[arg(long)]
    pub lambda: Option<usize>,
    /// Leading-coefficient multiplier for c, d, cor1 (k >= 1)
    #[arg(long)]
    pub k: Option<f64>,
    /// Constant-term multiplier for d, e, cor1 (0 < rho <= 1)
    #[arg(long)]
    pub rho: Option<f64>,
    /// Pick quality-minimal parameters instead of explicit values
    #[arg(long)]
    pub optimize: bool,
    /// Relax every chain comparison x <= y to x <= y + TOL
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub chain_tol: f64,
}

#[derive(Args, Debug)]
pub struct BoundArgs {
    #[command(flatten)]
    pub problem: ProblemArgs,
    /// Write the JSON report to this file instead of stdout
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub problem: ProblemArgs,
    /// Check every applicable bound (same as --theorem all)
    #[arg(long)]
    pub all: bool,
    /// Root-solver relative step tolerance
    #[arg(long, default_value_t = 1e-13)]
    pub tol: f64,
    /// Root-solver iteration cap
    #[arg(long, default_value_t = 1000)]
    pub max_iter: usize,
    /// Write the JSON report to this file instead of stdout
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct FuzzArgs {
    /// Bound whose containment claim to fuzz
    #[arg(long)]
    pub theorem: TheoremId,
    /// Number of instances to generate
    #[arg(long, default_value_t = 100)]
    pub count: u64,
    /// PRNG seed (ChaCha8); identical seeds give byte-identical summaries
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Smallest polynomial degree to generate
    #[arg(long, default_value_t = 2)]
    pub degree_min: usize,
    /// Largest polynomial degree to generate
    #[arg(long, default_value_t = 15)]
    pub degree_max: usize,
    /// Scale of sampled coefficients, parameters and slacks
    #[arg(long, default_value_t = 1.0)]
    pub scale: f64,
    /// "proven" keeps instances where containment is a theorem; "full"
    /// also samples a_n < 0 / alpha < 0, where failures are reported data
    #[arg(long, default_value = "proven")]
    pub regime: Regime,
    /// Write the JSON summary to this file instead of stdout
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct PlotArgs {
    #[command(flatten)]
    pub problem: ProblemArgs,
    /// Root-solver relative step tolerance
    #[arg(long, default_value_t = 1e-13)]
    pub tol: f64,
    /// Root-solver iteration cap
    #[arg(long, default_value_t = 1000)]
    pub max_iter: usize,
    /// Output SVG path
    #[arg(long)]
    pub out: PathBuf,
}

/// Command failure carrying the exit code and a machine-readable code.
#[derive(Debug)]
struct CmdError {
    exit: i32,
    code: &'static str,
    message: String,
}

impl CmdError {
    fn input(message: impl Into<String>) -> Self {
        CmdError {
            exit: EXIT_INPUT,
            code: "malformed_input",
            message: message.into(),
        }
    }

    fn json(&self) -> String {
        serde_json::to_string_pretty(&serde_json::json!({
            "error": { "code": self.code, "message": self.message }
        }))
        .expect("error object serializes")
    }
}

impl From<PolyError> for CmdError {
    fn from(e: PolyError) -> Self {
        CmdError {
            exit: EXIT_INPUT,
            code: "malformed_input",
            message: e.to_string(),
        }
    }
}

impl From<TheoremError> for CmdError {
    fn from(e: TheoremError) -> Self {
        match e {
            TheoremError::BadParam { .. } => CmdError {
                exit: EXIT_INPUT,
                code: "bad_param",
                message: e.to_string(),
            },
            TheoremError::HypothesisViolated { .. } => CmdError {
                exit: EXIT_HYPOTHESIS,
                code: "hypothesis_violated",
                message: e.to_string(),
            },
        }
    }
}

impl From<OptError> for CmdError {
    fn from(e: OptError) -> Self {
        CmdError {
            exit: EXIT_HYPOTHESIS,
            code: "infeasible",
            message: e.to_string(),
        }
    }
}

/// Parses argv and runs the selected command, returning the process exit
/// code. Output goes to stdout (or `--out`), usage errors to stderr.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    print!("{e}");
                    EXIT_OK
                }
                _ => {
                    eprint!("{e}");
                    EXIT_INPUT
                }
            };
        }
    };
    let (stdout, exit) = match cli.command {
        Command::Bound(args) => cmd_bound(&args),
        Command::Verify(args) => cmd_verify(&args),
        Command::Fuzz(args) => cmd_fuzz(&args),
        Command::Plot(args) => cmd_plot(&args),
    };
    if !stdout.is_empty() {
        println!("{stdout}");
    }
    exit
}

fn pretty<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report serializes")
}

/// Emits `text` to the file at `out` when given, else returns it for stdout.
fn deliver(text: String, out: &Option<PathBuf>) -> Result<String, CmdError> {
    match out {
        None => Ok(text),
        Some(path) => {
            std::fs::write(path, text.as_bytes()).map_err(|e| CmdError {
                exit: EXIT_INPUT,
                code: "io_error",
                message: format!("cannot write {}: {e}", path.display()),
            })?;
            Ok(String::new())
        }
    }
}

fn explicit_params(id: TheoremId, a: &ProblemArgs) -> Result<TheoremParams, CmdError> {
    fn req<T: Copy>(v: Option<T>, flag: &str, id: TheoremId) -> Result<T, CmdError> {
        v.ok_or_else(|| {
            CmdError::input(format!(
                "--{flag} is required for --theorem {id} (or pass --optimize)"
            ))
        })
    }
    Ok(match id {
        TheoremId::A => TheoremParams::A,
        TheoremId::B => TheoremParams::B,
        TheoremId::C => TheoremParams::C {
            k: req(a.k, "k", id)?,
        },
        TheoremId::D => TheoremParams::D {
            k: req(a.k, "k", id)?,
            rho: req(a.rho, "rho", id)?,
        },
        TheoremId::E => TheoremParams::E {
            rho: req(a.rho, "rho", id)?,
            lambda: req(a.lambda, "lambda", id)?,
        },
        TheoremId::Cor1 => TheoremParams::Cor1 {
            k: req(a.k, "k", id)?,
            rho: req(a.rho, "rho", id)?,
        },
        TheoremId::T1 => TheoremParams::T1 {
            alpha: req(a.alpha, "alpha", id)?,
            beta: req(a.beta, "beta", id)?,
        },
        TheoremId::T2 => TheoremParams::T2 {
            s: req(a.s, "s", id)?,
            lambda: req(a.lambda, "lambda", id)?,
        },
        TheoremId::T3 => TheoremParams::T3 {
            s: req(a.s, "s", id)?,
            t: req(a.t, "t", id)?,
            lambda: req(a.lambda, "lambda", id)?,
        },
    })
}

fn infeasible(id: TheoremId, why: &str) -> CmdError {
    CmdError {
        exit: EXIT_HYPOTHESIS,
        code: "infeasible",
        message: format!("{id}: {why}"),
    }
}

/// Quality-minimal parameters for a single bound.
fn optimized_params(p: &Polynomial, id: TheoremId) -> Result<TheoremParams, CmdError> {
    Ok(match id {
        TheoremId::A => TheoremParams::A,
        TheoremId::B => TheoremParams::B,
        TheoremId::C => TheoremParams::C {
            k: k_min(p).ok_or_else(|| infeasible(id, "k extraction needs a_n > 0"))?,
        },
        TheoremId::D => TheoremParams::D {
            k: k_min(p).ok_or_else(|| infeasible(id, "k extraction needs a_n > 0"))?,
            rho: rho_max(p).ok_or_else(|| infeasible(id, "no rho in (0,1] with rho*a_0 <= a_1"))?,
        },
        TheoremId::Cor1 => TheoremParams::Cor1 {
            k: k_min(p).ok_or_else(|| infeasible(id, "k extraction needs a_n > 0"))?,
            rho: rho_max(p).ok_or_else(|| infeasible(id, "no rho in (0,1] with rho*a_0 <= a_1"))?,
        },
        TheoremId::E => {
            let rho =
                rho_max(p).ok_or_else(|| infeasible(id, "no rho in (0,1] with rho*a_0 <= a_1"))?;
            let mut best: Option<(f64, usize)> = None;
            for lambda in feasible_lambdas(p) {
                if let Ok(entry) = entry_for(p, TheoremParams::E { rho, lambda }, 0.0, None) {
                    let q = quality(&entry.disk);
                    if best.is_none_or(|(bq, _)| q < bq) {
                        best = Some((q, lambda));
                    }
                }
            }
            let (_, lambda) =
                best.ok_or_else(|| infeasible(id, "no feasible peak index lambda"))?;
            TheoremParams::E { rho, lambda }
        }
        TheoremId::T1 => {
            let opt = optimize_t1(p)?;
            TheoremParams::T1 {
                alpha: opt.alpha,
                beta: opt.beta,
            }
        }
        TheoremId::T2 => {
            let opt = optimize_t2(p)?;
            TheoremParams::T2 {
                s: opt.s,
                lambda: opt.lambda,
            }
        }
        TheoremId::T3 => {
            let opt = optimize_t3(p)?;
            TheoremParams::T3 {
                s: opt.s,
                t: opt.t,
                lambda: opt.lambda,
            }
        }
    })
}

fn single_entry_report(
    p: &Polynomial,
    args: &ProblemArgs,
    id: TheoremId,
    roots: Option<&RootSet>,
) -> Result<BoundReport, CmdError> {
    let params = if args.optimize {
        optimized_params(p, id)?
    } else {
        explicit_params(id, args)?
    };
    let entry = entry_for(p, params, args.chain_tol, roots)?;
    Ok(BoundReport {
        polynomial: p.clone(),
        entries: vec![entry],
        best: Some(0),
    })
}

fn build_report(
    args: &ProblemArgs,
    selector: Selector,
    roots: Option<&RootSet>,
) -> Result<BoundReport, CmdError> {
    let p: Polynomial = args.coeffs.parse()?;
    match selector {
        Selector::All => Ok(best_bound(&p, roots, args.chain_tol)),
        Selector::One(id) => single_entry_report(&p, args, id, roots),
    }
}

fn cmd_result_to_output(result: Result<(String, i32), CmdError>) -> (String, i32) {
    match result {
        Ok(pair) => pair,
        Err(e) => (e.json(), e.exit),
    }
}

pub fn cmd_bound(args: &BoundArgs) -> (String, i32) {
    cmd_result_to_output((|| {
        let report = build_report(&args.problem, args.problem.theorem, None)?;
        let text = deliver(pretty(&report), &args.out)?;
        Ok((text, EXIT_OK))
    })())
}

/// `verify` output: the bound report plus the computed root set.
#[derive(Serialize)]
struct VerifyOutput {
    #[serde(flatten)]
    report: BoundReport,
    roots: RootSet,
}

fn verify_exit(report: &BoundReport, roots: &RootSet) -> i32 {
    if !roots.converged
        || report
            .entries
            .iter()
            .any(|e| e.containment == ContainmentTag::Inconclusive)
    {
        return EXIT_INCONCLUSIVE;
    }
    let refuted = report
        .entries
        .iter()
        .any(|e| e.containment == ContainmentTag::Failed && !e.unverified_regime);
    if refuted {
        // a containment failure inside the proven regime; nothing in the
        // verified parameter space should reach this
        EXIT_INCONCLUSIVE
    } else {
        EXIT_OK
    }
}

pub fn cmd_verify(args: &VerifyArgs) -> (String, i32) {
    cmd_result_to_output((|| {
        let p: Polynomial = args.problem.coeffs.parse()?;
        let roots = find_roots(&p, args.tol, args.max_iter);
        let selector = if args.all {
            Selector::All
        } else {
            args.problem.theorem
        };
        let report = match selector {
            Selector::All => best_bound(&p, Some(&roots), args.problem.chain_tol),
            Selector::One(id) => single_entry_report(&p, &args.problem, id, Some(&roots))?,
        };
        let exit = verify_exit(&report, &roots);
        let text = deliver(pretty(&VerifyOutput { report, roots }), &args.out)?;
        Ok((text, exit))
    })())
}

pub fn cmd_fuzz(args: &FuzzArgs) -> (String, i32) {
    cmd_result_to_output((|| {
        if args.degree_min < 2 || args.degree_min > args.degree_max || args.degree_max > 30 {
            return Err(CmdError::input(format!(
                "degree range [{}, {}] must satisfy 2 <= min <= max <= 30",
                args.degree_min, args.degree_max
            )));
        }
        if !(args.scale.is_finite() && args.scale > 0.0) {
            return Err(CmdError::input(format!(
                "--scale {} must be positive",
                args.scale
            )));
        }
        let config = FuzzConfig {
            theorem: args.theorem,
            count: args.count,
            degree_min: args.degree_min,
            degree_max: args.degree_max,
            scale: args.scale,
            seed: args.seed,
            regime: args.regime,
        };
        let summary = run_campaign(&config);
        let text = deliver(pretty(&summary), &args.out)?;
        Ok((text, EXIT_OK))
    })())
}

pub fn cmd_plot(args: &PlotArgs) -> (String, i32) {
    cmd_result_to_output((|| {
        let p: Polynomial = args.problem.coeffs.parse()?;
        let roots = find_roots(&p, args.tol, args.max_iter);
        let report = match args.problem.theorem {
            Selector::All => best_bound(&p, Some(&roots), args.problem.chain_tol),
            Selector::One(id) => single_entry_report(&p, &args.problem, id, Some(&roots))?,
        };
        if report.entries.is_empty() {
            return Err(infeasible_plot());
        }
        let labeled: Vec<(String, _)> = report
            .entries
            .iter()
            .map(|e: &BoundEntry| (e.theorem().to_string(), e.disk))
            .collect();
        let svg = render_plot(&labeled, &roots.roots);
        std::fs::write(&args.out, svg.as_bytes()).map_err(|e| CmdError {
            exit: EXIT_INPUT,
            code: "io_error",
            message: format!("cannot write {}: {e}", args.out.display()),
        })?;
        let confirmation = pretty(&serde_json::json!({
            "written": args.out.display().to_string(),
            "disks": labeled.len(),
            "roots": roots.roots.len(),
        }));
        Ok((confirmation, EXIT_OK))
    })())
}

fn infeasible_plot() -> CmdError {
    CmdError {
        exit: EXIT_HYPOTHESIS,
        code: "infeasible",
        message: "no applicable bound to draw".into(),
    }
}
