//! `qjacobi` — evaluate Jacobi polynomials across the supported parameter
//! regimes, solve for their real zeros (including the one outside [−1, 1]),
//! check interlacing and bound claims, reproduce the published reference
//! table, and sweep claim checkers over parameter grids.
//!
//! Exit codes: 0 = everything asked for verified, 1 = a checked claim is
//! violated (or a computation could not be certified), 2 = usage error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use qjacobi_cli::reference::{BOUNDS_N, BOUNDS_ROWS};
use qjacobi_cli::report::{csv_escape, sig12, OutputFormat, ReportRow};
use qjacobi_cli::sweep::{claim_row, run_sweep, ClaimSelector, SweepConfig};
use qjacobi_core::{
    bound_chain, eval_recurrence, eval_sum, oracle_zeros, solve_zeros, Error as CoreError,
    ParamPair,
};

#[derive(Parser)]
#[command(
    name = "qjacobi",
    version,
    about = "Jacobi polynomial toolkit for the quasi-orthogonal regime: \
             evaluation, zeros, bounds, and claim verification"
)]
struct Cli {
    /// Output format for structured results.
    #[arg(long, global = true, default_value = "json", value_parser = parse_format)]
    format: OutputFormat,

    /// Absolute tolerance when comparing against published reference values
    /// (`table1`).
    #[arg(long, global = true, default_value_t = 1e-4)]
    tol: f64,

    /// Treat vacuous verdicts (hypotheses not met) and boundary ties as
    /// success instead of failure.
    #[arg(long, global = true)]
    allow_vacuous: bool,

    #[command(subcommand)]
    command: Command,
}

fn parse_format(s: &str) -> Result<OutputFormat, String> {
    s.parse()
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EvalMethod {
    /// Three-term recurrence (fails loudly on degenerate parameters).
    Recurrence,
    /// Direct finite sum (defined for all parameter values).
    Sum,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the degree-n polynomial at a point.
    Eval {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        alpha: f64,
        #[arg(long, allow_hyphen_values = true)]
        beta: f64,
        #[arg(long, allow_hyphen_values = true)]
        x: f64,
        #[arg(long, value_enum, default_value_t = EvalMethod::Recurrence)]
        method: EvalMethod,
    },
    /// Compute all real zeros, certified by residual checks.
    Zeros {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        alpha: f64,
        #[arg(long, allow_hyphen_values = true)]
        beta: f64,
        /// Use the slow scan-and-bisect reference method (n ≤ 12).
        #[arg(long)]
        oracle: bool,
    },
    /// Print the bound chain for the zero below −1, plus the interlacing
    /// threshold δ.
    Bounds {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        alpha: f64,
        #[arg(long, allow_hyphen_values = true)]
        beta: f64,
    },
    /// Check one claim at one parameter point and report the verdict.
    Verify {
        /// Claim name, e.g. lemma15, thm21, cor_noninterlace, thm51ii.
        #[arg(long)]
        claim: String,
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        alpha: f64,
        #[arg(long, allow_hyphen_values = true)]
        beta: f64,
        /// β-shift for the shift-parameterized claim (default 2).
        #[arg(long, allow_hyphen_values = true)]
        t: Option<f64>,
        /// Degree gap for the non-interlacing claim (default: all gaps).
        #[arg(long)]
        k: Option<usize>,
    },
    /// Recompute the published bound table for the degree-15 smallest zero
    /// and diff it against the printed values.
    Table1,
    /// Run claim checkers over a parameter grid and emit one row per check.
    Sweep {
        /// Comma-separated claim names.
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        claims: Vec<String>,
        /// Comma-separated α values.
        #[arg(
            long,
            value_delimiter = ',',
            allow_hyphen_values = true,
            default_values_t = qjacobi_core::grid::ALPHAS
        )]
        alphas: Vec<f64>,
        /// Comma-separated β values.
        #[arg(
            long,
            value_delimiter = ',',
            allow_hyphen_values = true,
            default_values_t = qjacobi_core::grid::BETAS
        )]
        betas: Vec<f64>,
        #[arg(long, default_value_t = 2)]
        n_min: usize,
        #[arg(long, default_value_t = 10)]
        n_max: usize,
        /// Comma-separated β-shifts for the shift-parameterized claims.
        #[arg(
            long,
            value_delimiter = ',',
            allow_hyphen_values = true,
            default_values_t = [2.0, 2.5, 3.0, 3.5, 4.0]
        )]
        t_list: Vec<f64>,
        /// Worker threads (default: QJACOBI_THREADS, else 1).
        #[arg(long)]
        parallelism: Option<usize>,
        /// Write rows to this file instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

/// A failure that ends the process: exit code plus a stderr message.
struct Failure {
    code: u8,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: 2, message: message.into() }
}

/// Map core errors onto the exit-code contract: malformed or out-of-domain
/// input is a usage error; a computation that starts but cannot be certified
/// counts as an unverified claim.
fn from_core(e: CoreError) -> Failure {
    let code = match e {
        CoreError::InvalidParameter { .. }
        | CoreError::DegenerateParameters { .. }
        | CoreError::RegimeMismatch { .. }
        | CoreError::InvalidDegree { .. }
        | CoreError::UnsupportedShift { .. }
        | CoreError::LengthMismatch { .. } => 2,
        CoreError::BracketFailure { .. }
        | CoreError::ConvergenceFailure { .. }
        | CoreError::SeparationFailure { .. }
        | CoreError::OracleFailure { .. } => 1,
    };
    Failure { code, message: e.to_string() }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Eval { n, alpha, beta, x, method } => cmd_eval(n, alpha, beta, x, method),
        Command::Zeros { n, alpha, beta, oracle } => cmd_zeros(cli.format, n, alpha, beta, oracle),
        Command::Bounds { n, alpha, beta } => cmd_bounds(cli.format, n, alpha, beta),
        Command::Verify { ref claim, n, alpha, beta, t, k } => {
            cmd_verify(cli.format, cli.allow_vacuous, claim, n, alpha, beta, t, k)
        }
        Command::Table1 => cmd_table1(cli.format, cli.tol),
        Command::Sweep {
            ref claims,
            ref alphas,
            ref betas,
            n_min,
            n_max,
            ref t_list,
            parallelism,
            ref output,
        } => cmd_sweep(
            cli.format,
            cli.allow_vacuous,
            claims,
            alphas,
            betas,
            (n_min, n_max),
            t_list,
            parallelism,
            output.as_deref(),
        ),
    }
}

fn parse_params(alpha: f64, beta: f64) -> Result<ParamPair, Failure> {
    ParamPair::new(alpha, beta).map_err(from_core)
}

fn cmd_eval(n: usize, alpha: f64, beta: f64, x: f64, method: EvalMethod) -> Result<u8, Failure> {
    let params = parse_params(alpha, beta)?;
    let value = match method {
        EvalMethod::Recurrence => eval_recurrence(n, &params, x),
        EvalMethod::Sum => eval_sum(n, &params, x),
    }
    .map_err(from_core)?;
    println!("{value}");
    Ok(0)
}

fn cmd_zeros(
    format: OutputFormat,
    n: usize,
    alpha: f64,
    beta: f64,
    oracle: bool,
) -> Result<u8, Failure> {
    let params = parse_params(alpha, beta)?;
    let set = if oracle { oracle_zeros(n, &params) } else { solve_zeros(n, &params) }
        .map_err(from_core)?;
    let mut out = String::new();
    match format {
        OutputFormat::JsonLines => {
            out.push_str(&serde_json::to_string(&set).expect("zero sets serialize"));
            out.push('\n');
        }
        OutputFormat::Csv => {
            out.push_str("index,zero,residual\n");
            for (i, (z, r)) in set.zeros.iter().zip(set.residuals.iter()).enumerate() {
                out.push_str(&format!("{},{},{}\n", i + 1, sig12(*z), sig12(*r)));
            }
        }
    }
    print!("{out}");
    Ok(0)
}

#[derive(Serialize)]
struct BoundsOut {
    loose_lower: f64,
    tight_lower: f64,
    upper: f64,
    delta: f64,
}

fn cmd_bounds(format: OutputFormat, n: usize, alpha: f64, beta: f64) -> Result<u8, Failure> {
    let params = parse_params(alpha, beta)?;
    let chain = bound_chain(n, &params).map_err(from_core)?;
    let delta = qjacobi_core::askey_delta(n, &params).map_err(from_core)?;
    let out = BoundsOut {
        loose_lower: chain.loose_lower,
        tight_lower: chain.tight_lower,
        upper: chain.upper,
        delta,
    };
    match format {
        OutputFormat::JsonLines => {
            println!("{}", serde_json::to_string(&out).expect("bounds serialize"));
        }
        OutputFormat::Csv => {
            println!("loose_lower,tight_lower,upper,delta");
            println!(
                "{},{},{},{}",
                sig12(out.loose_lower),
                sig12(out.tight_lower),
                sig12(out.upper),
                sig12(out.delta)
            );
        }
    }
    Ok(0)
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    format: OutputFormat,
    allow_vacuous: bool,
    claim: &str,
    n: usize,
    alpha: f64,
    beta: f64,
    t: Option<f64>,
    k: Option<usize>,
) -> Result<u8, Failure> {
    let selector: ClaimSelector = claim.parse().map_err(usage)?;
    let params = parse_params(alpha, beta)?;
    let row = claim_row(selector, n, &params, t, k).map_err(from_core)?;
    match format {
        OutputFormat::JsonLines => println!("{}", row.to_json()),
        OutputFormat::Csv => {
            println!("{}", ReportRow::CSV_HEADER);
            println!("{}", row.to_csv());
        }
    }
    if row.holds {
        Ok(0)
    } else if row.is_violation() {
        Ok(1)
    } else if allow_vacuous {
        Ok(0)
    } else {
        Ok(1)
    }
}

#[derive(Serialize)]
struct Table1Out {
    alpha: f64,
    beta: f64,
    tight_lower: f64,
    zero: f64,
    upper: f64,
    paper_tight_lower: f64,
    paper_zero: f64,
    paper_upper: f64,
    abs_diffs: String,
}

const TABLE1_HEADER: &str =
    "alpha,beta,tight_lower,zero,upper,paper_tight_lower,paper_zero,paper_upper,abs_diffs";

fn cmd_table1(format: OutputFormat, tol: f64) -> Result<u8, Failure> {
    let mut out = String::new();
    if format == OutputFormat::Csv {
        out.push_str(TABLE1_HEADER);
        out.push('\n');
    }
    let mut all_ok = true;
    for reference in &BOUNDS_ROWS {
        let params = parse_params(reference.alpha, reference.beta)?;
        let chain = bound_chain(BOUNDS_N, &params).map_err(from_core)?;
        let set = solve_zeros(BOUNDS_N, &params).map_err(from_core)?;
        let zero = set.zeros[0];
        let diffs = [
            (chain.tight_lower - reference.tight_lower).abs(),
            (zero - reference.zero).abs(),
            (chain.upper - reference.upper).abs(),
        ];
        // The flagged row's printed upper bound is inconsistent with the
        // bound ordering, so it is diffed for the record but judged by the
        // ordering the chain must satisfy instead of by distance.
        let upper_ok = if reference.upper_flagged {
            chain.tight_lower < zero && zero < chain.upper && chain.upper < -1.0
        } else {
            diffs[2] <= tol
        };
        all_ok &= diffs[0] <= tol && diffs[1] <= tol && upper_ok;
        let row = Table1Out {
            alpha: reference.alpha,
            beta: reference.beta,
            tight_lower: chain.tight_lower,
            zero,
            upper: chain.upper,
            paper_tight_lower: reference.tight_lower,
            paper_zero: reference.zero,
            paper_upper: reference.upper,
            abs_diffs: format!("{};{};{}", sig12(diffs[0]), sig12(diffs[1]), sig12(diffs[2])),
        };
        match format {
            OutputFormat::JsonLines => {
                out.push_str(&serde_json::to_string(&row).expect("table rows serialize"));
                out.push('\n');
            }
            OutputFormat::Csv => {
                let cells = [
                    sig12(row.alpha),
                    sig12(row.beta),
                    sig12(row.tight_lower),
                    sig12(row.zero),
                    sig12(row.upper),
                    sig12(row.paper_tight_lower),
                    sig12(row.paper_zero),
                    sig12(row.paper_upper),
                    csv_escape(&row.abs_diffs),
                ];
                out.push_str(&cells.join(","));
                out.push('\n');
            }
        }
    }
    print!("{out}");
    Ok(if all_ok { 0 } else { 1 })
}

fn resolve_parallelism(flag: Option<usize>) -> Result<usize, Failure> {
    if let Some(p) = flag {
        return Ok(p);
    }
    match std::env::var("QJACOBI_THREADS") {
        Ok(s) => match s.trim().parse::<usize>() {
            Ok(v) if v >= 1 => Ok(v),
            _ => Err(usage(format!("QJACOBI_THREADS = '{s}' is not a positive integer"))),
        },
        Err(_) => Ok(1),
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_sweep(
    format: OutputFormat,
    allow_vacuous: bool,
    claims: &[String],
    alphas: &[f64],
    betas: &[f64],
    n_range: (usize, usize),
    t_list: &[f64],
    parallelism: Option<usize>,
    output: Option<&std::path::Path>,
) -> Result<u8, Failure> {
    let claims: Vec<ClaimSelector> =
        claims.iter().map(|s| s.parse().map_err(usage)).collect::<Result<_, _>>()?;
    let config = SweepConfig {
        alpha_list: alphas.to_vec(),
        beta_list: betas.to_vec(),
        n_range,
        t_list: t_list.to_vec(),
        claims,
        output_format: format,
        parallelism: resolve_parallelism(parallelism)?,
    };
    let (rows, summary) = run_sweep(&config).map_err(usage)?;
    let mut out = String::new();
    match format {
        OutputFormat::JsonLines => {
            for row in &rows {
                out.push_str(&row.to_json());
                out.push('\n');
            }
        }
        OutputFormat::Csv => {
            out.push_str(ReportRow::CSV_HEADER);
            out.push('\n');
            for row in &rows {
                out.push_str(&row.to_csv());
                out.push('\n');
            }
        }
    }
    match output {
        Some(path) => std::fs::write(path, &out)
            .map_err(|e| usage(format!("cannot write {}: {e}", path.display())))?,
        None => print!("{out}"),
    }
    eprintln!("{}", summary.line());
    let violated = rows.iter().any(|r| r.is_violation());
    let unverified = rows.iter().any(|r| !r.holds && !r.is_violation());
    Ok(if violated || (unverified && !allow_vacuous) { 1 } else { 0 })
}
