//! `altruns` — exact triangles, polynomials, and a cross-validation suite
//! for alternating runs in permutations.
//!
//! Exit codes: 0 success (and all checks passed for `verify`), 1 a
//! verification failure or internal inconsistency, 2 bad arguments.

use std::process::ExitCode;

use altruns::derivpoly::{self, derivative_polys};
use altruns::oracle::{self, DEFAULT_ENUMERATION_CAP, HARD_ENUMERATION_CAP};
use altruns::runs::{self, r_poly_recurrence, r_table_recurrence};
use altruns::sequences;
use altruns::verify::{verify_all, Fault, VerifyConfig};
use altruns::{Error, TriangularTable};
use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use altruns_cli::format::{self, Format};

const AFTER_HELP: &str = "\
Output conventions:
  json    values outside the i64 range are printed as decimal strings, so
          64-bit consumers never lose precision silently
  bfile   OEIS-style lines `i v`, 1-based running index over the triangle
          read row by row (or over a polynomial's ascending coefficients)

Oracle methods enumerate all n! permutations. The cap defaults to 9;
--allow-large-oracle raises it to the hard cap, which is 11 unless the
ALTRUNS_ORACLE_HARD_CAP environment variable overrides it.";

#[derive(Parser)]
#[command(
    name = "altruns",
    version,
    about = "Alternating runs in permutations: exact triangles, polynomials, and cross-validation",
    after_help = AFTER_HELP
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a number triangle row by row
    Table(TableArgs),
    /// Print one polynomial from a family
    Poly(PolyArgs),
    /// Run the cross-validation suite and report per-check results
    Verify(VerifyArgs),
}

#[derive(Args)]
struct TableArgs {
    /// Triangle family
    #[arg(value_enum)]
    family: TableFamily,
    /// Largest row to print
    #[arg(long, default_value_t = 10)]
    n_max: usize,
    #[arg(long, value_enum, default_value_t = Format::Pretty)]
    format: Format,
    /// Production route (runs family only)
    #[arg(long, value_enum)]
    method: Option<RunsMethod>,
    /// Raise the enumeration cap to the hard cap for the oracle method
    #[arg(long)]
    allow_large_oracle: bool,
}

#[derive(Args)]
struct PolyArgs {
    /// Polynomial family: R (runs), P (derivative), a (companion), A (Eulerian)
    #[arg(value_enum)]
    family: PolyFamily,
    /// Index of the polynomial within its family
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, default_value_t = Format::Pretty)]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    /// Largest row for the formula-vs-formula checks
    #[arg(long, default_value_t = 15)]
    n_max: usize,
    /// Largest row compared against brute-force enumeration
    #[arg(long, default_value_t = 8)]
    oracle_max: usize,
    /// Report format (json or pretty)
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Run only these checks (comma-separated; see --list-checks)
    #[arg(long, value_delimiter = ',')]
    checks: Option<Vec<String>>,
    /// Print the available check names and exit
    #[arg(long)]
    list_checks: bool,
    /// Raise the enumeration cap to the hard cap
    #[arg(long)]
    allow_large_oracle: bool,
    /// Corrupt baseline cell `n,k` before checking (exercises the suite's
    /// own failure path; a healthy build must then exit 1)
    #[arg(long, hide = true, value_parser = parse_fault)]
    inject_fault: Option<Fault>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableFamily {
    /// R(n,k): permutations of [n] with k alternating runs (rows from n=2)
    Runs,
    /// A(n,k): permutations of [n] with k-1 descents (rows from n=1)
    Eulerian,
    /// S(n,k): partitions of an n-set into k blocks (rows from n=1)
    Stirling,
    /// T(n,k): n!·[t^n] tan^k t (rows from n=1)
    Tangent,
    /// p(n,j): derivative-polynomial coefficients (rows from n=0)
    Derivcoef,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RunsMethod {
    /// Integer recurrence (default)
    Recurrence,
    /// Expansion over the (x+1)/(x−1) basis
    Theorem,
    /// Explicit coefficient formula
    Explicit,
    /// Stanley's double sum
    Stanley,
    /// Brute-force enumeration (cap applies)
    Oracle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PolyFamily {
    /// R_n(x): generating polynomial of runs (n >= 1)
    #[value(name = "R")]
    Runs,
    /// P_n(x): derivative polynomial of the tangent (n >= 0)
    #[value(name = "P")]
    Derivative,
    /// a_n(y): companion polynomial with signed p(n,·) coefficients (n >= 1)
    #[value(name = "a")]
    Companion,
    /// A_n(x): Eulerian polynomial (n >= 1)
    #[value(name = "A")]
    Eulerian,
}

enum CliError {
    /// Bad arguments or configuration: exit 2.
    Usage(String),
    /// A formula produced an inexact division or non-integer: exit 1.
    Inconsistency(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> CliError {
        if e.is_tripwire() {
            CliError::Inconsistency(e.to_string())
        } else {
            CliError::Usage(e.to_string())
        }
    }
}

fn parse_fault(raw: &str) -> Result<Fault, String> {
    let (n, k) = raw
        .split_once(',')
        .ok_or_else(|| "expected `n,k`".to_string())?;
    let n = n.trim().parse().map_err(|_| format!("bad row index {n:?}"))?;
    let k = k.trim().parse().map_err(|_| format!("bad column index {k:?}"))?;
    Ok(Fault { n, k })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            eprint!("{e}");
            return ExitCode::from(2);
        }
    };
    let result = match cli.command {
        Command::Table(args) => cmd_table(args),
        Command::Poly(args) => cmd_poly(args),
        Command::Verify(args) => cmd_verify(args),
    };
    match result {
        Ok(code) => code,
        Err(CliError::Usage(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
        Err(CliError::Inconsistency(message)) => {
            eprintln!("internal inconsistency: {message}");
            ExitCode::from(1)
        }
    }
}

/// The enumeration cap in effect: 9 by default, the hard cap (env-settable)
/// with `--allow-large-oracle`.
fn resolved_cap(allow_large: bool) -> Result<usize, CliError> {
    let hard = match std::env::var("ALTRUNS_ORACLE_HARD_CAP") {
        Ok(raw) => raw.trim().parse::<usize>().map_err(|_| {
            CliError::Usage(format!(
                "ALTRUNS_ORACLE_HARD_CAP must be a nonnegative integer, got {raw:?}"
            ))
        })?,
        Err(_) => HARD_ENUMERATION_CAP,
    };
    Ok(if allow_large {
        hard
    } else {
        DEFAULT_ENUMERATION_CAP.min(hard)
    })
}

fn cmd_table(args: TableArgs) -> Result<ExitCode, CliError> {
    if args.method.is_some() && args.family != TableFamily::Runs {
        return Err(CliError::Usage(
            "--method applies only to the runs family".into(),
        ));
    }
    let smallest = match args.family {
        TableFamily::Runs => 2,
        TableFamily::Eulerian | TableFamily::Stirling | TableFamily::Tangent => 1,
        TableFamily::Derivcoef => 0,
    };
    if args.n_max < smallest {
        return Err(CliError::Usage(format!(
            "--n-max must be at least {smallest} for this family"
        )));
    }
    let table = build_table(&args)?;
    print!("{}", format::render_table(&table, args.format));
    Ok(ExitCode::SUCCESS)
}

fn build_table(args: &TableArgs) -> Result<TriangularTable, CliError> {
    let n_max = args.n_max;
    match args.family {
        TableFamily::Runs => build_runs_table(
            args.method.unwrap_or(RunsMethod::Recurrence),
            n_max,
            args.allow_large_oracle,
        ),
        TableFamily::Eulerian => {
            let mut rows = Vec::with_capacity(n_max);
            for n in 1..=n_max {
                let poly = sequences::eulerian_poly_frobenius(n)?;
                rows.push((1..=n).map(|k| poly.coeff(k)).collect());
            }
            Ok(TriangularTable::new(1, 1, rows))
        }
        TableFamily::Stirling => {
            let mut rows = Vec::with_capacity(n_max);
            for n in 1..=n_max {
                let row: Result<Vec<BigInt>, Error> =
                    (1..=n).map(|k| sequences::stirling2(n, k)).collect();
                rows.push(row?);
            }
            Ok(TriangularTable::new(1, 1, rows))
        }
        TableFamily::Tangent => Ok(sequences::tangent_numbers(n_max)),
        TableFamily::Derivcoef => Ok(derivative_polys(n_max).p_table().clone()),
    }
}

fn build_runs_table(
    method: RunsMethod,
    n_max: usize,
    allow_large: bool,
) -> Result<TriangularTable, CliError> {
    match method {
        RunsMethod::Recurrence => Ok(r_table_recurrence(n_max).table().clone()),
        RunsMethod::Theorem => {
            let family = derivative_polys(n_max);
            let mut rows = Vec::with_capacity(n_max - 1);
            for n in 2..=n_max {
                rows.push(runs::r_poly_theorem_with(&family, n)?.coefficient_row());
            }
            Ok(TriangularTable::new(2, 1, rows))
        }
        RunsMethod::Explicit => {
            let family = derivative_polys(n_max);
            let mut rows = Vec::with_capacity(n_max - 1);
            for n in 2..=n_max {
                let row: Result<Vec<BigInt>, Error> =
                    (1..n).map(|s| runs::r_explicit_with(&family, n, s)).collect();
                rows.push(row?);
            }
            Ok(TriangularTable::new(2, 1, rows))
        }
        RunsMethod::Stanley => {
            let mut rows = Vec::with_capacity(n_max - 1);
            for n in 2..=n_max {
                let row: Result<Vec<BigInt>, Error> =
                    (1..n).map(|k| runs::r_stanley(n, k)).collect();
                rows.push(row?);
            }
            Ok(TriangularTable::new(2, 1, rows))
        }
        RunsMethod::Oracle => {
            let cap = resolved_cap(allow_large)?;
            Ok(oracle::runs_triangle_oracle_capped(n_max, cap)?)
        }
    }
}

fn cmd_poly(args: PolyArgs) -> Result<ExitCode, CliError> {
    let require = |smallest: usize| -> Result<(), CliError> {
        if args.n < smallest {
            Err(CliError::Usage(format!(
                "--n must be at least {smallest} for this family"
            )))
        } else {
            Ok(())
        }
    };
    let (poly, var) = match args.family {
        PolyFamily::Runs => {
            require(1)?;
            (r_poly_recurrence(args.n).poly, "x")
        }
        PolyFamily::Derivative => (derivative_polys(args.n).poly(args.n).clone(), "x"),
        PolyFamily::Companion => {
            require(1)?;
            (derivpoly::a_poly(args.n)?, "y")
        }
        PolyFamily::Eulerian => {
            require(1)?;
            (sequences::eulerian_poly_frobenius(args.n)?, "x")
        }
    };
    print!("{}", format::render_poly(&poly, var, args.format));
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode, CliError> {
    if args.list_checks {
        for name in altruns::check_names() {
            println!("{name}");
        }
        return Ok(ExitCode::SUCCESS);
    }
    if !matches!(args.format, Format::Json | Format::Pretty) {
        return Err(CliError::Usage(
            "verify reports support --format json or pretty".into(),
        ));
    }
    let config = VerifyConfig {
        n_max: args.n_max,
        oracle_max: args.oracle_max,
        oracle_cap: resolved_cap(args.allow_large_oracle)?,
        checks: args.checks.clone(),
        fault: args.inject_fault,
    };
    let report = verify_all(&config)?;
    print!("{}", format::render_report(&report, args.format));
    Ok(if report.overall {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
