//! Argument handling and the exit-code contract.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use cartan_core::catalog::{load_custom_path, Family, LoadOptions};
use cartan_core::solver::{rank_and_cartan_from_seed, SearchBudget, Seed, SolverError};
use cartan_core::LieAlgebra;
use clap::{error::ErrorKind, Parser, ValueEnum};

use crate::report::{RunReport, Status};
use crate::seed::parse_seed;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID_SEED: i32 = 2;
pub const EXIT_UNDECIDED: i32 = 3;
pub const EXIT_USAGE: i32 = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum AlgebraName {
    So,
    Sl,
    G2,
    #[value(name = "split-g2")]
    SplitG2,
    #[value(name = "so44-so22")]
    So44So22,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// Rank and Cartan subalgebra of a real matrix Lie algebra.
#[derive(Debug, Parser)]
#[command(name = "cartan", version)]
pub struct Args {
    /// Built-in algebra.
    #[arg(long, value_enum, conflicts_with = "algebra_file", required_unless_present = "algebra_file")]
    pub algebra: Option<AlgebraName>,

    /// Matrix size for `so` and `sl`.
    #[arg(long, value_name = "T")]
    pub param: Option<usize>,

    /// JSON file describing a custom algebra.
    #[arg(long, value_name = "PATH")]
    pub algebra_file: Option<PathBuf>,

    /// Seed elements, e.g. "b1+5*b5" or "b1; b10". Empty by default.
    #[arg(long, default_value = "", allow_hyphen_values = true)]
    pub seed: String,

    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Witness search level; 0 disables the box search.
    #[arg(long, default_value_t = 2)]
    pub budget: u32,

    /// Skip the bracket-closure check on --algebra-file input.
    #[arg(long)]
    pub skip_closure_check: bool,

    /// Only print the result lines.
    #[arg(long)]
    pub quiet: bool,
}

/// Runs the CLI and returns its exit code. Never panics on bad input.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = match Args::try_parse_from(argv) {
        Ok(args) => args,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_USAGE
                }
            };
            return code;
        }
    };
    match execute(&args) {
        Ok((report, code)) => {
            let text = match args.format {
                Format::Text => report.to_text(args.quiet),
                Format::Json => report.to_json() + "\n",
            };
            let _ = out.write_all(text.as_bytes());
            if code != EXIT_OK && !args.quiet {
                if let Some(d) = &report.diagnostic {
                    let _ = writeln!(err, "error: {d}");
                }
            }
            code
        }
        Err(message) => {
            let _ = writeln!(err, "error: {message}");
            EXIT_USAGE
        }
    }
}

fn load_algebra(args: &Args) -> Result<LieAlgebra, String> {
    if let Some(path) = &args.algebra_file {
        if args.param.is_some() {
            return Err("--param only applies to --algebra so|sl".into());
        }
        let options = LoadOptions {
            check_closure: !args.skip_closure_check,
        };
        return load_custom_path(path, options).map_err(|e| e.to_string());
    }
    if args.skip_closure_check {
        return Err("--skip-closure-check only applies to --algebra-file".into());
    }
    let name = args.algebra.expect("clap requires --algebra or --algebra-file");
    let family = match (name, args.param) {
        (AlgebraName::So, Some(t)) => Family::So(t),
        (AlgebraName::Sl, Some(t)) => Family::Sl(t),
        (AlgebraName::So | AlgebraName::Sl, None) => {
            return Err("--param is required for so and sl".into())
        }
        (_, Some(_)) => return Err("--param only applies to --algebra so|sl".into()),
        (AlgebraName::G2, None) => Family::G2,
        (AlgebraName::SplitG2, None) => Family::SplitG2,
        (AlgebraName::So44So22, None) => Family::So44So22,
    };
    family.build().map_err(|e| e.to_string())
}

/// Usage, parse and file problems are `Err`; everything the solver decides
/// comes back as a report with its exit code.
fn execute(args: &Args) -> Result<(RunReport, i32), String> {
    let alg = load_algebra(args)?;
    let coords = parse_seed(&args.seed, alg.dim()).map_err(|e| e.to_string())?;
    let budget = SearchBudget::level(args.budget);

    let start = Instant::now();
    let seed = Seed::from_coords(&alg, coords.clone());
    let outcome = rank_and_cartan_from_seed(&alg, &seed, &budget);
    let elapsed_ms = start.elapsed().as_millis() as u64;

    Ok(match outcome {
        Ok(result) => (RunReport::success(&alg, &coords, &result, elapsed_ms), EXIT_OK),
        Err(e @ SolverError::MaximalityUndecided { .. }) => (
            RunReport::failure(&alg, &coords, Status::Undecided, e.to_string(), elapsed_ms),
            EXIT_UNDECIDED,
        ),
        Err(e) => (
            RunReport::failure(&alg, &coords, Status::InvalidSeed, e.to_string(), elapsed_ms),
            EXIT_INVALID_SEED,
        ),
    })
}
