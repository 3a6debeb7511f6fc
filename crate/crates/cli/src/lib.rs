//! Library side of the `cartan` command: seed expressions, reports and the
//! argument/exit-code handling used by `main`.

pub mod app;
pub mod report;
pub mod seed;

pub use app::{run, EXIT_INVALID_SEED, EXIT_OK, EXIT_UNDECIDED, EXIT_USAGE};
pub use report::{ReportElement, RunReport, Status};
pub use seed::{format_combination, parse_seed, SeedParseError};
