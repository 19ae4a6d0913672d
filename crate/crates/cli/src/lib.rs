//! Problem files, reports and commands behind the `logfol` binary.

pub mod commands;
pub mod error;
pub mod report;
pub mod spec;

pub use commands::{cmd_chern, cmd_count_complement, cmd_indices, cmd_verify, sigma_check, sigma_note};
pub use error::{CliError, ErrorCode};
pub use report::{PointEntry, Report};
pub use spec::{parse_point, parse_spec, ProblemSpec, SpecDocument};
