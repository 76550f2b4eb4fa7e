//! Library side of the `probecut` command-line workbench: instance
//! documents, run reports and the command implementations.

pub mod commands;
pub mod crosscheck;
pub mod document;
pub mod error;
pub mod report;

pub use commands::{
    cmd_generate, cmd_reduce, cmd_solve, cmd_verify, cmd_verify_cut, parse_colouring, parse_sat, Algo,
    Construction, Family, GenerateParams, Problem, SolveOptions, Source,
};
pub use crosscheck::{cmd_crosscheck, CrosscheckOptions, CrosscheckSummary};
pub use document::{parse_instance, InstanceDocument};
pub use error::{CliError, Result};
pub use report::{Answer, ReportCertificate, RunReport};

/// Exit status when a crosscheck finds a disagreement.
pub const EXIT_MISMATCH: u8 = 3;
/// Exit status for usage, input, scale and solver errors.
pub const EXIT_ERROR: u8 = 2;
