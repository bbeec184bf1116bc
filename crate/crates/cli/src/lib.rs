//! Spec-file ingestion, suite orchestration, bundled fixtures and reporting
//! for the `skewverify` command.

pub mod fixtures;
pub mod render;
pub mod spec;
pub mod suite;

pub use spec::{parse_spec, parse_spec_str, BialgebraSpec};
pub use suite::{run_suite, Fault, Format, SuiteConfig, SuiteId, SuiteRun};

pub const EXIT_OK: i32 = 0;
pub const EXIT_AXIOM_FAILURE: i32 = 1;
pub const EXIT_INPUT_ERROR: i32 = 2;
pub const EXIT_INCONSISTENT: i32 = 3;

/// Errors in the input, all mapped to exit code 2.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("parse error at line {line}, column {column}: {msg}")]
    Parse { line: usize, column: usize, msg: String },
    #[error("invalid spec: {field}: {msg}")]
    Validation { field: String, msg: String },
    #[error("{0}")]
    Io(String),
    #[error("unknown fixture {0:?}; see `skewverify fixtures list`")]
    UnknownFixture(String),
    #[error("{0}")]
    Usage(String),
}
