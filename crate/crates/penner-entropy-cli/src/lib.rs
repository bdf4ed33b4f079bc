//! IO companion for `penner-entropy`: the problem-spec file format, JSON
//! report schemas, text rendering, and the randomized self-verification
//! suite behind `penner-entropy verify`.

pub mod numfmt;
pub mod render;
pub mod report;
pub mod schema;
pub mod verify;

use std::fmt;

/// Error categories mapped to process exit codes: usage errors exit 2,
/// everything else exits 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    /// Malformed JSON.
    Parse(String),
    /// Well-formed JSON violating the spec-file schema.
    Schema(String),
    /// Valid input describing an invalid or unsupported problem.
    Domain(String),
    /// Command-line misuse detected after argument parsing.
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse(msg) => write!(f, "parse error: {msg}"),
            CliError::Schema(msg) => write!(f, "schema error: {msg}"),
            CliError::Domain(msg) => write!(f, "{msg}"),
            CliError::Usage(msg) => write!(f, "usage error: {msg}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<penner_entropy::Error> for CliError {
    fn from(err: penner_entropy::Error) -> Self {
        CliError::Domain(err.to_string())
    }
}
