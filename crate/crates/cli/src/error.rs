use std::path::PathBuf;

use thiserror::Error;

use crate::io::ParseError;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{}: {source}", path.display())]
    Parse { path: PathBuf, source: ParseError },
    #[error("{}: invalid certificate: {message}", path.display())]
    Certificate { path: PathBuf, message: String },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("{0}")]
    Budget(String),
}

/// Exit status of `verify` when the certificate does not check out.
pub const EXIT_REJECTED: i32 = 5;

impl CliError {
    /// Process exit status: 1 I/O, 2 parse, 3 precondition, 4 budget.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io { .. } => 1,
            CliError::Parse { .. } | CliError::Certificate { .. } => 2,
            CliError::Precondition(_) => 3,
            CliError::Budget(_) => 4,
        }
    }
}
