use std::fmt;

/// Errors surfaced by the command layer, split by exit code.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// Bad arguments or an unusable input polynomial. Exit code 1.
    #[error("{0}")]
    Usage(String),
    /// A computation failed (factorization, consistency). Exit code 2.
    #[error(transparent)]
    Compute(#[from] lehmer_core::Error),
    /// Output could not be rendered. Exit code 2.
    #[error("output: {0}")]
    Output(String),
}

impl CliError {
    pub fn usage(msg: impl fmt::Display) -> Self {
        CliError::Usage(msg.to_string())
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Compute(_) | CliError::Output(_) => 2,
        }
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Output(e.to_string())
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Output(e.to_string())
    }
}
