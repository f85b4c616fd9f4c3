use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// Invalid arguments or input files; nothing was computed.
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Computation(String),
    /// A check ran to completion and failed; `output` is the full report.
    #[error("{failed} check(s) failed")]
    Mismatch { failed: usize, output: String },
}

#[derive(Serialize)]
struct ErrorJson<'a> {
    error: &'a str,
    message: String,
}

impl CliError {
    pub fn usage(e: impl ToString) -> Self {
        CliError::Usage(e.to_string())
    }

    pub fn computation(e: impl ToString) -> Self {
        CliError::Computation(e.to_string())
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Computation(_) => 3,
            CliError::Mismatch { .. } => 4,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::Computation(_) => "computation",
            CliError::Mismatch { .. } => "mismatch",
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&ErrorJson { error: self.kind(), message: self.to_string() }).expect("error JSON serializes")
    }
}
