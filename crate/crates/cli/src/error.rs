//! Process-level error classification: every failure maps to one of the
//! documented exit codes.

use std::fmt;

use rfano_core::Error as CoreError;

#[derive(Debug)]
pub enum CliError {
    /// exit 2: malformed files, invalid flags, out-of-range parameters
    BadInput(String),
    /// exit 3: a search budget ran out; a partial artifact was written
    Budget(String),
    /// exit 4: an internal consistency guarantee failed
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::BadInput(_) => 2,
            CliError::Budget(_) => 3,
            CliError::Internal(_) => 4,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::BadInput(m) => write!(f, "{m}"),
            CliError::Budget(m) => write!(f, "budget exhausted: {m}"),
            CliError::Internal(m) => write!(f, "internal error: {m}"),
        }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::BudgetExhausted { nodes } => {
                CliError::Budget(format!("search stopped after {nodes} nodes"))
            }
            CoreError::Internal(m) => CliError::Internal(m),
            other => CliError::BadInput(other.to_string()),
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
