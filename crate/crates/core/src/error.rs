use std::io;
use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum RepairError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Instance too large for an exhaustive method.
    #[error("capacity exceeded: {what} is {actual}, limit is {limit}{}", hint.map(|h| format!(" ({h})")).unwrap_or_default())]
    Capacity {
        what: &'static str,
        actual: usize,
        limit: usize,
        hint: Option<&'static str>,
    },

    #[error("{context}: {path}: {source}")]
    Io {
        context: &'static str,
        path: PathBuf,
        #[source]
        source: io::Error,
    },

    #[error("internal error: {0}")]
    Internal(String),
}

impl RepairError {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        RepairError::Parse {
            line,
            message: message.into(),
        }
    }

    pub(crate) fn invalid(message: impl Into<String>) -> Self {
        RepairError::InvalidArgument(message.into())
    }
}

pub type Result<T, E = RepairError> = std::result::Result<T, E>;
