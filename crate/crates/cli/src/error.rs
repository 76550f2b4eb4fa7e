use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// Malformed input; `location` is a line number or a field path.
    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },
    #[error("invalid instance: {0}")]
    InvalidInstance(String),
    #[error("{0}")]
    Usage(String),
    #[error("cannot access {}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error(transparent)]
    Core(#[from] probecut::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    pub(crate) fn parse(location: impl Into<String>, message: impl Into<String>) -> Self {
        CliError::Parse {
            location: location.into(),
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
