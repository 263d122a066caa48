use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum OeisError {
    #[error("invalid OEIS identifier {0:?}: expected 'A' followed by six digits")]
    InvalidIdentifier(String),
    #[error("b-file line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("{id} unavailable: {reason}")]
    Unavailable { id: String, reason: String },
    #[error("cache error at {path}: {source}")]
    Cache {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("need at least {needed} terms to match, got {got}")]
    TooFewTerms { needed: usize, got: usize },
    #[error("invalid match options: {0}")]
    InvalidOptions(String),
}

pub type Result<T, E = OeisError> = std::result::Result<T, E>;
