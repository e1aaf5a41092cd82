use std::path::PathBuf;

use koenig_core::{Graph6Error, InvariantError};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("cannot read {path}: {source}")]
    Input {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),
    #[error("line {line}: {source}")]
    Malformed {
        line: usize,
        #[source]
        source: Graph6Error,
    },
    #[error("line {line}: {source}")]
    Unsupported {
        line: usize,
        #[source]
        source: InvariantError,
    },
    #[error("all {lines} non-blank input lines were malformed")]
    AllMalformed { lines: usize },
    #[error("checkpoint {path}: {reason}")]
    Checkpoint { path: PathBuf, reason: String },
    #[error("jobs must be at least 1")]
    NoWorkers,
    #[error("serialisation failed: {0}")]
    Json(#[from] serde_json::Error),
    #[error("CSV output failed: {0}")]
    Csv(#[from] csv::Error),
}
