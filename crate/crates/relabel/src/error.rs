//! Crate-wide error type.

use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("line {line}: {msg}")]
    Malformed { line: usize, msg: String },

    #[error("empty dataset")]
    EmptyDataset,

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("label {label} out of range for {num_classes} classes")]
    LabelRange { label: usize, num_classes: usize },

    #[error("example {0} has an empty annotation pool")]
    EmptyPool(String),

    #[error("example {0} has no gold label")]
    MissingGold(String),

    #[error("unknown example id {0}")]
    UnknownId(String),

    #[error("unknown worker index {0} (bank size {1})")]
    UnknownWorker(usize, usize),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("non-finite loss at epoch {epoch}, batch {batch} (value {value}); aborting")]
    NonFiniteLoss {
        epoch: usize,
        batch: usize,
        value: f64,
    },

    #[error("budget plan violation: {0}")]
    Budget(String),

    #[error("invalid configuration:\n{}", .0.join("\n"))]
    Config(Vec<String>),
}

impl Error {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
