//! Error type shared across the crate.

use std::path::PathBuf;

/// All failure modes of the library.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Tensor or image geometry does not match what an operation requires.
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    /// An argument is outside its valid range.
    #[error("invalid parameter: {0}")]
    Parameter(String),
    /// A computation produced or received non-finite values.
    #[error("numeric failure: {0}")]
    Numeric(String),
    /// An operation was called before the state it depends on exists.
    #[error("invalid state: {0}")]
    State(String),
    /// Dataset ingestion failed (bad manifest row, undecodable image, ...).
    #[error("data error: {0}")]
    Data(String),
    /// A checkpoint file is not in the expected format.
    #[error("checkpoint format error: {0}")]
    Format(String),
    /// A checkpoint was written by an incompatible version.
    #[error("checkpoint version mismatch: file has version {found}, expected {expected}")]
    Version { expected: u16, found: u16 },
    /// A checkpoint is structurally valid but incomplete or inconsistent.
    #[error("checkpoint corrupted: {0}")]
    Corrupt(String),
    /// An I/O failure, annotated with the path involved.
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io { path: path.into(), source }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
