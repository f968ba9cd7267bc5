//! Crate-wide error type.

use std::path::PathBuf;
use thiserror::Error;

/// Errors produced by any stage of the pipeline.
#[derive(Debug, Error)]
pub enum Error {
    /// Filesystem failure, tagged with the offending path.
    #[error("i/o failure on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    /// Malformed or truncated image data. `offset` is the byte position at
    /// which decoding gave up.
    #[error("{origin}: parse error at byte {offset}: {reason}")]
    Parse {
        origin: String,
        offset: usize,
        reason: String,
    },

    /// A value fell outside its documented domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// Shapes or element counts do not line up.
    #[error("structural error: {0}")]
    Structure(String),

    /// A state was expected to be |0⟩ or |1⟩ but is not within tolerance.
    #[error("state is not a computational basis state (z-projection {projection})")]
    NotCbs { projection: f64 },

    /// A measurement outcome with zero probability was requested.
    #[error("measurement outcome {label} has zero probability")]
    ImpossibleOutcome { label: u8 },

    /// The IQS feedback loop never reached its set-point.
    #[error("qubit preparation did not reach the set-point within {max_iters} iterations")]
    PreparationFailure { max_iters: usize },

    /// Invalid pipeline configuration (bad flag combination or value).
    #[error("invalid configuration: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
