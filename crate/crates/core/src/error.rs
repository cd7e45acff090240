use std::path::PathBuf;

use thiserror::Error;

/// Errors produced anywhere in the toolkit.
///
/// Variants fall into four families that the command-line front end maps to
/// exit codes: input/parse problems, invariant violations, metric failures,
/// and I/O.
#[derive(Debug, Error)]
pub enum Error {
    #[error("time series is empty")]
    EmptySeries,
    #[error("non-finite sample at index {index}")]
    NonFiniteSample { index: usize },
    #[error("brute-force DTW limited to lengths <= {limit}, got {n}x{m}")]
    SizeLimitExceeded { n: usize, m: usize, limit: usize },
    #[error("no input series supplied")]
    EmptyInputSet,

    #[error("keypoint {0} is not valid in this frame")]
    Missing(&'static str),
    #[error("segment {from}->{to} has zero length")]
    DegenerateSegment { from: &'static str, to: &'static str },
    #[error("zero-length vector")]
    ZeroVector,
    #[error("performer {performer}: no frame yields a valid {feature}")]
    NoValidFrames { performer: String, feature: String },

    #[error("need at least 2 performers, got {0}")]
    TooFewPerformers(usize),
    #[error("unknown performer {0:?}")]
    UnknownPerformer(String),
    #[error("every (frame, pair) sample was skipped for {0}")]
    NoValidSamples(String),
    #[error("group-mean trajectory is flat (amplitude {amplitude:e})")]
    FlatTrajectory { amplitude: f64 },
    #[error("trajectory lengths differ: {expected} vs {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("scene kind is {found}, expected {expected}")]
    KindMismatch { expected: String, found: String },

    #[error("invalid synth config: {0}")]
    InvalidConfig(String),
    #[error("time shift {shift} must be smaller than frame count {frames}")]
    ShiftTooLarge { shift: f64, frames: usize },

    #[error("{path}: parse error: {message}")]
    Parse { path: String, message: String },
    #[error("{path}: schema error: {message}")]
    Schema { path: String, message: String },
    #[error("{path}: validation error: {message}")]
    Validation { path: String, message: String },
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    pub(crate) fn schema(path: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Schema {
            path: path.into(),
            message: message.into(),
        }
    }

    pub(crate) fn validation(path: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Validation {
            path: path.into(),
            message: message.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
