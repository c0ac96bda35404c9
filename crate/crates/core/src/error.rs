use thiserror::Error;

use crate::scheme::IndexPair;

/// Everything that can go wrong while building, parsing or evaluating schemes.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension {0} is even: C(n,2) pairs cannot be spread evenly over n axes")]
    EvenDimension(usize),
    #[error("dimension {0} is too small (need n >= 3)")]
    TooSmall(usize),
    #[error("dimension {n} is too large for scheme enumeration (max {max})")]
    TooLarge { n: usize, max: usize },
    #[error("axis {axis} out of range 1..={n}")]
    AxisOutOfRange { axis: usize, n: usize },
    #[error("index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("pair {pair} is assigned to both axis {first} and axis {second}")]
    DuplicatePair {
        pair: IndexPair,
        first: usize,
        second: usize,
    },
    #[error("pair {0} is not assigned to any axis")]
    MissingPair(IndexPair),
    #[error("pair {pair} contains its own axis {axis}")]
    SelfPair { pair: IndexPair, axis: usize },
    #[error("axis {axis}: {reason}")]
    BadMatching { axis: usize, reason: String },
    #[error("expected {expected} axes, found {found}")]
    AxisCount { expected: usize, found: usize },
    #[error("axis {axis} collides with pair {pair}")]
    AxisCollision { pair: IndexPair, axis: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("structure tensor disagrees with scheme at pair {pair} under axis {axis}")]
    SchemeTensorMismatch { pair: IndexPair, axis: usize },
    #[error("invalid checkpoint: {0}")]
    BadCheckpoint(String),
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
