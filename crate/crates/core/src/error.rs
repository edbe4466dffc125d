use thiserror::Error;

/// Errors shared by the kernel, monoid and invariant layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected length {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("malformed system: {0}")]
    MalformedSystem(String),

    #[error("fiber is infinite: the homogeneous system has a nonzero solution")]
    InfiniteFiber,

    #[error("{0} is not an element of the monoid")]
    NotAnElement(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid group: {0}")]
    InvalidGroup(String),

    #[error("set of factorizations mixes fibers of different elements")]
    MixedFiber,

    #[error("kernel completion exceeded the configured step limit")]
    StepLimitExceeded,
}

pub type Result<T> = std::result::Result<T, Error>;
