use thiserror::Error;

use crate::partitions::Partition;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// A generator or decomposition term has symmetric degree above the cap.
    #[error("symmetric degree {degree} exceeds cap {cap}")]
    CapViolation { degree: usize, cap: usize },

    #[error("t-degree {index} outside 0..={cap}")]
    OutOfRange { index: usize, cap: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid partition {0:?}: parts must be positive integers")]
    InvalidPartition(String),

    /// The operation would need infinitely many terms under the current caps.
    #[error("divergent: {0}")]
    Divergent(String),

    #[error("multiplicity of <{partition}> in degree {degree} is {value}, expected a nonnegative integer")]
    NotACharacter {
        partition: Partition,
        degree: usize,
        value: String,
    },

    #[error("oracle: {0}")]
    Oracle(String),

    #[error("cache: {0}")]
    Cache(String),

    #[error("parse error: {0}")]
    Parse(String),
}
