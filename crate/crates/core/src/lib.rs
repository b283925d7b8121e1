//! Exact symmetric functions over the rationals, the lambda-ring operations on
//! `Λ[[t]]`, and the symplectic character computations built on them.

pub mod charseries;
pub mod cli;
pub mod error;
pub mod hall_ops;
pub mod lambda_ring;
pub mod oracle;
pub mod partitions;
pub mod symfunc;
pub mod torelli_chars;

pub use error::{Error, Result};
