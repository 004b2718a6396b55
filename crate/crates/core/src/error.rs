//! Error type shared across the crate.

use thiserror::Error;

/// Errors produced by algebra, series, and space operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: n = {left} vs n = {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("scalar kind mismatch: exact and approximate values cannot be combined")]
    ScalarKindMismatch,

    #[error("unsupported dimension n = {n}: {reason}")]
    UnsupportedDimension { n: usize, reason: &'static str },

    #[error("index {index} out of range: {reason}")]
    IndexOutOfRange { index: usize, reason: &'static str },

    #[error("degree cap exceeded: result degree {degree} > cap {cap}")]
    DegreeCapExceeded { degree: usize, cap: usize },

    #[error("constant term is not invertible: {reason}")]
    NonInvertible { reason: &'static str },

    #[error("input outside the operation's domain: {0}")]
    Domain(String),

    #[error("malformed input: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
