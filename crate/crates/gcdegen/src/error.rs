//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid {what}: {detail}")]
    InvalidInput { what: &'static str, detail: String },

    #[error("{what} supports n <= {limit}, got n = {requested}")]
    BoundExceeded {
        what: &'static str,
        limit: usize,
        requested: usize,
    },

    #[error("enumeration limit of {limit} candidates exceeded")]
    EnumerationLimitExceeded { limit: u64 },

    #[error("index out of range: {0}")]
    OutOfRange(String),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("lemma hypothesis not met: {0}")]
    LemmaHypothesisNotMet(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
