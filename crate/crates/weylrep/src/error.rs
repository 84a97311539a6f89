use cyclotomic::FieldError;
use thiserror::Error;

use crate::AlgType;

/// Failures in index handling and vector serialization.
#[derive(Debug, Error)]
pub enum WeylError {
    #[error("rank {n} is below the minimum {min} for type {typ}")]
    RankTooSmall { typ: AlgType, n: usize, min: usize },
    #[error("index set of {0} has more than 2^63 points")]
    TooLarge(String),
    #[error("multi-index does not conform to the shape: {0}")]
    NonConforming(String),
    #[error("unknown algebra type {0:?} (expected A, B, C or D)")]
    UnknownType(String),
    #[error("malformed sparse vector: {0}")]
    Format(String),
    #[error(transparent)]
    Field(#[from] FieldError),
}
