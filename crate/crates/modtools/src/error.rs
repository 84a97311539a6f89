use cyclotomic::FieldError;
use schnizer::SchnizerError;
use thiserror::Error;
use weylrep::WeylError;

/// Failures of the module-level analyses.
#[derive(Debug, Error)]
pub enum ModError {
    #[error("the module has {dim} basis vectors, above the exhaustive bound {bound}; use the within-submodule scope or raise the bound")]
    BoundExceeded { dim: u64, bound: u64 },
    #[error("the spanned submodule exceeds {limit} dimensions")]
    SpanTooLarge { limit: usize },
    #[error("no primitive vector reached within {bound} raising steps")]
    AscentTooLong { bound: usize },
    #[error("the seed vector is zero")]
    ZeroSeed,
    #[error("malformed basis dump: {0}")]
    Format(String),
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
    #[error("unknown backend {0:?} (expected exact or modp:P)")]
    UnknownBackend(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Schnizer(#[from] SchnizerError),
    #[error(transparent)]
    Weyl(#[from] WeylError),
    #[error(transparent)]
    Field(#[from] FieldError),
}
