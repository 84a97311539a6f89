use thiserror::Error;
use weylrep::WeylError;

/// Failures while building or evaluating generator actions.
#[derive(Debug, Error)]
pub enum SchnizerError {
    #[error(transparent)]
    Weyl(#[from] WeylError),
    #[error("highest weight {0:?} has the wrong length or an entry outside [0, l)")]
    BadWeight(Vec<u32>),
    #[error("parameter tables have {got} entries, the index set has {expected}")]
    ParamShape { got: usize, expected: usize },
    #[error("field has root order {field}, the module needs {module}")]
    FieldMismatch { field: u32, module: u32 },
    #[error("unsupported configuration: {0}")]
    Unsupported(String),
    #[error("unknown generator name {0:?}")]
    BadGenerator(String),
}
