use thiserror::Error;

/// Failures in reduced-word handling.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum FreeAlgError {
    #[error("index {index} is not a node of a rank {rank} diagram")]
    BadIndex { index: usize, rank: usize },
    #[error("word has length {got}, the longest element has length {expected}")]
    WrongLength { got: usize, expected: usize },
    #[error("word is not reduced: letter {position} sends its simple root to a negative root")]
    NotReduced { position: usize },
}
