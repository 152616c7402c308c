use thiserror::Error;

use crate::partition::Cell;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition `{input}`: {reason}")]
    Parse { input: String, reason: String },

    #[error("cell {0} is not in the partition")]
    CellOutside(Cell),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("invalid north/east pattern: {0}")]
    InvalidPattern(String),

    #[error("invalid departure words: {0}")]
    InvalidWords(String),

    #[error("invalid diagonal sequence: {0}")]
    InvalidSequence(String),

    #[error("{partition} is not a {m}-core")]
    NotACore { partition: String, m: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("factor (1 - q^{q} t^{t}) has no q-degree and cannot be expanded")]
    ConstantFactor { q: usize, t: usize },

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),
}

pub type Result<T> = std::result::Result<T, Error>;
