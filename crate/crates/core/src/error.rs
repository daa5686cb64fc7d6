use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid rank {rank} for type {family} (minimum {min})")]
    InvalidRank { family: String, rank: usize, min: usize },

    #[error("index {index} out of range 1..={max} for {context}")]
    IndexOutOfRange { index: usize, max: usize, context: String },

    #[error("word {0:?} is not reduced")]
    NotReduced(Vec<usize>),

    #[error("sequence is not a permutation of the positive roots")]
    NotAPermutation,

    #[error("invalid orientation: {0}")]
    InvalidOrientation(String),

    #[error("invalid height function: {0}")]
    InvalidHeight(String),

    #[error("window [{lo}, {hi}] does not contain every height value")]
    WindowTooSmall { lo: i32, hi: i32 },

    #[error("{0} is not a positive root")]
    NotAPositiveRoot(String),

    #[error("({beta}, {gamma}) is not a minimal pair of {alpha}")]
    NotAMinimalPair { alpha: String, beta: String, gamma: String },

    #[error("operation requires {expected} type, got {got}")]
    WrongAffineType { expected: String, got: String },

    #[error("invalid quiver: {0}")]
    InvalidQuiver(String),

    #[error("cannot parse {what} from {input:?}")]
    Parse { what: &'static str, input: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn out_of_range(index: usize, max: usize, context: impl Into<String>) -> Error {
    Error::IndexOutOfRange {
        index,
        max,
        context: context.into(),
    }
}
