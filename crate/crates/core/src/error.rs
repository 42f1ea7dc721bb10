use thiserror::Error;

use crate::combinat::Word;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("word {0} is not reduced")]
    NotReduced(Word),

    #[error("invalid permutation {0:?}: one-line notation must be a bijection of [m]")]
    InvalidPermutation(Vec<usize>),

    #[error("invalid flag {values:?}: {reason}")]
    InvalidFlag { values: Vec<usize>, reason: String },

    #[error("letters and tableau entries must be positive integers")]
    ZeroLetter,

    #[error("factorization block {0} is not strictly increasing")]
    NotIncreasing(usize),

    #[error("tableau is not semistandard: {0}")]
    NotSemistandard(String),

    #[error("element is not of highest weight")]
    NotHighestWeight,

    #[error("crystal rank must be at least {required}, got {got}")]
    Rank { required: usize, got: usize },

    #[error("insertion tableaux did not grow by nested shapes (prefix {prefix})")]
    ShapeNesting { prefix: usize },

    #[error("sweep has {count} instances, above the limit of {limit}")]
    TooManyInstances { count: usize, limit: usize },

    #[error("{0}")]
    Malformed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
