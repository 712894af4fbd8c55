use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("size mismatch: expected n = {expected}, found n = {found}")]
    SizeMismatch { expected: usize, found: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid inversion set: {0}")]
    InvalidInversionSet(String),

    #[error("position {position} is not a descent of {permutation}")]
    NotADescent {
        permutation: String,
        position: usize,
    },

    #[error("{0} is not join-irreducible")]
    NotJoinIrreducible(String),

    #[error("invalid arc: {0}")]
    InvalidArc(String),

    #[error("arcs {first} and {second} are incompatible: {conflict}")]
    IncompatibleArcs {
        first: String,
        second: String,
        conflict: String,
    },

    #[error(
        "arc set is not closed under subarcs: {missing} is a subarc of {member} but is absent"
    )]
    NotSubarcClosed { member: String, missing: String },

    #[error("invalid congruence: {0}")]
    InvalidCongruence(String),

    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("n = {n} exceeds the limit {limit}")]
    LimitExceeded { n: usize, limit: usize },

    #[error("cross-check failed: {0}")]
    CrossCheck(String),
}

impl Error {
    pub(crate) fn parse(offset: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            offset,
            message: message.into(),
        }
    }
}
