use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("not found: {0}")]
    NotFound(String),
    #[error("parse error at byte {offset}: {msg}")]
    Parse { offset: usize, msg: String },
    /// Instance exceeds a hard size limit of an exact algorithm.
    #[error("unsupported: {0}")]
    Unsupported(String),
    /// A search ran out of its node-expansion budget before deciding.
    #[error("budget exceeded after {expanded} expansions: {what}")]
    Budget { what: String, expanded: u64 },
    #[error("invariant violation: {0}")]
    InvariantViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidInput(msg.into()))
}
