use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed textual input; `pos` is a byte offset into the input.
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    /// Input parsed but lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("degree bound {bound} is smaller than required degree {needed}")]
    DegreeBound { needed: usize, bound: usize },

    #[error("polynomial is not divisible by {0}")]
    NotDivisible(String),

    /// An internal consistency check failed.
    #[error("inconsistent computation: {0}")]
    Inconsistent(String),
}

impl Error {
    pub fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse { pos, msg: msg.into() }
    }

    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
