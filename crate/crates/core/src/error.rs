//! Error type shared by the library modules.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("{op} requires a semibasic form")]
    NotSemibasic { op: &'static str },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("weight ({0}, {1}) is not a root")]
    NotARoot(i64, i64),

    #[error("internal consistency check `{check}` failed: {detail}")]
    Inconsistent { check: &'static str, detail: String },

    #[error("no solution: {0}")]
    NoSolution(String),

    #[error("invalid path: {0}")]
    InvalidPath(String),
}

pub type Result<T> = std::result::Result<T, Error>;
