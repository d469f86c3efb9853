use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed structure data: duplicate tokens, non-closed subgroups, mismatched sources.
    #[error("structural error: {0}")]
    Structural(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    /// The instance lacks a capability the operation needs (e.g. an inverse antipode).
    #[error("capability error: {0}")]
    Capability(String),
    #[error("no solution: {0}")]
    NoSolution(String),
    /// A bounded search ran out before deciding.
    #[error("inconclusive: {0}")]
    Inconclusive(String),
    #[error("rejected input: {0}")]
    Rejected(String),
    #[error("outside declared window: {0}")]
    Window(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
