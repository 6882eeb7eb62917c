use thiserror::Error;

use crate::algebra::Vars;

/// Errors raised by the algebra and verification routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable sets differ: {0} vs {1}")]
    VarMismatch(Vars, Vars),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("singular matrix")]
    Singular,
    /// A computed quantity contradicts the theory (for example a straightening
    /// coefficient that is not a polynomial in t).
    #[error("consistency failure: {0}")]
    Consistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}
