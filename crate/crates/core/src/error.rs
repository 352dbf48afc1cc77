use thiserror::Error;

use crate::report::Witness;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    /// Input was well-formed but failed a mathematical precondition.
    #[error("rejected: {reason} ({witness})")]
    Rejected { reason: String, witness: Witness },
    /// A computed result contradicted an identity the construction guarantees.
    #[error("internal consistency failure: {0}")]
    Consistency(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

impl Error {
    pub(crate) fn rejected(reason: impl Into<String>, witness: Witness) -> Self {
        Error::Rejected {
            reason: reason.into(),
            witness,
        }
    }
}
