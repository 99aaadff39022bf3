use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Invalid family parameters, index ranges, or length mismatches.
    #[error("parameter error: {0}")]
    Parameter(String),
    /// A mathematical precondition failed (non-unit constant term, vanishing
    /// denominator, violated asymptotic hypothesis).
    #[error("domain error: {0}")]
    Domain(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown check id: {0}")]
    UnknownCheck(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
