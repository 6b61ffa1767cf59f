use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("dimension error: {0}")]
    Dimension(String),
    #[error("unknown variable {0:?}")]
    UnknownVariable(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("inexact division")]
    InexactDivision,
    #[error("parse error: {0}")]
    Parse(String),
}
