use detloci_algebra::AlgebraError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("invalid graph: {0}")]
    Invalid(String),
    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),
    #[error("unknown edge {0:?}")]
    UnknownEdge(String),
    #[error("invalid rotation system: {0}")]
    Rotation(String),
    #[error("graph {0:?} carries no rotation system")]
    MissingRotation(String),
    #[error("momentum data: {0}")]
    Momentum(String),
    #[error("outside the supported class: {0}")]
    Certification(String),
    #[error("search too large: {0}")]
    Resource(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
