use detloci_algebra::AlgebraError;
use detloci_graph::GraphError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ClassError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("internal consistency error: {0}")]
    Internal(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}
