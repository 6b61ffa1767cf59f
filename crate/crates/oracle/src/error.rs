use detloci_algebra::AlgebraError;
use detloci_graph::GraphError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum OracleError {
    #[error("enumeration needs {required} candidates but the budget is {budget}")]
    Resource { required: u128, budget: u64 },
    #[error("bad reduction mod {q}: {what}")]
    BadReduction { q: u64, what: String },
    #[error("domain error: {0}")]
    Domain(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}
