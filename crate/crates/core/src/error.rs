use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("edge ({u}, {v}) has an endpoint outside 0..{order}")]
    EndpointOutOfRange { u: usize, v: usize, order: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),

    #[error("operation needs a non-empty list of graphs")]
    EmptyList,

    #[error("infeasible parameters: {0}")]
    Infeasible(String),

    #[error("search budget of {budget} node expansions exhausted")]
    BudgetExhausted { budget: u64 },

    #[error("power iteration did not converge after {iterations} iterations (residual {residual:e})")]
    NoConvergence { iterations: u64, residual: f64 },

    #[error("malformed partition: {0}")]
    MalformedPartition(String),

    #[error("matrix dimension {dim} exceeds the supported maximum {max}")]
    DimensionTooLarge { dim: usize, max: usize },

    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },

    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),

    #[error("graph6 parse error: {0}")]
    Graph6(String),

    #[error("edge list parse error: {0}")]
    EdgeList(String),
}

pub type Result<T> = std::result::Result<T, Error>;
