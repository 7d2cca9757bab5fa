use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum LksError {
    #[error("vertex count {0} exceeds the supported maximum of {1}")]
    TooManyVertices(usize, usize),

    #[error("vertex {0} out of range for a graph on {1} vertices")]
    VertexOutOfRange(usize, usize),

    #[error("enumeration cap exceeded: {0}")]
    CapExceeded(String),

    #[error("invalid tree: {0}")]
    InvalidTree(String),

    #[error("invalid path: {0}")]
    InvalidPath(String),

    #[error("invalid embedding operation: {0}")]
    InvalidEmbedding(String),

    #[error("graph6 parse error: {0}")]
    Graph6(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("degree hypothesis does not hold for the given (graph, k)")]
    HypothesisNotMet,

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}
