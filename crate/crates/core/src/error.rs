use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("vertex {vertex} has non-positive weight")]
    NonPositiveWeight { vertex: usize },
    #[error("self-loop on vertex {vertex}")]
    SelfLoop { vertex: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("module test needs a nonempty vertex set")]
    EmptySet,
    #[error("graph has {n} vertices, above the limit of {limit} for exhaustive search")]
    LimitExceeded { n: usize, limit: usize },
    #[error("expected {expected} child weights, got {got}")]
    WeightCountMismatch { expected: usize, got: usize },
    #[error("node is a leaf; a quotient needs an internal node")]
    LeafQuotient,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("{instance} ({mode}): reported witness is not a clique of the claimed weight")]
    WitnessMismatch { instance: String, mode: String },
    #[error("tree text: {0}")]
    TreeSyntax(String),
}

pub type Result<T> = std::result::Result<T, Error>;
