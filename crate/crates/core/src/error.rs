use thiserror::Error;

/// Errors raised by graph construction, file parsing and the solvers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("undefined statistics: graph has no vertices")]
    UndefinedStatistics,

    #[error("{what} has {size} vertices, above the limit of {limit}")]
    LimitExceeded {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    #[error("graph has no edges")]
    Edgeless,

    #[error("decomposition has no bags")]
    NoBags,

    #[error("bag {node} holds element {element}, out of range 1..={max}")]
    ElementOutOfRange { node: usize, element: usize, max: usize },

    #[error("invalid decomposition: {0}")]
    InvalidDecomposition(String),

    #[error("invalid embedding: {0}")]
    InvalidEmbedding(String),

    #[error("invalid ordering: {0}")]
    InvalidOrdering(String),

    #[error("inequality requires max degree >= 2 (got {0})")]
    DegreeTooSmall(usize),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("unsupported family: {0}")]
    UnsupportedFamily(String),

    #[error("infeasible region: {0}")]
    Infeasible(String),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}
