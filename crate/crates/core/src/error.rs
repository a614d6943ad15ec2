use thiserror::Error;

/// Errors produced by parsing, the reductions and the decision procedure.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph6 parse error at byte {offset}: {msg}")]
    Graph6 { offset: usize, msg: String },

    #[error("edge list parse error at line {line}: {msg}")]
    EdgeList { line: usize, msg: String },

    #[error("coloring parse error at line {line}: {msg}")]
    Coloring { line: usize, msg: String },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("brute force refused: n = {n} exceeds threshold {threshold}")]
    Refused { n: usize, threshold: usize },

    #[error("not an automorphism: {0}")]
    NotAutomorphism(String),

    #[error("cycle case: {0}")]
    CycleCase(String),

    /// A certificate failed re-verification or a proven invariant was violated.
    #[error("internal consistency error: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
