use thiserror::Error;

use crate::hedgehog::HedgehogViolation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("triple ({0}, {1}, {2}) is not strictly increasing")]
    UnsortedTriple(usize, usize, usize),

    #[error("rank {rank} out of range (there are {count} tuples)")]
    RankOutOfRange { rank: u64, count: u64 },

    #[error("invalid pair ({0}, {1})")]
    InvalidPair(usize, usize),

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("edge {0:?} does not have three distinct vertices")]
    DegenerateEdge([usize; 3]),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("hypergraph is not 1-degenerate (degeneracy {0})")]
    NotOneDegenerate(usize),

    #[error("hypergraph has {} isolated vertices (first: {})", .0.len(), .0[0])]
    IsolatedVertices(Vec<usize>),

    #[error("invalid hedgehog: {0}")]
    InvalidHedgehog(#[from] HedgehogViolation),

    #[error("graph has {actual} vertices, expected {expected}")]
    SizeMismatch { expected: usize, actual: usize },

    #[error("materialising {triples} triples exceeds the budget of {budget}")]
    BudgetExceeded { triples: u64, budget: u64 },

    #[error("exhaustive search over 2^{triples} colourings is too large")]
    TooLargeForExhaustion { triples: u64 },

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse { line, message: message.into() }
    }
}
