use thiserror::Error;

use crate::complex::VertexId;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty complex")]
    EmptyComplex,

    #[error("invalid simplex: {0}")]
    InvalidSimplex(String),

    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),

    #[error("simplex {0:?} is not a face of the complex")]
    NotAFace(Vec<VertexId>),

    #[error("k = {k} out of range (valid: {min}..={max})")]
    OutOfRange { k: isize, min: isize, max: isize },

    #[error("vertices must be distinct: {0:?}")]
    NonDistinctVertices(Vec<VertexId>),

    #[error("cone apex {0} already appears in the chain")]
    ApexInChain(VertexId),

    #[error("chain degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: isize, found: isize },

    #[error("not a graph: {0}")]
    NotAGraph(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("general position violated: {0}")]
    Degenerate(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("not a cycle: {0}")]
    NotACycle(String),

    #[error("not an embedding: {0}")]
    NotAnEmbedding(String),

    #[error("triple-intersection bound violated by sets {triple:?}: |S_i ∩ S_j ∩ S_k| = {size} > {bound}")]
    TripleBoundViolated {
        triple: [usize; 3],
        size: usize,
        bound: u64,
    },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
