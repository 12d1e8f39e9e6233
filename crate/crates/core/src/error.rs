use thiserror::Error;

use crate::graph::Vertex;

/// Errors raised by the library API.
///
/// Outcomes that are part of an algorithm's normal answer (a rejected cycle,
/// an expansion witness, a pipeline miss) are values, not errors.
#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} is outside a graph with {n} vertices per side")]
    VertexOutOfRange { vertex: Vertex, n: usize },

    #[error("edge (Left {0}, Right {1}) is not present in the graph")]
    NotAnEdge(usize, usize),

    #[error("duplicate edge (Left {0}, Right {1})")]
    DuplicateEdge(usize, usize),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("graph too large for exhaustive search: {what} is {actual}, limit is {limit}")]
    TooLarge {
        what: &'static str,
        actual: usize,
        limit: usize,
    },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}
