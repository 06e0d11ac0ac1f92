use thiserror::Error;

use crate::graph::VertexId;

/// Errors surfaced by the library API.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("vertex id {0} is not in the graph")]
    UnknownVertex(VertexId),
    #[error("vertex id {0} is out of range")]
    IdOutOfRange(VertexId),
    #[error("loop edge at vertex {0}")]
    LoopEdge(VertexId),
    #[error("edge {0}-{1} is not present")]
    MissingEdge(VertexId, VertexId),
    #[error("invalid attachment path: {0}")]
    InvalidAPath(String),
    #[error("expansion precondition violated: {0}")]
    ExpansionPrecondition(String),
    #[error("invalid disjoint instance: {0}")]
    InvalidDisjointInstance(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
