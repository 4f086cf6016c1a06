use thiserror::Error;

use crate::polyring::IntPoly;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("edge {edge} out of range (graph has {edges} edges)")]
    EdgeOutOfRange { edge: usize, edges: usize },

    #[error("vertex {vertex} out of range (graph has {vertices} vertices)")]
    VertexOutOfRange { vertex: usize, vertices: usize },

    #[error("invalid input: {0}")]
    Input(String),

    /// Enumeration would exceed a configured limit.
    #[error("{what} exceeds the configured cap of {cap}")]
    Resource { what: String, cap: u64 },

    #[error("polynomial division is not exact (remainder {remainder})")]
    Inexact { remainder: IntPoly },

    #[error("embedding error: {0}")]
    Embedding(String),

    #[error("contract violation: {0}")]
    Contract(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
}
