//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed input text (edge list or JSON). `line` is 1-based.
    #[error("parse error at line {line}: {msg}")]
    Syntax { line: usize, msg: String },

    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: usize },

    #[error("duplicate edge {u} {v}")]
    DuplicateEdge { u: usize, v: usize },

    #[error("vertex index {index} out of range for n = {n}")]
    VertexOutOfRange { index: usize, n: usize },

    /// The graph is disconnected; `u` and `v` lie in different components.
    #[error("graph is disconnected: no path between {u} and {v}")]
    Disconnected { u: usize, v: usize },

    #[error("graph has {vertices} vertices but {edges} edges; not unicyclic")]
    NotUnicyclic { vertices: usize, edges: usize },

    #[error("graph has {vertices} vertices but {edges} edges; not a tree")]
    NotATree { vertices: usize, edges: usize },

    /// The graph is exactly a cycle, which the requested construction rejects.
    #[error("graph is a bare cycle; use the cycle closed form instead")]
    BareCycle,

    #[error("graph has {n} vertices but the operation requires at least {required}")]
    TooFewVertices { n: usize, required: usize },

    /// Exact search refused: the graph exceeds the configured solver cap.
    #[error("graph has {n} vertices, over the solver cap of {cap}")]
    OverCap { n: usize, cap: usize },

    /// Doubly resolving sets need at least two members by definition.
    #[error("vertex set has {size} members but at least 2 are required")]
    SetTooSmall { size: usize },

    #[error("vertex set is empty")]
    EmptySet,

    #[error("duplicate vertex {vertex} in set")]
    DuplicateVertex { vertex: usize },

    /// A vertex set built for one graph order was used with another.
    #[error("vertex set context is n = {set_n} but the matrix has n = {matrix_n}")]
    ContextMismatch { set_n: usize, matrix_n: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// The descriptor has no closed-form psi at these parameters.
    #[error("no closed form: {0}")]
    NoClosedForm(String),
}
