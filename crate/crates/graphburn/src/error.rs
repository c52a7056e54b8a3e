use crate::schedule::Schedule;

/// Crate-wide error type.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// The input text does not conform to the graph file format.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// The edge list violates a structural invariant (self-loop, duplicate
    /// edge, vertex id out of the declared range).
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    /// A vertex argument does not exist in the graph.
    #[error("vertex {vertex} out of range (n = {n})")]
    VertexOutOfRange { vertex: usize, n: usize },

    /// An operation that needs a connected graph was given a disconnected one.
    #[error("graph is disconnected: vertex {unreachable} is unreachable from {from}")]
    Disconnected { unreachable: usize, from: usize },

    /// An operation restricted to trees was given something else.
    #[error("input is not a tree: {0}")]
    NotATree(String),

    /// An operation restricted to binary trees was given something else.
    #[error("not a binary tree: vertex {vertex} has {children} children")]
    NotBinary { vertex: usize, children: usize },

    /// A caller-supplied argument is invalid for the operation.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A documented precondition of the operation does not hold.
    #[error("contract violation: {0}")]
    Contract(String),

    /// The exact search ran out of budget. Carries the best upper bound found
    /// by the greedy fallback, with its (verified) schedule.
    #[error("search budget exhausted; best known upper bound is {upper_bound}")]
    Budget {
        upper_bound: usize,
        schedule: Schedule,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
