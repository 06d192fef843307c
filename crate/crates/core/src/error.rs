use thiserror::Error;

use crate::graph::VertexId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("graph is disconnected")]
    DisconnectedGraph,
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("duplicate vertex {0}")]
    DuplicateVertex(VertexId),
    #[error("self-loop at vertex {0}")]
    SelfLoop(VertexId),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(VertexId, VertexId),
    #[error("graph of order {order} exceeds the cap of {cap}")]
    TooLarge { order: usize, cap: usize },

    #[error("negative weight at vertex {0}")]
    NegativeWeight(VertexId),
    #[error("no weight given for vertex {0}")]
    MissingWeight(VertexId),
    #[error("arithmetic overflow")]
    Overflow,
    #[error("provenance maps do not cover the product: {0}")]
    ProvenanceMismatch(String),

    #[error("expected {expected} branches, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("host has order {host} but branch has order {branch}")]
    OrderMismatch { host: usize, branch: usize },
    #[error("receptor {0} listed twice")]
    DuplicateReceptor(VertexId),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("branch is not a tree")]
    NotATree,
    #[error("invalid extended cycle: {0}")]
    InvalidExtendedCycle(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error: {0}")]
    Parse(String),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// True for errors caused by malformed input files or strings, as opposed
    /// to well-formed input that violates a mathematical precondition.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Parse(_)
                | Error::Json(_)
                | Error::Io(_)
                | Error::DuplicateVertex(_)
                | Error::SelfLoop(_)
                | Error::DuplicateEdge(_, _)
        )
    }
}
