use thiserror::Error;

use crate::graph::Edge;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("graph6: {0}")]
    Graph6(String),

    #[error("colouring file: {0}")]
    Format(String),

    #[error("duplicate edge {0}")]
    DuplicateEdge(Edge),

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("invalid size: {0}")]
    InvalidSize(String),

    #[error("probability {0} is outside [0, 1]")]
    InvalidProbability(f64),

    #[error("graph is not bipartite (odd cycle through vertex {0})")]
    NotBipartite(usize),

    #[error("graph is not regular")]
    NotRegular,

    #[error("graph is not connected")]
    Disconnected,

    #[error("graph contains a cycle")]
    Cyclic,

    #[error("isolated edge {0}")]
    IsolatedEdge(Edge),

    #[error("too many edges ({0}) for distinct powers of two")]
    TooManyEdges(usize),

    #[error("edge {0} of the graph has no colour")]
    MissingEdge(Edge),

    #[error("coloured edge {0} is not an edge of the graph")]
    UnknownEdge(Edge),

    #[error("vertex {0} has no colour")]
    MissingVertex(usize),

    #[error("colouring is not a valid equitable nsd-colouring: {0}")]
    InvalidColouring(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("internal invariant failure: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
}
