use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph of order {n}")]
    InvalidVertex { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("graph6 parse error at byte {offset}: {message}")]
    Graph6 { offset: usize, message: String },

    #[error("edge list parse error on line {line}: {message}")]
    EdgeList { line: usize, message: String },

    #[error("invalid named graph: {0}")]
    InvalidNamedGraph(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("graph is not connected")]
    Disconnected,

    #[error("graph is a {0}-clique")]
    IsClique(usize),

    #[error("construction failed: {0}")]
    ConstructionFailed(String),

    #[error("{path}: {message}")]
    Io { path: String, message: String },

    #[error("{context}: {message}")]
    Corpus { context: String, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
