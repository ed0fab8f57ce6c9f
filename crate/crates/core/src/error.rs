use thiserror::Error;

/// Errors produced while reading or validating a tree document.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("input is empty: expected the vertex count on the first line")]
    Empty,
    #[error("line {line}: malformed line {text:?}")]
    Malformed { line: usize, text: String },
    #[error("line {line}: vertex count must be at least 1")]
    ZeroVertices { line: usize },
    #[error("line {line}: vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { line: usize, vertex: u64, n: usize },
    #[error("line {line}: self-loop on vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("line {line}: duplicate edge {u} {v}")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("line {line}: edge {u} {v} closes a cycle")]
    Cycle { line: usize, u: usize, v: usize },
    #[error("line {line}: expected exactly {expected} edges, found {found}")]
    EdgeCount {
        line: usize,
        expected: usize,
        found: usize,
    },
    #[error("input graph is disconnected")]
    Disconnected,
}

/// Errors of the library API (outside of parsing).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("size mismatch: tree has {tree} vertices, arrangement has {arrangement}")]
    SizeMismatch { tree: usize, arrangement: usize },
    #[error("invalid arrangement: {0}")]
    InvalidArrangement(String),
    #[error("vertex {vertex} out of range for a tree of {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("{u} {v} is not an edge of the tree")]
    NotAnEdge { u: usize, v: usize },
    #[error("tree is not a caterpillar")]
    NotCaterpillar,
    #[error("operation requires at least {min} vertices, got {n}")]
    TooSmall { n: usize, min: usize },
    #[error("exhaustive enumeration is limited to n <= {max}, got {n}")]
    TooLarge { n: usize, max: usize },
    #[error("inconsistent family parameters: {0}")]
    Family(String),
}

pub type Result<T> = std::result::Result<T, Error>;
