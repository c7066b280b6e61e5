use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: malformed input: {message}")]
    Malformed { line: usize, message: String },

    #[error("line {line}: loop at vertex {vertex}")]
    Loop { line: usize, vertex: usize },

    #[error("line {line}: duplicate edge ({u},{v})")]
    DuplicateEdge { line: usize, u: usize, v: usize },

    #[error("line {line}: vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { line: usize, vertex: usize, n: usize },

    #[error("({u},{v}) is not an edge of the graph")]
    NotAnEdge { u: usize, v: usize },

    #[error("no path between vertices {from} and {to}")]
    NoPath { from: usize, to: usize },

    #[error("invalid graph request: {0}")]
    InvalidGraph(String),

    #[error("invalid color vector: {0}")]
    InvalidColors(String),

    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    #[error("integer overflow while evaluating {0}")]
    Overflow(&'static str),

    #[error("the graph must be connected")]
    Disconnected,

    #[error("the complex has no cells")]
    EmptyComplex,

    #[error("expected a cell of dimension {expected}, got dimension {actual}")]
    WrongDimension { expected: usize, actual: usize },

    #[error("not a valid cell of this complex: {0}")]
    InvalidCell(String),

    #[error("cell syntax error: {0}")]
    CellSyntax(String),

    #[error("invalid move {0}")]
    InvalidMove(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("hypothesis not met: {0}")]
    HypothesisNotMet(String),

    #[error("internal invariant broken: {0}")]
    Internal(String),
}
