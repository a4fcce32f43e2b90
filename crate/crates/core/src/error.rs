use thiserror::Error;

/// Errors produced by graph construction, parsing and the analysis routines.
#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("graphs with {n} vertices are not supported (maximum {max})")]
    TooManyVertices { n: usize, max: usize },

    #[error("malformed graph6: {0}")]
    Graph6(String),

    #[error("malformed edge list: {0}")]
    EdgeList(String),

    #[error("input has {n} vertices but this routine is capped at {cap}")]
    SizeCap { n: usize, cap: usize },

    #[error("graph must be connected")]
    Disconnected,

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("unsupported family shape: {0}")]
    UnsupportedShape(String),

    #[error("family expression: {0}")]
    FamilySyntax(String),

    #[error("no real root in [{lo}, {hi}]")]
    NoRealRoot { lo: f64, hi: f64 },

    #[error("integer overflow in exact arithmetic (128-bit)")]
    Overflow,

    #[error("numerical cross-check failed: {0}")]
    Numerical(String),

    #[error("graph source mixes orders: expected {expected}, found {found}")]
    MixedOrder { expected: usize, found: usize },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
