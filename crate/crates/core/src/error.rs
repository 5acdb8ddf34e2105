use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("vertex {vertex} is outside the universe 0..{n}")]
    VertexOutOfRange { vertex: u32, n: usize },

    #[error("edge {index} is empty")]
    EmptyEdge { index: usize },

    #[error("vertices {0:?} lie in no edge")]
    IsolatedVertices(Vec<u32>),

    #[error("the core of an empty family is undefined")]
    EmptyFamily,

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("invalid basis: {0}")]
    InvalidBasis(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("core provider is inconsistent: {0}")]
    ProviderInconsistent(String),

    #[error("vertex {vertex} receives conflicting labels in the biexpansion")]
    LabelConflict { vertex: u32 },

    #[error("malformed witness: {0}")]
    MalformedWitness(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse { line, message: message.into() }
    }

    pub(crate) fn invalid(message: impl Into<String>) -> Self {
        Error::InvalidParameters(message.into())
    }
}
