use thiserror::Error;

/// Errors surfaced by every fallible operation in the crate.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("malformed input: {0}")]
    MalformedInput(String),

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("graph order {n} out of range (limit {limit})")]
    OrderOutOfRange { n: usize, limit: usize },

    #[error("search budget of {budget} nodes exhausted in {context}")]
    BudgetExceeded { context: &'static str, budget: u64 },

    #[error("graph is not connected")]
    NotConnected,

    #[error("graph is not planar")]
    NotPlanar,

    #[error("invalid rotation system: {0}")]
    InvalidRotationSystem(String),

    #[error("hypergraph has no edges")]
    EmptyHypergraph,

    #[error("iteration did not converge: {0}")]
    NonConvergence(String),

    #[error("seed graph violates the search constraint")]
    InfeasibleSeed,

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
