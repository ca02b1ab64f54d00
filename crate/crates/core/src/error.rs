use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed or out-of-range input.
    #[error("invalid input: {0}")]
    Input(String),

    /// An operation that needs a connected graph got a disconnected one.
    #[error("graph is not connected: {0}")]
    Connectivity(String),

    /// A text format could not be parsed. Lines and columns are 1-based.
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    /// The search gave up before deciding. `lower..=upper` is the interval
    /// the locating chromatic number is known to lie in.
    #[error("search limit reached after {nodes} nodes; chi_L lies in [{lower}, {upper}]")]
    ResourceLimit {
        lower: usize,
        upper: usize,
        nodes: u64,
    },

    /// A constructed object failed one of its checks.
    #[error("verification failed: {0}")]
    Verification(String),

    /// Integer arithmetic left the representable range.
    #[error("arithmetic overflow computing {0}")]
    Overflow(String),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }
}
