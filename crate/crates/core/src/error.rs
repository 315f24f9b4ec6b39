use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("rotation system is not a sphere embedding: V - E + F = {n} - {m} + {faces} != 2")]
    EulerViolation { n: usize, m: usize, faces: usize },

    #[error("outer anchor ({0}, {1}) is not an edge of the graph")]
    DanglingAnchor(usize, usize),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("invalid group: {0}")]
    InvalidGroup(String),

    #[error("invalid labeling: {0}")]
    InvalidLabels(String),

    #[error("decomposition does not match the contracted graph: {0}")]
    DecompositionMismatch(String),

    #[error("traceback witness failed verification: {0}")]
    WitnessRejected(String),

    #[error("dynamic programming table has no feasible root entry")]
    NoFeasibleEntry,

    #[error("instance too large for exhaustive search: {0}")]
    InstanceTooLarge(String),

    #[error("pair enumeration would produce {count} pairs, over the limit of {limit}")]
    PairLimitExceeded { count: u128, limit: u64 },

    #[error("graph stayed disconnected after {0} thinning attempts")]
    DisconnectionAfterRetries(usize),

    #[error("invalid request: {0}")]
    InvalidRequest(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Process exit code used by the command line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse(_) | Error::Json(_) | Error::Io(_) => 2,
            Error::PairLimitExceeded { .. } | Error::InstanceTooLarge(_) => 4,
            _ => 3,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
