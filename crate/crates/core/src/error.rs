use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} has degree {degree}, exceeding the bound {bound}")]
    DegreeExceeded {
        vertex: usize,
        degree: usize,
        bound: usize,
    },
    #[error("graph is not connected")]
    Disconnected,
    #[error("vertex set is empty")]
    EmptySet,
    #[error("vertex set does not span a connected subgraph")]
    NotConnected,
    #[error("invalid vertex set: {0}")]
    InvalidVertexSet(String),
    #[error("invalid edge coloring: {0}")]
    InvalidColoring(String),
    #[error("rooted ball invariant violated: {0}")]
    InvariantViolation(String),
    #[error("malformed ball code: {0}")]
    BadCode(String),
    #[error("census parameters differ: {0}")]
    RadiusMismatch(String),
    #[error("ball has {size} vertices, above the limit of {limit}")]
    BallTooLarge { size: usize, limit: usize },
    #[error("ball radius {radius} is smaller than the moment power {power}")]
    RadiusTooSmall { radius: usize, power: usize },
    #[error("input of size {size} exceeds the limit of {limit} for {what}")]
    TooLarge {
        what: &'static str,
        size: usize,
        limit: usize,
    },
    #[error("enumeration budget of {budget} visited subsets exhausted")]
    BudgetExceeded { budget: u64 },
    #[error("random regular generation failed after {0} retries")]
    RetriesExhausted(usize),
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("io error: {0}")]
    Io(String),
    #[error("internal check failed: {0}")]
    CheckFailed(String),
}

impl Error {
    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::BallTooLarge { .. }
            | Error::TooLarge { .. }
            | Error::BudgetExceeded { .. }
            | Error::RetriesExhausted(_) => 3,
            Error::CheckFailed(_) => 4,
            _ => 2,
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Io(e.to_string())
    }
}
