use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("unknown candidate `{0}`")]
    UnknownCandidate(String),

    #[error("invalid candidate name `{0}`")]
    InvalidName(String),

    #[error("invalid profile: {0}")]
    InvalidProfile(String),

    #[error("voter index {index} out of range for {voters} voters")]
    VoterIndex { index: usize, voters: usize },

    #[error("replication factor must be at least 1")]
    ZeroReplication,

    #[error("{what} too large: {size} exceeds cap {cap}")]
    CapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("malformed program: {0}")]
    Program(String),

    #[error("solver failure: {0}")]
    Solver(String),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
