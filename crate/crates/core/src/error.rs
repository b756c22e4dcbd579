use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex `{0}` declared twice")]
    DuplicateVertex(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("line {line}: bad edge label `{label}` (expected an integer >= 2)")]
    BadLabel { line: usize, label: String },
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("graph has {0} vertices, at most 64 are supported")]
    TooManyVertices(usize),
    #[error("bad word token `{0}`")]
    BadWord(String),
    #[error("braid-move orbit exceeded the cap of {0} words")]
    OrbitCapExceeded(usize),
    #[error("`{0}` and `{1}` are not joined by a finite-label edge")]
    NotAnEdge(String, String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("assertion failed: {0}")]
    AssertionFailure(String),
    #[error("no permutation model is available for this graph")]
    ModelUnavailable,
    #[error("group enumeration exceeded {0} elements (too large or infinite)")]
    GroupTooLargeOrInfinite(usize),
}

impl Error {
    /// Stable machine-readable identifier, printed by the CLI.
    pub fn code(&self) -> &'static str {
        match self {
            Error::DuplicateVertex(_) => "DuplicateVertex",
            Error::UnknownVertex(_) => "UnknownVertex",
            Error::BadLabel { .. } => "BadLabel",
            Error::Syntax { .. } => "SyntaxError",
            Error::TooManyVertices(_) => "TooManyVertices",
            Error::BadWord(_) => "BadWord",
            Error::OrbitCapExceeded(_) => "OrbitCapExceeded",
            Error::NotAnEdge(..) => "NotAnEdge",
            Error::PreconditionViolated(_) => "PreconditionViolated",
            Error::AssertionFailure(_) => "AssertionFailure",
            Error::ModelUnavailable => "ModelUnavailable",
            Error::GroupTooLargeOrInfinite(_) => "GroupTooLargeOrInfinite",
        }
    }
}
