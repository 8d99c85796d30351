use thiserror::Error;

/// Errors shared across the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("empty vertex set")]
    EmptyVertexSet,

    #[error("vertex {0} out of range for a graph on {1} vertices")]
    VertexOutOfRange(usize, usize),

    #[error("vertex count {0} outside supported range {1}..={2}")]
    OrderOutOfRange(usize, usize, usize),

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate arc {0}->{1}")]
    DuplicateArc(usize, usize),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("state space too large: {0}")]
    TooLarge(String),

    #[error("arc count {0} exceeds the {1}-arc search bound")]
    ArcBound(usize, usize),

    #[error("cycle must have length >= 2, got {0}")]
    CycleTooShort(usize),

    #[error("not an interlinked cycle: {0}")]
    NotInterlinked(String),

    #[error("invalid super-vertex set: {0}")]
    BadSuperVertex(String),

    #[error("codes cannot be concatenated: {0}")]
    ConcatMismatch(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("entropy chain replay failed at step `{step}`: {reason}")]
    ChainStep { step: String, reason: String },

    #[error("not a member of the exceptional set")]
    NotExceptional,

    #[error("no length-2 code found for the given graph")]
    NoLengthTwoCode,

    #[error("survey assertion failed for class {id}: {reason}")]
    SurveyAssertion { id: String, reason: String },

    #[error("linear program error: {0}")]
    Lp(String),
}

pub type Result<T> = std::result::Result<T, Error>;
