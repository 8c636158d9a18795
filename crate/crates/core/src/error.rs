use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degenerate slope: zero denominator")]
    DegenerateSlope,

    #[error("slope tuples have different lengths ({0} vs {1})")]
    LengthMismatch(usize, usize),

    #[error("expected a slope pair, got {0} entries")]
    NotAPair(usize),

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("invalid parameters: {0}")]
    Validation(String),

    #[error("word is not a normal form of this group: {0}")]
    GroupMismatch(String),

    #[error("seifert base mismatch")]
    BaseMismatch,

    #[error("expected three exceptional fibers over the sphere, got {0}")]
    WrongFiberCount(usize),

    #[error("sphere {0} is not possessed by this link")]
    SphereNotPossessed(String),

    #[error("not applicable: {0}")]
    NotApplicable(String),

    #[error("outside the classified cases: {0}")]
    OutsideCoverage(String),

    #[error("presentation/image mismatch: {0}")]
    PresentationMismatch(String),
}

pub type Result<T> = std::result::Result<T, Error>;
