use crate::ring::RingError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error("budget exceeded during {stage}: {detail}")]
    BudgetExceeded { stage: String, detail: String },
    #[error("input is not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("the ideal is the unit ideal")]
    UnitIdeal,
    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("rank condition failed: expected {expected}, found {found}")]
    Rank { expected: usize, found: usize },
    #[error("matrix is not alternating")]
    NotAlternating,
    #[error("invalid argument: {0}")]
    Invalid(String),
    #[error("grading is inconsistent: {0}")]
    Grading(String),
    #[error("not a presentation matrix: {0}")]
    NotPresentation(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
