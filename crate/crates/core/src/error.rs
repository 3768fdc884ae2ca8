use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed position {0:?}: expected comma-separated nonnegative integers")]
    MalformedPosition(String),
    #[error("pile of size {pile} exceeds the size bound {bound}")]
    PileExceedsBound { pile: u32, bound: usize },
    #[error("state budget of {budget} exceeded")]
    BudgetExceeded { budget: usize },
    #[error("dimension mismatch: game has dimension {expected}, point has {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("invalid vector game: {0}")]
    InvalidVectorGame(String),
    #[error("unknown classifier id {0:?}")]
    UnknownClassifier(String),
    #[error("classifier {classifier} is not defined for version {variant}")]
    UnsupportedVariant { classifier: String, variant: String },
    #[error("unknown variant {0:?}: expected A, B or C")]
    UnknownVariant(String),
    #[error("base-case table: {0}")]
    Table(String),
    #[error("profile configuration: {0}")]
    Profile(String),
    #[error("invalid pattern {0:?}")]
    InvalidPattern(String),
    #[error("invalid region: {0}")]
    InvalidRegion(String),
}
