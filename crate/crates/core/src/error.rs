use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("generator index {index} out of range for {what} of size {size}")]
    IndexOutOfRange { what: &'static str, index: usize, size: usize },
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("shape mismatch: {left:?} vs {right:?}")]
    ShapeMismatch { left: (usize, usize), right: (usize, usize) },
    #[error("variable mismatch: {0}")]
    VariableMismatch(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0} is not a unit")]
    NotAUnit(String),
    #[error("word is not in the subgroup {0}")]
    NotInSubgroup(String),
    #[error("braid is not pure")]
    NotPure,
    #[error("group kind mismatch: expected {expected}, found {found}")]
    GroupKind { expected: String, found: String },
    #[error("missing image for generator {0}")]
    MissingImage(String),
    #[error("invalid argument: {0}")]
    Invalid(String),
    #[error("relation {relation} fails at entry ({row}, {col})")]
    RelationFailed { relation: String, row: usize, col: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
