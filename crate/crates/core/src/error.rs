use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("tableau is not standard")]
    NotStandard,
    #[error("word content {0:?} is not a partition")]
    NonPartitionContent(Vec<usize>),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("negative exponent in cell {row},{col}")]
    NegativeExponent { row: usize, col: usize },
    #[error("linear system is inconsistent: {0}")]
    Inconsistent(String),
    #[error("variable count mismatch: expected {expected}, got {got}")]
    VariableMismatch { expected: usize, got: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
