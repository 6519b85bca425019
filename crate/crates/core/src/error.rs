use thiserror::Error;

/// Errors raised by diagram, path-space and group operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("level {level} is outside the represented depth {depth}")]
    LevelOutOfRange { level: usize, depth: usize },

    #[error("invalid telescope schedule: {0}")]
    InvalidSchedule(String),

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),

    #[error("invalid edge order: {0}")]
    InvalidOrder(String),

    #[error("invalid substitution: {0}")]
    InvalidSubstitution(String),

    #[error("diagram is not simple")]
    NotSimple,

    #[error("diagram is not properly ordered: {0}")]
    NotProperlyOrdered(String),

    #[error("minimal path is not unique ({0} minimal paths)")]
    NoUniqueMinimalPath(usize),

    #[error("path space is finite (every vertex has in-degree 1)")]
    DegeneratePathSpace,

    #[error("invalid path: {0}")]
    InvalidPath(String),

    #[error("invalid tower data: {0}")]
    InvalidTowers(String),

    #[error("target stage {target} precedes element stage {stage}")]
    StageOrder { stage: usize, target: usize },

    #[error("nonzero sum {sum} over tower {tower}")]
    NonzeroTowerSum { tower: usize, sum: String },

    #[error("usage: {0}")]
    Usage(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("{0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;
