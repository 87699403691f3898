use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vector length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("matrix dimension mismatch: {left:?} cannot be combined with {right:?}")]
    DimensionMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix rows have unequal lengths")]
    RaggedRows,

    #[error("generator matrix has rank {rank} but {rows} rows")]
    RankDeficient { rank: usize, rows: usize },

    #[error("zero-dimensional codes are not supported")]
    ZeroDimension,

    #[error("code length {n} exceeds the supported maximum of {max}")]
    LengthTooLarge { n: usize, max: usize },

    #[error("coordinate {index} is out of range 1..={n}")]
    CoordinateOutOfRange { index: usize, n: usize },

    #[error("code is not Hermitian LCD")]
    NotHermitianLcd,

    #[error("neither the [{n},{k}] code nor its dual is small enough to enumerate")]
    TooLargeToEnumerate { n: usize, k: usize },

    #[error("inconsistent weight enumerator: {0}")]
    InconsistentEnumerator(String),

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("corrupt checkpoint: {0}")]
    Checkpoint(String),

    #[error("unknown code name `{0}`")]
    UnknownCode(String),

    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
