use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix must be square and non-empty, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("non-finite entry at ({row}, {col})")]
    NonFinite { row: usize, col: usize },

    #[error("matrix is not Hermitian (relative defect {defect:.3e})")]
    NotHermitian { defect: f64 },

    #[error("matrix is not normal (normality defect {defect:.3e})")]
    NotNormal { defect: f64 },

    #[error("matrix is singular (smallest singular value {sigma_min:.3e})")]
    Singular { sigma_min: f64 },

    #[error("tolerance {tol:.3e} unreachable within {points} support evaluations (gap {gap:.3e})")]
    ToleranceUnreachable { tol: f64, points: usize, gap: f64 },

    #[error("unknown functional `{0}`")]
    UnknownFunctional(String),

    #[error("invalid segment parameters m={m}, M={big_m}: need M >= m > 0")]
    InvalidSegment { m: f64, big_m: f64 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("inequality {id} expects {expected} parameters")]
    WrongParamKind { id: String, expected: &'static str },

    #[error("unknown inequality id `{0}`")]
    UnknownInequality(String),

    #[error("missing certificate for {0}")]
    MissingCertificate(String),

    #[error("invalid generator spec: {0}")]
    InvalidSpec(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
