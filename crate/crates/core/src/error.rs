use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix has no rows")]
    EmptyMatrix,
    #[error("matrix is not square: {rows} rows but a row of length {cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("polynomial division left a nonzero remainder")]
    InexactDivision,
    #[error("invalid Chern classes: {0}")]
    InvalidChern(String),
    #[error("invalid Segre classes: {0}")]
    InvalidSegre(String),
    #[error("invalid bundle: {0}")]
    InvalidBundle(String),
    #[error("elements belong to different models")]
    ModelMismatch,
    #[error("integration undefined on formal model")]
    FormalIntegration,
    #[error("degree needs a concrete base (point or projective space)")]
    DegreeNeedsConcreteBase,
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
