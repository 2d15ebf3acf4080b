use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("field mismatch: {0}")]
    FieldMismatch(String),
    #[error("exact reconstruction failed: {0}")]
    ReconstructionFailed(String),
    #[error("ambient dimension mismatch ({0} vs {1})")]
    AmbientMismatch(usize, usize),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("the base field does not split the algebra: {0}")]
    NotSplit(String),
    #[error("algebra is not semisimple: {0}")]
    NotSemisimple(String),
    #[error("coalgebra is not cosemisimple: {0}")]
    NotCosemisimple(String),
    #[error("not quasi-triangular: {law} fails at {witness}")]
    NotQuasiTriangular { law: String, witness: String },
    #[error("R-matrix has no inverse in the required subspace")]
    NoInverse,
    #[error("ill-formed structure: {0}")]
    IllFormed(String),
    #[error("invalid table: {0}")]
    InvalidTable(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("singular matrix")]
    Singular,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
