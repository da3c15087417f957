use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("division by zero: {0}")]
    DivisionByZero(String),
    #[error("missing value for parameter `{0}`")]
    MissingParameter(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("matrix is not symmetric (max asymmetry {0:e})")]
    NotSymmetric(f64),
    #[error("no invertible pivot in column {0}: entry is not a unit of the Laurent ring")]
    NonUnitPivot(usize),
    #[error("matrix size must be at least 2, got {0}")]
    SizeTooSmall(usize),
    #[error("invalid basis: {0}")]
    InvalidBasis(String),
    #[error("form of degree {0} has no differential in dimension {1}")]
    TopDegree(usize, usize),
    #[error("interior product of a 0-form")]
    InteriorOfFunction,
    #[error("symplectic form is degenerate (rank {rank} < {dim})")]
    DegenerateOmega { rank: usize, dim: usize },
    #[error("no hamiltonian vector field exists for the given element")]
    NotHamiltonian,
    #[error("metric is not diagonal; the default Hodge star needs a diagonal metric")]
    NonDiagonalMetric,
    #[error("expected a form of degree {expected}, found {found}")]
    WrongDegree { expected: usize, found: String },
    #[error("vacuum check failed: residual {0}")]
    InvalidVacuum(String),
    #[error("matrix is not Lorentz: {0}")]
    NotLorentz(String),
    #[error("tensor is not antisymmetric")]
    NotAntisymmetric,
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("rewrite rule {0} does not decrease the word order")]
    NonTerminating(String),
    #[error("element cannot be represented in the localized algebra: {0}")]
    NotRepresentable(String),
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("config error: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
