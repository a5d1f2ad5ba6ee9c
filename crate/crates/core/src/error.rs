use thiserror::Error;

/// Errors raised by the library.
///
/// Variants split into two families: bad input ([`Error::is_theorem_violation`]
/// is false) and failed internal identity checks, which mean the
/// implementation disagrees with a proven statement.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operands live in different fields")]
    FieldMismatch,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("zero polynomial is not allowed here")]
    ZeroPolynomial,
    #[error("degree {degree} outside supported range {min}..={max}")]
    DegreeOutOfRange { degree: usize, min: usize, max: usize },
    #[error("polynomial is not squarefree")]
    NotSquarefree,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("degenerate rational map: {0}")]
    DegenerateMap(String),
    #[error("Mobius transformation has zero determinant")]
    SingularMobius,
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("unsupported input: {0}")]
    Unsupported(String),
    #[error("operation needs numeric critical points, got a symbolic parameter")]
    SymbolicGamma,
    #[error("coefficient {0} cannot be reduced modulo {1}")]
    NotReducible(String, u64),
    #[error("resource cap exceeded: {terms} terms > {cap}")]
    ResourceCap { terms: usize, cap: usize },
    #[error("identity check failed: {0}")]
    TheoremCheck(String),
}

impl Error {
    /// True when the error reports a failed proof identity rather than bad input.
    pub fn is_theorem_violation(&self) -> bool {
        matches!(self, Error::TheoremCheck(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
