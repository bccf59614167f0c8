use thiserror::Error;

/// Errors produced by the algebra and analysis layers.
///
/// `Verification` is special: it is raised when a checked identity that must
/// hold unconditionally turns out false, which always indicates a bug.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("modulus {0} is not irreducible over the prime field")]
    ReducibleModulus(String),
    #[error("invalid modulus: {0}")]
    InvalidModulus(String),
    #[error("field order {0} is not supported (finite fields are capped at 64 elements)")]
    UnsupportedOrder(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("division by zero")]
    DivisionByZero,
    #[error("element {0} does not belong to {1}")]
    NotInField(String, String),
    #[error("operands live over different fields")]
    FieldMismatch,
    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("variable index {index} out of range for arity {arity}")]
    VariableOutOfRange { index: usize, arity: usize },
    #[error("cannot identify variable {0} with itself")]
    SameVariable(usize),
    #[error("arity gap undefined: only {0} essential variable(s)")]
    GapUndefined(usize),
    #[error("wrong characteristic: expected {expected}, found {found}")]
    WrongCharacteristic { expected: u64, found: u64 },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("verification failure: {0}")]
    Verification(String),
    #[error("malformed input: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// True for failed internal checks, as opposed to bad input.
    pub fn is_verification(&self) -> bool {
        matches!(self, Error::Verification(_))
    }
}
