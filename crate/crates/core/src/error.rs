use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("invalid field parameters: {0}")]
    InvalidField(String),
    #[error("modulus {0} is reducible")]
    ReducibleModulus(String),
    #[error("generator has order {order}, expected {expected}")]
    NotAGenerator { order: u128, expected: u128 },
    #[error("field GF({p}^{e}) is too large for this implementation")]
    FieldTooLarge { p: u64, e: u32 },
    #[error("operands belong to different fields")]
    MixedFields,
    #[error("division by zero")]
    DivisionByZero,
    #[error("gcd({n}, {q}) != 1")]
    NotCoprime { n: u64, q: u64 },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("reciprocal undefined: constant term is zero")]
    ZeroConstantTerm,
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("generator does not divide x^{n} - 1 (remainder {remainder})")]
    NotADivisor { n: usize, remainder: String },
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
    #[error("prediction mismatch for {what}: predicted {predicted}, constructed {actual}")]
    PredictionMismatch {
        what: String,
        predicted: i64,
        actual: i64,
    },
}
