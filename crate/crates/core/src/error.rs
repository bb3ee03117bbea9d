use thiserror::Error;

/// Errors raised by the algebra kernels and the verification drivers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("argument out of range: {0}")]
    OutOfRange(String),

    #[error("division leaves a nonzero remainder: ({num}) / ({den})")]
    NonExactDivision { num: String, den: String },

    #[error("division by zero")]
    DivisionByZero,

    #[error("cannot evaluate a Laurent polynomial at q = 0")]
    ZeroEvaluationPoint,

    #[error("q-exponent overflow")]
    ExponentOverflow,

    #[error("space length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("matrix realization on {len} positions exceeds the cap of {cap}")]
    CapExceeded { len: usize, cap: usize },

    #[error("omega generators are not available in the classical (q = 1) algebra")]
    ClassicalOmega,

    #[error("generator {0} is not available in this algebra")]
    UnsupportedGenerator(String),

    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("partition {partition} does not fit in a {n} x {m} box")]
    BoxViolation { partition: String, n: usize, m: usize },

    #[error("operator is not invertible on the module: {0}")]
    NotInvertible(String),

    #[error("span dimensions disagree across specializations: {0}")]
    SpecializationAnomaly(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
