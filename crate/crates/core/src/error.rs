use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ideal must have at least one generator")]
    EmptyGenerators,

    #[error("ambient dimension must be at least 1")]
    ZeroDimension,

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("operation requires dimension {expected}, got {found}")]
    WrongDimension { expected: usize, found: usize },

    #[error("ideal is not m-primary (missing a pure power of x{axis})")]
    NotMPrimary { axis: usize },

    #[error("the unit ideal has no Hilbert-Samuel polynomial")]
    UnitIdeal,

    #[error("exponent overflow while computing monomial products")]
    ExponentOverflow,

    #[error("not a parameter ideal: {0}")]
    NotParameterIdeal(String),

    #[error("containment violated: {0}")]
    NotContained(String),

    #[error("invalid Brieskorn-Pham exponents: {0}")]
    InvalidBrieskorn(String),

    #[error(
        "polynomial did not stabilize below threshold cap {cap}; last candidates {previous} and {current}"
    )]
    StabilizationCap {
        cap: u64,
        previous: String,
        current: String,
    },

    #[error("non-integral coefficient extraction: {0}")]
    NonIntegral(String),

    #[error("singular linear system")]
    Singular,

    #[error("consistency failure: {0}")]
    Inconsistent(String),

    #[error("parse error: {0}")]
    Parse(String),
}
