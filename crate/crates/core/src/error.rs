use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("rank must be at least 1")]
    ZeroRank,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("diagonal entries must sum to zero, got {0}")]
    NonZeroTrace(String),
    #[error("cannot parse rational `{0}`")]
    ParseRational(String),
    #[error("total N = n+1+Σk_i must be positive, got {0}")]
    NonPositiveTotal(String),
    #[error("exponent k_{index} = {value} is below -1")]
    ExponentBelowMinusOne { index: usize, value: String },
    #[error("exponent k_{index} = {value} is not a nonnegative integer")]
    NonIntegralExponent { index: usize, value: String },
    #[error("weight has Σv_i = {sum} exceeding level {level}")]
    LevelViolation { sum: u64, level: u64 },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("p = {p} and p' = {p_prime} are not coprime")]
    NotCoprime { p: u64, p_prime: u64 },
    #[error("characteristic polynomial has repeated roots (min separation {0:e})")]
    RepeatedRoots(f64),
    #[error("root finding did not converge")]
    RootsNotConverged,
    #[error("cannot place monodromy arguments in the alcove: {0}")]
    AlcovePlacement(String),
    #[error("evaluation point has colliding entries (|Vandermonde| = {0:e})")]
    SingularDenominator(f64),
    #[error("radius must be positive, got {0}")]
    NonPositiveRadius(f64),
}

impl Error {
    /// True for failures of a numerical procedure on otherwise valid input.
    pub fn is_numerical(&self) -> bool {
        matches!(
            self,
            Error::RepeatedRoots(_)
                | Error::RootsNotConverged
                | Error::AlcovePlacement(_)
                | Error::SingularDenominator(_)
        )
    }
}
