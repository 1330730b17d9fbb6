use thiserror::Error;

/// Errors produced by the moment engine, the closed forms and the numerical oracles.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("enumeration size n = {n} exceeds the configured limit {max}")]
    LimitExceeded { n: usize, max: usize },

    #[error("argument outside the domain: {0}")]
    Domain(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("flavor mismatch: expected {expected}, found {found}")]
    FlavorMismatch {
        expected: crate::Flavor,
        found: crate::Flavor,
    },

    #[error("index {index} out of range 1..={p}")]
    IndexOutOfRange { index: u32, p: usize },

    #[error("matrix `{0}` is not symmetric")]
    NotSymmetric(&'static str),

    #[error("matrix `{0}` is not Hermitian")]
    NotHermitian(&'static str),

    #[error("covariance matrix is not positive definite")]
    NotPositiveDefinite,

    #[error("mean square matrix is not positive semidefinite")]
    NotPositiveSemidefinite,

    #[error("mean vectors do not reproduce the mean square matrix: {0}")]
    MeanMismatch(String),

    #[error("rank of the mean square matrix ({rank}) exceeds the degrees of freedom ({nu})")]
    RankExceedsDegrees { rank: usize, nu: u64 },

    #[error("sampling needs a positive integer number of degrees of freedom, got {0}")]
    NonIntegerDegrees(f64),

    #[error("matrix is singular")]
    Singular,

    #[error("fractional power of a negative determinant ({det}) with exponent {exponent}")]
    BranchUndefined { det: f64, exponent: f64 },

    #[error("finite-difference order {order} exceeds the supported maximum {max}")]
    OrderTooHigh { order: usize, max: usize },

    #[error("substituted polynomial carries an odd power of rho")]
    OddRhoPower,

    #[error("malformed polynomial JSON: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;
