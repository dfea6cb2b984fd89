use thiserror::Error;

/// Errors raised by the set, measure, spectral and dimension routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("compact sets must be nonempty")]
    EmptySet,

    #[error("invalid interval [{lo}, {hi}]")]
    InvalidInterval { lo: f64, hi: f64 },

    #[error("non-finite value encountered: {0}")]
    NonFinite(&'static str),

    #[error("fattening radius must be finite and nonnegative, got {0}")]
    InvalidRadius(f64),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid potential: {0}")]
    InvalidPotential(String),

    #[error("invalid measure: {0}")]
    InvalidMeasure(String),

    #[error("matrix is not Hermitian (asymmetry {asymmetry:e})")]
    NotHermitian { asymmetry: f64 },

    #[error("eigensolver did not converge after {sweeps} sweeps")]
    NotConverged { sweeps: usize },

    #[error("strategy does not apply: {0}")]
    StrategyMismatch(String),

    #[error("need at least {needed} data points, found {found}")]
    InsufficientData { needed: usize, found: usize },

    #[error("estimator not applicable: {0}")]
    NotApplicable(String),

    #[error("exponent must be positive, got {0}")]
    InvalidExponent(f64),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Numerical failures (as opposed to bad input).
    pub fn is_numerical(&self) -> bool {
        matches!(
            self,
            Error::NotConverged { .. } | Error::NotHermitian { .. }
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
