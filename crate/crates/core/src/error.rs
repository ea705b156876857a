use thiserror::Error;

/// Errors raised by Sol geometry operations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum SolError {
    #[error("non-finite coordinate in {0}")]
    NonFinite(&'static str),
    #[error("the origin has no translation curve parameters")]
    Origin,
    #[error("zero vector has no angle")]
    ZeroVector,
    #[error("malformed isometry: homogeneous coordinate became {0}")]
    DegenerateMatrix(f64),
    #[error("isometry matrix is singular")]
    Singular,
    #[error("degenerate triangle: vertices {0} and {1} coincide")]
    DegenerateTriangle(usize, usize),
    #[error("direction out of range: need -pi < phi <= pi, -pi/2 <= theta <= pi/2, got phi={phi}, theta={theta}")]
    InvalidDirection { phi: f64, theta: f64 },
    #[error("arc length must be finite and nonnegative, got {0}")]
    InvalidArcLength(f64),
    #[error("need at least {min} samples, got {got}")]
    TooFewSamples { min: usize, got: usize },
    #[error("invalid sweep: {0}")]
    InvalidSweep(String),
    #[error("parameter search did not converge (best residual {residual:e})")]
    NoConvergence { residual: f64 },
}

pub type Result<T, E = SolError> = std::result::Result<T, E>;
