use thiserror::Error;

/// Errors raised by the numerical routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ShearError {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("argument outside the domain: {0}")]
    Domain(String),
    #[error("evaluation at a pole: {0}")]
    Pole(String),
    #[error("unsupported parameters: {0}")]
    UnsupportedParameters(String),
    #[error("dilatation has no analytic square root: {0}")]
    NotLiftable(String),
    #[error("no closed-form oracle for {0}")]
    NoOracle(String),
    #[error("integral did not converge (error estimate {estimate:e})")]
    NoConvergence { estimate: f64 },
}

pub type Result<T, E = ShearError> = std::result::Result<T, E>;
