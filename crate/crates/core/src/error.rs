use thiserror::Error;

/// Errors raised by the numerical routines.
///
/// The variant name doubles as the machine-readable error code emitted by the
/// command-line tool (see [`Error::kind`]).
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("Gamma pole: argument {0} is a non-positive integer")]
    PoleError(String),

    #[error("degenerate hypergeometric parameters: {0}")]
    DegenerateTriple(String),

    #[error("argument outside the admissible domain: {0}")]
    DomainError(String),

    #[error("{lambda} is not an eigenvalue of the radial operator (nearest atom {nearest})")]
    NotAnEigenvalue { lambda: f64, nearest: f64 },

    #[error("non-finite value: {0}")]
    NonFinite(String),

    #[error("resonant spectral parameter: {0}")]
    ResonanceError(String),

    #[error("truncation did not reach tolerance {tol:e} (estimate {achieved:e})")]
    ToleranceNotMet { tol: f64, achieved: f64 },

    #[error("analytic continuation in alpha is not supported: {0}")]
    ContinuationUnsupported(String),

    #[error("grid too coarse: {points} points, at least {required} required")]
    GridTooCoarse { points: usize, required: usize },

    #[error("singular linear system at row {0}")]
    SingularSystem(usize),

    #[error("series did not converge after {0} terms")]
    SeriesNotConverged(usize),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("configuration error: {0}")]
    ConfigError(String),
}

impl Error {
    /// Stable name of the error class.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::PoleError(_) => "PoleError",
            Error::DegenerateTriple(_) => "DegenerateTriple",
            Error::DomainError(_) => "DomainError",
            Error::NotAnEigenvalue { .. } => "NotAnEigenvalue",
            Error::NonFinite(_) => "NonFinite",
            Error::ResonanceError(_) => "ResonanceError",
            Error::ToleranceNotMet { .. } => "ToleranceNotMet",
            Error::ContinuationUnsupported(_) => "ContinuationUnsupported",
            Error::GridTooCoarse { .. } => "GridTooCoarse",
            Error::SingularSystem(_) => "SingularSystem",
            Error::SeriesNotConverged(_) => "SeriesNotConverged",
            Error::InvalidParameter(_) => "InvalidParameter",
            Error::ConfigError(_) => "ConfigError",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
