use thiserror::Error;

/// Errors produced anywhere in the solver pipeline.
#[derive(Debug, Error)]
pub enum Error {
    /// An argument lies outside the domain of a function or operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A configuration failed validation.
    #[error("invalid configuration: {0}")]
    Config(String),

    /// The configuration is numerically meaningless in double precision.
    #[error("ill-conditioned configuration: {0}")]
    Conditioning(String),

    /// The sparse factorization failed or produced an unusable solution.
    #[error("linear solver failure: {message} (condition indicator {indicator:.3e})")]
    Solver { message: String, indicator: f64 },

    /// Geometric inconsistency (singular Jacobian, mismatched seam, ...).
    #[error("geometry error: {0}")]
    Geometry(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
