use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// An argument is outside the domain where the formula is defined.
    #[error("domain error: {0}")]
    Domain(String),

    /// An invalid combination of parameters.
    #[error("configuration error: {0}")]
    Config(String),

    #[error("dimension mismatch: expected {expected} values, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("conjugate gradients did not converge in {iterations} iterations (relative residual {residual:e})")]
    Convergence { iterations: usize, residual: f64 },

    #[error("shifted solve failed at quadrature node {node}: {source}")]
    NodeSolve {
        node: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("reference solution is identically zero")]
    ZeroReference,

    #[error("maximum of the solution is not positive ({0:e})")]
    NonPositiveMax(f64),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn config(msg: impl Into<String>) -> Self {
        Error::Config(msg.into())
    }
}
