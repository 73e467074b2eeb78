use thiserror::Error;

/// Error type shared by all modules.
///
/// Domain violations (arguments outside an operation's contract), poles of
/// the underlying special functions, and quadrature non-convergence are kept
/// distinct so callers can react differently (the CLI maps them to distinct
/// exit codes).
#[derive(Debug, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("pole: {0}")]
    Pole(String),

    #[error("quadrature did not converge: best value {value}, error estimate {error_estimate}")]
    NonConvergence { value: String, error_estimate: String },

    #[error("unknown integrand: {0}")]
    UnknownIntegrand(String),

    #[error("requested precision unreachable: {0}")]
    Precision(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn pole(msg: impl Into<String>) -> Self {
        Error::Pole(msg.into())
    }
}
