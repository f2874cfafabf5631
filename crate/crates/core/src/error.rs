use thiserror::Error;

/// Failures reported by the numerical routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("overflow: {0}")]
    Overflow(String),

    #[error(
        "iteration did not converge: value {value:e}, error estimate {abs_error:e} \
         after {evaluations} evaluations"
    )]
    NotConverged {
        value: f64,
        abs_error: f64,
        evaluations: usize,
    },

    #[error("configuration mismatch: {0}")]
    Config(String),

    #[error("no sign change of the function on [{lo}, {hi}]")]
    NoSignChange { lo: f64, hi: f64 },

    #[error("singular point: {0}")]
    Singular(String),

    #[error("fit quality: {0}")]
    Fit(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
