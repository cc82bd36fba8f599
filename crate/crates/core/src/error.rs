use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// Failure modes shared by every kernel.
///
/// The variants fall into three families that callers (the CLI in particular)
/// map to distinct exit codes: bad arguments, missing resources, and
/// numerical breakdown.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("degenerate geometry: {0}")]
    Degenerate(String),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("insufficient zeta zeros: {required} required, {available} available")]
    InsufficientZeros { required: usize, available: usize },

    #[error("zero scan exhausted at t = {max_t} after finding {found} of {requested} zeros")]
    ScanExhausted {
        max_t: f64,
        found: usize,
        requested: usize,
    },

    #[error("trajectory diverged at step {step}")]
    Divergence { step: usize },

    #[error("Newton iteration failed to converge at level {level}")]
    NonConvergence { level: usize },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    /// True for errors caused by the caller's arguments rather than by
    /// missing data or numerical failure.
    pub fn is_argument_error(&self) -> bool {
        matches!(
            self,
            Error::Domain(_) | Error::InvalidInput(_) | Error::Degenerate(_) | Error::Parse { .. }
        )
    }

    pub fn is_resource_error(&self) -> bool {
        matches!(
            self,
            Error::InsufficientZeros { .. } | Error::ScanExhausted { .. }
        )
    }

    pub fn is_numerical_error(&self) -> bool {
        matches!(self, Error::Divergence { .. } | Error::NonConvergence { .. })
    }
}
