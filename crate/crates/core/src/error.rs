use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error in {func}: {detail}")]
    Domain { func: &'static str, detail: String },

    #[error("{what} did not converge: {detail}")]
    NoConvergence { what: &'static str, detail: String },

    #[error("no sign change in [{lo}, {hi}]")]
    NoBracket { lo: f64, hi: f64 },

    #[error("found {found} zeros below {upper}, expected at least {expected}")]
    MissingZeros { expected: usize, found: usize, upper: f64 },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("step size underflow at x = {x}")]
    StepUnderflow { x: f64 },
}

impl Error {
    pub(crate) fn domain(func: &'static str, detail: impl Into<String>) -> Self {
        Error::Domain { func, detail: detail.into() }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
