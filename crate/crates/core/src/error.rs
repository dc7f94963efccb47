use thiserror::Error;

/// Errors raised by the classification pipeline.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid root system {label}{rank}: {reason}")]
    InvalidType {
        label: String,
        rank: usize,
        reason: &'static str,
    },

    #[error("not a root: {0:?}")]
    NotARoot(Vec<i64>),

    #[error("not a pi-system: {0}")]
    NotPiSystem(String),

    #[error("invalid Kac diagram: {0}")]
    InvalidKac(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("vector {0} is not in the span of the codomain")]
    OutOfSpan(String),

    /// Random search for a general-position element gave up. This never means
    /// "not normal": retrying with a larger cap or another seed is meaningful.
    #[error("random sampling budget exhausted (omega bound {bound}) for h = {h}")]
    RetryBudget { bound: u64, h: String },

    #[error("internal consistency failure: {0}")]
    Inconsistent(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
