use thiserror::Error;

/// Errors raised by the series algebra, the HPM driver and the numerical oracles.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum HpmError {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A caller broke a structural precondition (wrong list lengths, etc.).
    #[error("contract violation: {0}")]
    Contract(String),

    /// Building the right-hand side at a given order failed.
    #[error("order {order}: {source}")]
    AtOrder {
        order: usize,
        #[source]
        source: Box<HpmError>,
    },

    /// The initial value integration produced a non-finite state.
    #[error("integration blew up at eta = {eta}")]
    Integration { eta: f64 },

    /// The shooting bracket does not contain a sign change.
    #[error("no sign change of the far-field mismatch on [{lo}, {hi}]")]
    NoBracket { lo: f64, hi: f64 },

    /// The root finder ran out of iterations.
    #[error("root finder did not converge after {iterations} iterations (|mismatch| = {mismatch:e})")]
    NotConverged { iterations: usize, mismatch: f64 },

    /// Malformed `key = value` input.
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, HpmError>;

pub(crate) fn domain(msg: impl Into<String>) -> HpmError {
    HpmError::Domain(msg.into())
}

pub(crate) fn contract(msg: impl Into<String>) -> HpmError {
    HpmError::Contract(msg.into())
}
