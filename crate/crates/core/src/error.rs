use thiserror::Error;

/// Errors raised by the library layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// The pair falls into a case excluded from the problem (`y = 0` or `x = y`).
    #[error("degenerate pair (x={x}, y={y}): the cases y = 0 and x = y are excluded")]
    Degenerate { x: String, y: String },

    /// A caller handed over a malformed input window or record.
    #[error("usage error: {0}")]
    Usage(String),

    /// A search exceeded its hard state budget.
    #[error("state cap of {cap} exceeded for modulus {modulus}")]
    CapExceeded { modulus: u64, cap: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
