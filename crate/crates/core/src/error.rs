use thiserror::Error;

/// Errors raised by the library. Verification failures are reported as data
/// in [`crate::verify::VerifyReport`], never through this type.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the operation's domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// A coefficient index was requested that the sequence does not hold.
    #[error("coefficient a_{needed} requested but sequence ends at a_{available}")]
    Length { needed: usize, available: usize },

    /// The equation does not change sign on any tried bracket.
    #[error("no sign change for {equation} on [{lo}, {hi}]")]
    NoRoot { equation: String, lo: f64, hi: f64 },

    /// A hard size cap was exceeded.
    #[error("limit exceeded: {0}")]
    Limit(String),

    /// The constrained sampler ran out of retries.
    #[error("constraint infeasible after {retries} retries: {reason}")]
    ConstraintInfeasible { retries: usize, reason: String },

    /// A numerical routine could not reach the requested accuracy.
    #[error("precision not reached: {0}")]
    Precision(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
