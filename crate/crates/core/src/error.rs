use thiserror::Error;

/// Errors surfaced by the library.
///
/// The CLI maps these onto its exit-code contract: validation and
/// unsupported-input problems are usage errors, resource/budget problems are
/// distinct from genuine check failures, and oracle inconclusiveness is
/// never silently folded into a result.
#[derive(Debug, Error)]
pub enum Error {
    /// Invalid recipe parameters or malformed input.
    #[error("validation: {0}")]
    Validation(String),

    /// A configured budget (word length, big-integer size, window cap) was exceeded.
    #[error("resource budget exceeded: {0}")]
    Resource(String),

    /// An index or window outside the valid range of an operation.
    #[error("range: {0}")]
    Range(String),

    /// A length fell outside every closed-form increment interval. Only possible
    /// when the elevation condition c[n+1] >= m[n] fails at the governing index.
    #[error("range gap at n={n}: length {len} not covered; intervals {intervals}")]
    RangeGap {
        n: usize,
        len: String,
        intervals: String,
    },

    /// A verified claim failed on computed data. This is a test-failure signal,
    /// not a recoverable state.
    #[error("claim violated: {0}")]
    TheoremViolation(String),

    /// The brute-force oracle could not certify that a factor set is complete.
    #[error("oracle inconclusive: {0}")]
    OracleInconclusive(String),

    /// A growth-function preset without the capability an operation needs
    /// (e.g. no certified tail bound, or no pointwise evaluation).
    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
