//! Error type shared by all engine modules.

use thiserror::Error;

/// Errors surfaced by construction, validation, and enumeration.
#[derive(Debug, Error)]
pub enum Error {
    /// A structural invariant failed at construction time.
    #[error("validation error: {0}")]
    Validation(String),

    /// A word is not composable (source/target chain breaks).
    #[error("composition error: {0}")]
    Composition(String),

    /// A functor assignment is inconsistent with endpoints.
    #[error("invalid assignment: {0}")]
    InvalidAssignment(String),

    /// An enumeration would exceed the caller-supplied cap.
    #[error("size error: search space of {required} states exceeds cap {cap}")]
    SizeExceeded { required: u128, cap: u64 },

    /// Bad scalar argument (zero length, non-prime modulus, ...).
    #[error("argument error: {0}")]
    Argument(String),

    /// A map failed to be a homomorphism; carries a witness pair.
    #[error("homomorphism error: {reason} (witness: {witness_a} * {witness_b})")]
    NotHomomorphism {
        reason: String,
        witness_a: String,
        witness_b: String,
    },

    /// A group action is not free; lists the offending cells.
    #[error("fixed-cell error: action is not free on {0:?}")]
    NotFree(Vec<String>),

    /// A requested configuration is outside the supported fragment.
    #[error("unsupported: {0}")]
    Unsupported(String),

    /// Malformed input document (message carries line/column when known).
    #[error("parse error: {0}")]
    Parse(String),

    /// Numerical composability failure in the local chart.
    #[error("composability violation: endpoint gap {gap:.3e} exceeds tolerance {tol:.3e}")]
    Composability { gap: f64, tol: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
