use crate::ring::RingId;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("operation is undefined on the empty multiset")]
    EmptyMultiset,
    #[error("ring mismatch: expected {expected}, found {found}")]
    RingMismatch { expected: RingId, found: RingId },
    #[error("second operand is not a sub-multiset of the first")]
    NotSubmultiset,
    #[error("multiset is not bioperational")]
    NotBioperational,
    #[error("{0} is not prime")]
    NotPrime(i64),
    #[error("integer overflow in exact arithmetic")]
    Overflow,
    #[error("division by zero")]
    ZeroDivision,
    #[error("product is one; no completing element exists")]
    ProductIsOne,
    #[error("ring {ring} does not support {operation}")]
    UnsupportedRing {
        ring: RingId,
        operation: &'static str,
    },
    #[error("precondition violated: {0}")]
    PreconditionViolation(String),
    #[error("search budget of {budget} nodes exceeded")]
    SearchBudgetExceeded { budget: u64 },
    #[error("internal invariant violated: {0}")]
    InternalInvariantViolation(String),
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("invalid element: {0}")]
    InvalidElement(String),
}

impl Error {
    /// Stable machine-readable name of the error variant, used by the CLI
    /// diagnostic stream.
    pub fn name(&self) -> &'static str {
        match self {
            Error::EmptyMultiset => "EmptyMultiset",
            Error::RingMismatch { .. } => "RingMismatch",
            Error::NotSubmultiset => "NotSubmultiset",
            Error::NotBioperational => "NotBioperational",
            Error::NotPrime(_) => "NotPrime",
            Error::Overflow => "OverflowError",
            Error::ZeroDivision => "ZeroDivision",
            Error::ProductIsOne => "ProductIsOne",
            Error::UnsupportedRing { .. } => "UnsupportedRing",
            Error::PreconditionViolation(_) => "PreconditionViolation",
            Error::SearchBudgetExceeded { .. } => "SearchBudgetExceeded",
            Error::InternalInvariantViolation(_) => "InternalInvariantViolation",
            Error::Parse { .. } => "ParseError",
            Error::InvalidElement(_) => "InvalidElement",
        }
    }

    /// True for errors caused by malformed input text rather than domain state.
    pub fn is_parse_error(&self) -> bool {
        matches!(self, Error::Parse { .. })
    }
}
