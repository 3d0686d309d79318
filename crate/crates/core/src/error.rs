use thiserror::Error;

/// Errors raised by constructions on truncated data.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("horn index {index} out of range for dimension {dim}")]
    HornIndex { index: usize, dim: usize },

    #[error("truncation bounds disagree: {left} vs {right}")]
    BoundMismatch { left: usize, right: usize },

    #[error("bound {bound} too small: {reason}")]
    BoundTooSmall { bound: usize, reason: String },

    #[error("bidegree ({p}, {q}) lies outside the valid shape")]
    OutsideShape { p: usize, q: usize },

    #[error("shape has no usable {0}")]
    InsufficientShape(&'static str),

    #[error("word closure exceeded bound {bound}{}", context.as_deref().map(|c| format!(" ({c})")).unwrap_or_default())]
    BoundExceeded { bound: usize, context: Option<String> },

    #[error("enumeration cap {cap} exceeded")]
    CapExceeded { cap: usize },

    #[error("simplex ({degree}, {index}) is not a simplex of the boundary")]
    NotInBoundary { degree: usize, index: usize },

    #[error("invalid structure: {0}")]
    Invalid(String),

    #[error("degree {degree} outside certified range (bound {bound})")]
    Uncertified { degree: usize, bound: usize },

    #[error("spectrum too short: length {0}")]
    SpectrumTooShort(usize),

    #[error("integer overflow in exact arithmetic")]
    Overflow,
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }

    pub(crate) fn with_context(self, ctx: impl Into<String>) -> Self {
        match self {
            Error::BoundExceeded { bound, context: None } => Error::BoundExceeded {
                bound,
                context: Some(ctx.into()),
            },
            other => other,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
