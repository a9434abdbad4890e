use thiserror::Error;

/// Errors reported by the library. Every validation failure is explicit;
/// nothing is silently clamped or rounded.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("cannot parse `{token}` as a rational number")]
    ParseRational { token: String },

    #[error("possibility space must have between 1 and {max} elements, got {n}")]
    SpaceSize { n: usize, max: usize },

    #[error("space labels must be distinct and non-empty (offending label: `{label}`)")]
    BadLabel { label: String },

    #[error("expected {expected} values, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("value {value} lies outside [0, 1]")]
    ValueOutOfRange { value: String },

    #[error("distribution is not normalized: maximum value is {max}, expected 1")]
    NotNormalized { max: String },

    #[error("mass function is invalid: {reason}")]
    BadMass { reason: String },

    #[error("operands live on different possibility spaces")]
    SpaceMismatch,

    #[error("event mask {mask:#b} does not fit a space of {n} elements")]
    BadEventMask { mask: u32, n: usize },

    #[error("upper probability table is invalid: {reason}")]
    BadTable { reason: String },

    #[error("the conjunction incurs sure loss: its credal set is empty")]
    SureLoss,

    #[error("{op} requires a 2-alternating upper probability")]
    NotTwoAlternating { op: &'static str },

    #[error("{op} supports at most {max} elements, got {n}")]
    SizeBound {
        op: &'static str,
        n: usize,
        max: usize,
    },

    #[error("unknown label `{label}`")]
    UnknownLabel { label: String },

    #[error("event must be non-empty")]
    EmptyEvent,

    #[error("witness construction precondition failed: {reason}")]
    WitnessPrecondition { reason: String },

    #[error("payoff matrix rows must have equal, non-zero length")]
    BadMatrixShape,

    #[error("malformed input document: {message}")]
    InputFormat { message: String },
}
