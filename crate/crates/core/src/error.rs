use thiserror::Error;

/// Errors produced by the net, root system and oracle computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unsupported group {0}")]
    UnsupportedGroup(String),

    #[error("polynomial division leaves a nonzero remainder")]
    NonExactDivision,

    #[error("parabolic kernel has dimension {0}, expected 1")]
    DegenerateParabolic(usize),

    #[error("sample has length {got}, expected {expected}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("sample does not lie in the span of the root system")]
    SampleOutsideSpan,

    #[error("invalid sample: {0}")]
    InvalidSample(String),

    #[error("sample size {n} exceeds the limit {limit}")]
    SampleTooLarge { n: usize, limit: usize },

    #[error("group {group} has order {order}, above the enumeration limit {limit}")]
    GroupTooLarge {
        group: String,
        order: u128,
        limit: u64,
    },

    #[error("sample is not in general position: {0}")]
    NonGenericSample(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("exact value does not fit in 64 bits: {0}")]
    Overflow(String),

    #[error("oracle invariant violated: {0}")]
    OracleViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
