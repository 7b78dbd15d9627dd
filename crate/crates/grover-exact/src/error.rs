use thiserror::Error;

/// Errors reported by the exact-math, Grover, simulator, and survey layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator must be nonzero")]
    ZeroDenominator,
    #[error("malformed rational literal `{0}` (expected `p/q` or an integer)")]
    MalformedRational(String),
    #[error("cosine value {0} lies outside [-1, 1]")]
    CosineOutOfRange(String),
    #[error("integer root enumeration requires a monic polynomial of degree >= 1")]
    NotMonic,
    #[error("database size must be at least 1")]
    EmptyDatabase,
    #[error("target count {targets} exceeds database size {size}")]
    TooManyTargets { targets: u64, size: u64 },
    #[error("optimal iteration count is undefined when there are no targets")]
    NoTargets,
    #[error("post-measurement strategy is only defined for target ratio 3/4, got {0}")]
    NotThreeQuarters(String),
    #[error("state dimension {state} does not match database size {size}")]
    DimensionMismatch { state: usize, size: usize },
    #[error("target index {index} out of range 1..={size}")]
    TargetOutOfRange { index: usize, size: usize },
    #[error("duplicate target index {0}")]
    DuplicateTarget(usize),
    #[error("dense state of size {0} exceeds the {max} entry limit", max = crate::simulator::MAX_DENSE_SIZE)]
    StateTooLarge(u64),
    #[error("unknown report format `{0}`")]
    UnknownFormat(String),
}
