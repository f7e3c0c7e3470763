//! Error type shared by every evaluator in the crate.

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong when evaluating an invariant function,
/// a pseudometric, or one of the numerical oracles.
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    /// A point lies outside the domain an evaluator was asked about.
    #[error("domain violation: {0}")]
    DomainViolation(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("invalid value: {0}")]
    InvalidValue(String),

    #[error("invalid metric kind: {0}")]
    InvalidKind(String),

    #[error("invalid order: {0}")]
    InvalidOrder(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// The evaluator exists but does not handle this metric kind.
    #[error("unsupported kind: {0}")]
    UnsupportedKind(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    /// A series evaluation was requested outside its certified region.
    #[error("evaluation region violation: {0}")]
    RegionViolation(String),

    /// The query hits a logarithmic singularity of a candidate series.
    #[error("singular point: {0}")]
    SingularPoint(String),

    /// `proven_value` only answers for the exact tuples with a proof behind
    /// them; anything else is refused rather than extrapolated.
    #[error("no proven value for this query: {0}")]
    NotProven(String),

    #[error("no candidate function available at this base point: {0}")]
    InvalidBase(String),

    #[error("optimizer failed to converge: {0}")]
    ConvergenceFailure(String),

    #[error("non-finite sample: {0}")]
    NonFiniteSample(String),

    /// The radial quotient sequence is still drifting at the finest radius.
    #[error("limit estimate did not stabilize: {0}")]
    NoConvergence(String),

    /// Finite-difference cancellation ate more than half the significand.
    #[error("step too small for the requested stencil: {0}")]
    StepTooSmall(String),

    /// The sampled quotient is inconsistent with the requested Taylor order.
    #[error("order mismatch: {0}")]
    OrderMismatch(String),

    #[error("order of vanishing undetermined: {0}")]
    Undetermined(String),

    /// A holomorphic map sent a sampled point outside the declared target.
    #[error("map leaves the target domain: {0}")]
    MapRangeViolation(String),
}
