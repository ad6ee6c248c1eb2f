use thiserror::Error;

/// Errors raised by the engine. Positions are 1-based, matching the usual
/// `λ_1, …, λ_n` coordinate labels.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid family: {0}")]
    InvalidFamily(String),

    #[error("length mismatch: expected {expected} coordinates, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("dominance violated at positions ({i}, {j}): requires {rule}")]
    DominanceViolation { i: usize, j: usize, rule: &'static str },

    /// `i == j` marks a single coordinate that must itself be a half-integer.
    #[error("integrality violated at positions ({i}, {j}): requires {rule}")]
    IntegralityViolation { i: usize, j: usize, rule: &'static str },

    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("wrong case: {0}")]
    WrongCase(String),

    #[error("not applicable: {0}")]
    NotApplicable(String),

    #[error("not a Schmid weight for {family}: {reason}")]
    NotSchmid { family: String, reason: String },

    #[error("Weyl orbit too large: |W_k| = {size} exceeds limit {limit}")]
    OrbitTooLarge { size: u128, limit: u128 },

    #[error("lemma hypothesis violated: {0}")]
    HypothesisViolated(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
