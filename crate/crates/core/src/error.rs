//! Error type shared across the crate.

use thiserror::Error;

/// Errors raised by group construction, lattice building, data generation
/// and training.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("group closure exceeded the cap of {cap} elements")]
    CapExceeded { cap: usize },

    #[error("generator matrix {index} is not invertible")]
    NonInvertibleGenerator { index: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("not a subgroup: {0}")]
    NotASubgroup(String),

    #[error("matrix is not idempotent: max deviation {0:.3e}")]
    NotIdempotent(f64),

    #[error("closed-set family exceeded the cap of {cap} intersections")]
    FamilyTooLarge { cap: usize },

    #[error("lattice covers only {covered} of {ambient} dimensions")]
    LatticeIncomplete { covered: usize, ambient: usize },

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("malformed input: {0}")]
    MalformedInput(String),

    #[error("training diverged: non-finite loss at epoch {epoch}")]
    Diverged { epoch: usize },

    #[error("normality precondition violated: {0}")]
    NormalityViolation(String),

    #[error("value {0} is outside the vocabulary")]
    OutOfVocabulary(i64),
}

pub type Result<T> = std::result::Result<T, Error>;
