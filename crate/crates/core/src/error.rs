use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension m = {0} out of range (expected 2..={max})", max = crate::ring::MAX_DIM)]
    InvalidDimension(u32),

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: u32, right: u32 },

    #[error("bitmask {bits:#b} has bits set at or above position {dim}")]
    BitsOutOfRange { bits: u64, dim: u32 },

    #[error("coordinate {coord} outside [1, {dim}]")]
    CoordinateOutOfRange { coord: u32, dim: u32 },

    #[error("support covers all of [{0}]; the complex would be the whole space")]
    FullSupport(u32),

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("weight {weight} exceeds Gray length {gray_length}")]
    WeightExceedsLength { weight: u64, gray_length: u64 },

    #[error("code has no nonzero codeword")]
    ZeroCode,

    #[error("codewords are not materialized")]
    NotMaterialized,

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}
