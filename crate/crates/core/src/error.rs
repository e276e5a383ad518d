use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{what} must not be empty")]
    Empty { what: &'static str },

    #[error("{what} must be positive (entry {index} is zero)")]
    ZeroEntry { what: &'static str, index: usize },

    #[error("divisors are undefined for 0")]
    DivisorsOfZero,

    #[error("not an ordered set partition of {{1..{width}}}: {reason}")]
    NotAPartition { width: usize, reason: String },

    #[error("width {requested} exceeds the expansion cap of {cap}")]
    WidthAboveCap { requested: usize, cap: usize },

    #[error("dimension {requested} is outside 2..={cap}")]
    DimensionOutOfRange { requested: u32, cap: u32 },

    #[error("dimension must be at least 2, got {0}")]
    DimensionBelowTwo(u32),

    #[error("expected {expected} exponents, got {got}")]
    ExponentArity { expected: usize, got: usize },

    #[error("oracle bound {requested} exceeds the cap of {cap}")]
    OracleCapExceeded { requested: u32, cap: u32 },

    #[error("classifier {0} does not apply to this kind of profile")]
    ClassifierMismatch(&'static str),

    #[error("numerator of G_{k} has a nonzero coefficient at degree {degree}")]
    SeriesTailNonzero { k: u32, degree: usize },
}
