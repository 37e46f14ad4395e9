use crate::BigNat;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// The per-part variance `((l+1)^2 - 1) / 12` vanishes for `l = 0`.
    #[error("part width l must be at least 1")]
    ZeroWidth,
    #[error("row index k must be at least 1")]
    ZeroRow,
    #[error("maximum number of parts m must be at least 1")]
    ZeroParts,
    #[error("lower part bound {lower} exceeds upper part bound {upper}")]
    InvalidBounds { lower: usize, upper: usize },
    #[error("part support must not be empty")]
    EmptySupport,
    #[error("expected lower part bound 0, got {0}")]
    NonZeroLower(usize),
    #[error("degenerate variance: every part equals {0}")]
    DegenerateVariance(usize),
    #[error("enumeration space of {states} states exceeds the guard of {guard}")]
    GuardExceeded { states: BigNat, guard: u64 },
}
