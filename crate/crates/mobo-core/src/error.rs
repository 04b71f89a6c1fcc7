//! Crate-wide error type.

use core::fmt;

/// Everything that can go wrong in this crate.
///
/// The enumeration-based verifiers refuse inputs beyond their caps instead of
/// truncating; those refusals surface as [`Error::CapExceeded`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Two sequences that must have equal length do not.
    DimensionMismatch { expected: usize, got: usize },
    /// An operation that needs at least one element got none.
    EmptyInput,
    /// A ratio with a zero denominator was requested.
    ZeroDenominator,
    /// The operation is undefined on an all-zero coefficient vector.
    ZeroVector,
    /// A coefficient was negative where non-negative input is required.
    NegativeCoefficient { index: usize },
    /// A coefficient was zero or negative where positive input is required.
    NonPositiveCoefficient { index: usize },
    /// A scaling factor or divisor was zero or negative.
    NonPositiveFactor,
    /// Row scaling produced a non-integer coefficient.
    NonIntegralScale { row: usize, col: usize },
    /// The input is larger than the hard cap of an exhaustive procedure.
    CapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },
    /// Coefficient magnitudes are too large for the kernel's overflow-free
    /// 64-bit table arithmetic.
    MagnitudeOverflow,
    /// A mixed-sign coefficient vector was rejected (signed mode `reject`).
    MixedSignRejected,
    /// A warm-start vector violates the master model it was offered to.
    InvalidIncumbent(&'static str),
    /// An internal consistency check failed; indicates a kernel bug.
    Internal(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionMismatch { expected, got } => {
                write!(f, "dimension mismatch: expected {expected}, got {got}")
            }
            Error::EmptyInput => write!(f, "empty input"),
            Error::ZeroDenominator => write!(f, "zero denominator"),
            Error::ZeroVector => write!(f, "operation undefined on an all-zero vector"),
            Error::NegativeCoefficient { index } => {
                write!(f, "negative coefficient at index {index}")
            }
            Error::NonPositiveCoefficient { index } => {
                write!(f, "non-positive coefficient at index {index}")
            }
            Error::NonPositiveFactor => write!(f, "scaling factor must be positive"),
            Error::NonIntegralScale { row, col } => {
                write!(f, "row scaling yields a non-integer at row {row}, column {col}")
            }
            Error::CapExceeded { what, size, cap } => {
                write!(f, "{what}: size {size} exceeds the hard cap of {cap}")
            }
            Error::MagnitudeOverflow => {
                write!(f, "coefficient magnitudes too large for exact 64-bit kernel arithmetic")
            }
            Error::MixedSignRejected => {
                write!(f, "mixed-sign coefficients rejected (signed mode is `reject`)")
            }
            Error::InvalidIncumbent(why) => write!(f, "invalid incumbent: {why}"),
            Error::Internal(what) => write!(f, "internal error: {what}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}
