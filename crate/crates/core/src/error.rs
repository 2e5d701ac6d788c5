use core::fmt;

use crate::families::FamilyId;

/// Errors reported by constructors and operations.
///
/// Every variant is an input-validation failure; once a value such as a
/// [`crate::Semigroup`] has been constructed, its operations are total.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Error {
    /// A generating set must contain at least one element.
    EmptyGenerators,
    /// A generator or parameter that must be ≥ 1 was not.
    NonPositive { value: i64 },
    /// Generating sets are strictly increasing; `next` did not exceed `prev`.
    NotIncreasing { prev: i64, next: i64 },
    /// The generators have a common divisor > 1 and generate no numerical
    /// semigroup.
    GcdNotOne { gcd: i64 },
    /// An Apéry modulus must be a positive element of the semigroup.
    NotAnElement { value: i64 },
    /// A value exceeds the bound that keeps intermediate products within
    /// 62 bits (or keeps table allocations sane).
    TooLarge {
        what: &'static str,
        value: i64,
        max: i64,
    },
    /// Block size n must be ≥ 1.
    ZeroBlockSize,
    /// A block had the wrong number of entries.
    BlockLength { expected: usize, actual: usize },
    /// The family parameter k lies outside the family's validity domain.
    KOutOfDomain { family: FamilyId, k: i64 },
    /// The family has no single parametric membership form.
    UnsupportedFamily { family: FamilyId },
    /// An enumeration range with lower bound above upper bound.
    InvertedRange { lo: i64, hi: i64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Error::EmptyGenerators => write!(f, "generating set is empty"),
            Error::NonPositive { value } => {
                write!(f, "expected a positive integer, got {value}")
            }
            Error::NotIncreasing { prev, next } => {
                write!(
                    f,
                    "generators must be strictly increasing: {prev} then {next}"
                )
            }
            Error::GcdNotOne { gcd } => {
                write!(f, "generators have gcd {gcd}, not a numerical semigroup")
            }
            Error::NotAnElement { value } => {
                write!(f, "{value} is not a positive element of the semigroup")
            }
            Error::TooLarge { what, value, max } => {
                write!(f, "{what} {value} exceeds the supported maximum {max}")
            }
            Error::ZeroBlockSize => write!(f, "block size must be at least 1"),
            Error::BlockLength { expected, actual } => {
                write!(f, "expected a block of {expected} entries, got {actual}")
            }
            Error::KOutOfDomain { family, k } => {
                write!(f, "k = {k} is outside the validity domain of {family}")
            }
            Error::UnsupportedFamily { family } => {
                write!(f, "{family} has no parametric membership form")
            }
            Error::InvertedRange { lo, hi } => {
                write!(f, "inverted range: {lo} > {hi}")
            }
        }
    }
}

impl core::error::Error for Error {}
