//! Shared error type.
//!
//! Errors separate *invalid input* (malformed labels, violated preconditions,
//! out-of-range q) from *insufficient data* (a query about a character the
//! built-in tables do not cover). Callers that talk to a user map the former
//! to exit code 2 and the latter to exit code 3.

use alloc::string::String;
use core::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Parts not weakly decreasing or not positive.
    InvalidPartition(String),
    /// Two combinatorial objects that must have equal size do not.
    SizeMismatch { expected: u32, found: u32 },
    /// A beta-set was requested with fewer beads than the partition has rows.
    BeadCountTooSmall { beads: u32, rows: u32 },
    /// A brute-force routine was asked to exceed its enumeration bound.
    CapabilityExceeded { what: &'static str, limit: u32 },
    /// Series tag not recognised.
    UnknownSeries(String),
    /// q is not a prime power (or is below 2).
    NotPrimePower(u64),
    /// q violates the defining constraint of the series.
    QConstraint {
        series: &'static str,
        expected: &'static str,
        q: u64,
    },
    /// Rank is outside the range the series admits.
    RankConstraint {
        series: &'static str,
        n: u32,
        expected: &'static str,
    },
    /// A character label that does not denote a character of the group.
    InvalidLabel(String),
    /// The query is well formed but the built-in data cannot answer it.
    InsufficientData(String),
    /// The labelled character is not invariant under the graph automorphism,
    /// so it has no extension to classify.
    NotSigmaInvariant(String),
    /// The eigenvalue's unit part has no delta-th root inside the calculus.
    UnsupportedUnit { unit: &'static str, delta: u8 },
    /// The q-exponent of the eigenvalue is not divisible by delta, so the
    /// root is not expressible in the calculus.
    NonIntegralRoot { q_exp: u32, delta: u8 },
    /// field_equal was asked to compare a formal field with a resolved one.
    MixedFieldComparison,
    /// An operation requires data the record does not carry.
    MissingRecordData { label: String, field: &'static str },
    /// A consistency check was invoked outside its validity scope.
    OutOfScope(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidPartition(s) => write!(f, "invalid partition: {s}"),
            Error::SizeMismatch { expected, found } => {
                write!(f, "size mismatch: expected {expected}, found {found}")
            }
            Error::BeadCountTooSmall { beads, rows } => {
                write!(f, "beta-set needs at least {rows} beads, got {beads}")
            }
            Error::CapabilityExceeded { what, limit } => {
                write!(f, "{what} only supported up to {limit}")
            }
            Error::UnknownSeries(s) => write!(f, "unknown series tag: {s}"),
            Error::NotPrimePower(q) => write!(f, "q = {q} is not a prime power"),
            Error::QConstraint {
                series,
                expected,
                q,
            } => {
                write!(
                    f,
                    "series {series} requires q of the form {expected}, got {q}"
                )
            }
            Error::RankConstraint {
                series,
                n,
                expected,
            } => {
                write!(f, "series {series} requires n {expected}, got {n}")
            }
            Error::InvalidLabel(s) => write!(f, "invalid character label: {s}"),
            Error::InsufficientData(s) => write!(f, "insufficient data: {s}"),
            Error::NotSigmaInvariant(s) => {
                write!(
                    f,
                    "character {s} is not invariant under the graph automorphism"
                )
            }
            Error::UnsupportedUnit { unit, delta } => {
                write!(
                    f,
                    "no degree-{delta} root of unit {unit} in the field calculus"
                )
            }
            Error::NonIntegralRoot { q_exp, delta } => {
                write!(
                    f,
                    "q-exponent {q_exp} not divisible by {delta}; root not in calculus"
                )
            }
            Error::MixedFieldComparison => {
                write!(f, "cannot compare a formal field with a resolved field")
            }
            Error::MissingRecordData { label, field } => {
                write!(f, "record {label} carries no {field} data")
            }
            Error::OutOfScope(s) => write!(f, "no classification rule covers: {s}"),
        }
    }
}

impl core::error::Error for Error {}

impl Error {
    /// True for errors that mean "the tables cannot answer", as opposed to
    /// "the question was malformed".
    pub fn is_insufficient_data(&self) -> bool {
        matches!(
            self,
            Error::InsufficientData(_) | Error::MissingRecordData { .. }
        )
    }
}
