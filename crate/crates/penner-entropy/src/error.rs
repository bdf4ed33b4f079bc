//! Error type shared by all modules.

use alloc::string::String;
use core::fmt;

use crate::transfer::RadiusEnclosure;

/// Everything that can go wrong while building specs or computing with them.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// The edge set is not a tree on the declared vertices (cycle,
    /// disconnected, self-loop, or duplicate edge).
    NotATree(String),
    /// Plumbing dimension below 3. Koszul-dual grading data needs `n >= 3`,
    /// so smaller dimensions are rejected rather than guessed at.
    DimensionTooSmall(i64),
    /// A grading override is out of range, refers to a non-edge, or
    /// conflicts with an earlier override of the same edge.
    BadGrading(String),
    /// A vertex name or handle does not belong to the spec.
    UnknownVertex(String),
    /// The same vertex name was declared twice.
    DuplicateVertex(String),
    /// A trace path does not match the word it claims to come from.
    InconsistentTrace(String),
    /// Characteristic polynomials are only defined for integer matrix kinds.
    WeightedUnsupported,
    /// The word is not of Penner type and the caller did not override.
    NotPennerType,
    /// Collatz-Wielandt iteration hit its cap; the best enclosure found so
    /// far is attached.
    IterationLimit(alloc::boxed::Box<RadiusEnclosure>),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotATree(why) => write!(f, "not a tree: {why}"),
            Error::DimensionTooSmall(n) => write!(f, "dimension n = {n} is below the minimum 3"),
            Error::BadGrading(why) => write!(f, "bad grading override: {why}"),
            Error::UnknownVertex(name) => write!(f, "unknown vertex: {name}"),
            Error::DuplicateVertex(name) => write!(f, "duplicate vertex: {name}"),
            Error::InconsistentTrace(why) => write!(f, "inconsistent trace: {why}"),
            Error::WeightedUnsupported => {
                write!(f, "operation not supported for weighted matrices")
            }
            Error::NotPennerType => write!(
                f,
                "word is not of Penner type (pass the non-Penner override to force the computation)"
            ),
            Error::IterationLimit(enc) => write!(
                f,
                "iteration limit reached before the requested tolerance; best enclosure [{}, {}]",
                enc.lo, enc.hi
            ),
        }
    }
}

impl core::error::Error for Error {}
