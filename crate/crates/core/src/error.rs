//! Crate-wide error type.

use alloc::string::String;
use core::fmt;

/// Everything that can go wrong when constructing or combining the exact
/// objects in this crate. Operations whose preconditions are checkable data
/// (rather than programmer contracts) return `Result<_, Error>`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A multinomial was asked for with parts that do not sum to `k`.
    MultinomialSumMismatch { k: u64, part_sum: u64 },
    /// `falling_factorial(y, k)` with `k > y`.
    FallingFactorialUnderflow { y: u64, k: u64 },
    /// A partition was declared with part sizes and multiplicities whose
    /// weighted sum differs from the claimed `n`.
    PartitionSumMismatch { n: u64, weighted_sum: u64 },
    /// A partition contained a part of size zero.
    ZeroPart,
    /// Fuss-Catalan degree must be at least 2.
    DegreeTooSmall { d: u64 },
    /// A downdegree sequence does not satisfy `sum(i * r_i) = sum(r_i) - 1`,
    /// so no rooted tree realizes it.
    InfeasibleDowndegrees { vertices: u64, child_slots: u64 },
    /// A seed polynomial term with degree below 2 or multiplicity zero.
    InvalidSeedTerm { degree: u64, color: u64 },
    /// A series with nonzero constant term was substituted into a seed.
    NonzeroConstantTerm,
    /// A colored count was requested for a part size the seed cannot color.
    MissingColor { part: u64 },
    /// A diagonal's endpoints do not name a valid diagonal of an `m`-gon.
    InvalidDiagonal { m: usize, a: usize, b: usize },
    /// Two diagonals of a would-be dissection cross in the interior.
    CrossingDiagonals { a: (usize, usize), b: (usize, usize) },
    /// Polygon too small for the requested operation.
    PolygonTooSmall { m: usize },
    /// A tree with an internal vertex of downdegree 1 has no dissection
    /// counterpart.
    UnaryVertex,
    /// A serialized object could not be parsed.
    Parse { what: &'static str, detail: String },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::MultinomialSumMismatch { k, part_sum } => {
                write!(f, "multinomial parts sum to {part_sum}, expected {k}")
            }
            Error::FallingFactorialUnderflow { y, k } => {
                write!(f, "falling factorial ({y})_{k} needs k <= y")
            }
            Error::PartitionSumMismatch { n, weighted_sum } => {
                write!(f, "partition parts sum to {weighted_sum}, expected {n}")
            }
            Error::ZeroPart => write!(f, "partition parts must be positive"),
            Error::DegreeTooSmall { d } => {
                write!(f, "degree {d} is below the minimum of 2")
            }
            Error::InfeasibleDowndegrees { vertices, child_slots } => write!(
                f,
                "downdegree sequence with {vertices} vertices provides {child_slots} child \
                 slots; a rooted tree needs exactly vertices - 1"
            ),
            Error::InvalidSeedTerm { degree, color } => {
                write!(f, "seed term {degree}:{color} (degrees must be >= 2, colors >= 1)")
            }
            Error::NonzeroConstantTerm => {
                write!(f, "series substituted into a seed must have zero constant term")
            }
            Error::MissingColor { part } => {
                write!(f, "no colors available for parts of size {part}")
            }
            Error::InvalidDiagonal { m, a, b } => {
                write!(f, "({a},{b}) is not a diagonal of a {m}-gon")
            }
            Error::CrossingDiagonals { a, b } => write!(
                f,
                "diagonals ({},{}) and ({},{}) cross",
                a.0, a.1, b.0, b.1
            ),
            Error::PolygonTooSmall { m } => write!(f, "polygon with {m} vertices is too small"),
            Error::UnaryVertex => {
                write!(f, "tree has an internal vertex with exactly one child")
            }
            Error::Parse { what, detail } => write!(f, "cannot parse {what}: {detail}"),
        }
    }
}

impl core::error::Error for Error {}
