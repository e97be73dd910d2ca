//! Exact enumerative combinatorics of convex polygon dissections.
//!
//! Everything here revolves around one family of objects: dissections of a
//! convex polygon by noncrossing diagonals, the rooted plane trees dual to
//! them, and the formal power series whose coefficients count them. All
//! arithmetic is exact (arbitrary-precision integers); there are no floats
//! and no approximations anywhere in this crate.
//!
//! The crate is `no_std` (with `alloc`) so the counting kernel can be reused
//! in constrained environments; IO, rendering, and network cross-checks live
//! in the companion `polycat` crate.
//!
//! Module map:
//!
//! * [`combinatorics`] — binomials, multinomials, falling factorials over
//!   big naturals.
//! * [`partition`] — integer partitions in multiplicity form, with
//!   restricted part sets.
//! * [`catalan`] — Catalan, Fuss-Catalan and super-Catalan numbers, and
//!   counts of plane trees by downdegree sequence.
//! * [`series`] — truncated integer power series, seed polynomials and
//!   fixpoint iteration.
//! * [`lagrange`] — series reversion coefficients and their refinement by
//!   dissection type.
//! * [`dissection`] — polygon dissections: crossing tests, face extraction,
//!   exhaustive enumeration, colored counts.
//! * [`tree`] — rooted plane trees and the bijection with dissections.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod catalan;
pub mod combinatorics;
pub mod dissection;
pub mod error;
pub mod lagrange;
pub mod partition;
pub mod series;
pub mod tree;

pub use catalan::DowndegreeSequence;
pub use combinatorics::Nat;
pub use dissection::{ColoredDissection, Diagonal, Dissection};
pub use error::Error;
pub use partition::PartitionType;
pub use series::{SeedPolynomial, TruncatedSeries};
pub use tree::PlaneTree;
