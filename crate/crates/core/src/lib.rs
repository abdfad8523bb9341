//! Exact-arithmetic toolkit for numerical semigroups.
//!
//! A numerical semigroup is an additively closed subset of the nonnegative
//! integers that contains 0 and has a finite complement. This crate computes
//! the classical invariants of such a set (gaps, Frobenius number,
//! multiplicity, genus, Apéry sets, pseudo-Frobenius numbers, type, reduced
//! type, minimal generators, embedding dimension), recognizes the structured
//! families built from half-lines, and enumerates all semigroups up to a
//! genus bound so that every classification claim can be checked exhaustively
//! against independent brute-force oracles.
//!
//! The crate is split along those lines:
//!
//! * [`semigroup`]: the canonical representation and every invariant;
//! * [`classify`]: predicates, the explicit construction families, and the
//!   classifiers for almost symmetric / MED semigroups of maximal reduced type;
//! * [`enumerate`]: the semigroup tree, a gap-subset brute-force oracle, and
//!   the exhaustive verification registry;
//! * [`record`]: the line-oriented serialization consumed by the `sgp` CLI.
//!
//! All arithmetic is exact over `i64`; constructors reject inputs that could
//! leave that range.

pub mod classify;
pub mod enumerate;
mod error;
mod intset;
pub mod record;
pub mod semigroup;

pub use error::Error;
pub use intset::IntSet;
pub use semigroup::{AperySet, NumericalSemigroup};

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
