use thiserror::Error;

/// Errors reported by constructors, queries, and the verification harness.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// `from_generators` was given an empty list.
    #[error("generator list is empty")]
    EmptyGenerators,

    /// A generator or gap was zero or negative.
    #[error("{0} is not a positive integer")]
    NotPositive(i64),

    /// The generators have a common divisor greater than 1, so the
    /// complement would be infinite.
    #[error("generators have gcd {0} > 1, so the complement is infinite")]
    GcdNotOne(i64),

    /// The complement of the proposed gap set is not additively closed;
    /// carries a witness pair of elements whose sum lands in the gaps.
    #[error("not additively closed: {0} and {1} are elements but {0} + {1} is a gap")]
    NotClosed(i64, i64),

    /// An Apéry set was requested for a modulus that is not a nonzero
    /// element of the semigroup.
    #[error("{0} is not a nonzero element of the semigroup")]
    NotMember(i64),

    /// The semigroup has a single minimal generator (only ℕ does).
    #[error("the semigroup has embedding dimension 1, no second generator")]
    NoSecondGenerator,

    /// An input is too large for the 64-bit working range.
    #[error("{0} exceeds the 64-bit working range")]
    Overflow(i64),

    /// Construction parameters outside the documented range.
    #[error("bad parameters: {0}")]
    BadParameters(String),

    /// The requested Frobenius number is a multiple of the multiplicity.
    #[error("{multiplicity} divides {frobenius}, which therefore cannot be a gap")]
    Divides { frobenius: i64, multiplicity: i64 },

    /// A genus bound above the configured cap.
    #[error("genus bound {requested} exceeds the cap {cap}")]
    CapExceeded { requested: u32, cap: u32 },

    /// An id not present in the verification registry.
    #[error("unknown theorem id `{0}`")]
    UnknownTheorem(String),

    /// An identifier not present in the filter registry.
    #[error("unknown predicate `{0}`")]
    UnknownPredicate(String),

    /// A serialized record with an unsupported schema version.
    #[error("unsupported record schema version `{0}`")]
    UnsupportedSchema(String),
}
