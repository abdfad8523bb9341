//! Predicates, half-line construction families, and structure classifiers.
//!
//! Three explicit families are built here. Writing Δ(m) for the half-line
//! `{0} ∪ {x : x ≥ m}`:
//!
//! * [`construct_half_line`]: Δ(m) itself (Δ(1) = ℕ);
//! * [`construct_delta_minus`]: Δ(m) with the single element `2m - t`
//!   removed, defined for `1 ≤ t ≤ m - 1`;
//! * [`construct_delta_fm`]: `⟨m⟩ ∪ {x : x ≥ F + 1}`, the largest semigroup
//!   with multiplicity `m` and Frobenius number `F`.
//!
//! The classifiers decide membership in these families structurally, by
//! rebuilding the unique candidate from `(F, m)` and comparing sets. They
//! deliberately avoid the defining predicates (almost symmetric, maximal
//! reduced type, maximal embedding dimension), so that the exhaustive checks
//! in [`crate::enumerate`] compare two genuinely independent routes.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::semigroup::MAX_INPUT;
use crate::{Error, NumericalSemigroup, Result};

/// Verdict of the family classifiers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Classification {
    /// A half-line Δ(m), ℕ included.
    HalfLine,
    /// Symmetric; the classifiers treat this as its own terminal verdict.
    Symmetric,
    /// Δ(m) ∖ {2m - t} for the recorded multiplicity and type.
    DeltaMinus {
        multiplicity: i64,
        semigroup_type: i64,
    },
    /// ⟨m⟩ ∪ {x : x ≥ F + 1} for the recorded Frobenius number and
    /// multiplicity.
    DeltaFm { frobenius: i64, multiplicity: i64 },
    /// Not in the family the classifier recognizes.
    No,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Classification::HalfLine => f.write_str("half-line"),
            Classification::Symmetric => f.write_str("symmetric"),
            Classification::DeltaMinus {
                multiplicity,
                semigroup_type,
            } => write!(f, "delta-minus({multiplicity},{semigroup_type})"),
            Classification::DeltaFm {
                frobenius,
                multiplicity,
            } => write!(f, "delta-fm({frobenius},{multiplicity})"),
            Classification::No => f.write_str("no"),
        }
    }
}

impl FromStr for Classification {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        fn pair(args: &str) -> Option<(i64, i64)> {
            let inner = args.strip_suffix(')')?;
            let (a, b) = inner.split_once(',')?;
            Some((a.trim().parse().ok()?, b.trim().parse().ok()?))
        }
        match text {
            "half-line" => return Ok(Classification::HalfLine),
            "symmetric" => return Ok(Classification::Symmetric),
            "no" => return Ok(Classification::No),
            _ => {}
        }
        if let Some((multiplicity, semigroup_type)) =
            text.strip_prefix("delta-minus(").and_then(pair)
        {
            return Ok(Classification::DeltaMinus {
                multiplicity,
                semigroup_type,
            });
        }
        if let Some((frobenius, multiplicity)) = text.strip_prefix("delta-fm(").and_then(pair) {
            return Ok(Classification::DeltaFm {
                frobenius,
                multiplicity,
            });
        }
        Err(Error::BadParameters(format!(
            "unrecognized classification `{text}`"
        )))
    }
}

impl Serialize for Classification {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Classification {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

/// A single pseudo-Frobenius number.
pub fn is_symmetric(s: &NumericalSemigroup) -> bool {
    s.semigroup_type() == 1
}

/// Twice the genus equals the Frobenius number plus the type.
pub fn is_almost_symmetric(s: &NumericalSemigroup) -> bool {
    2 * s.genus() == s.frobenius() + s.semigroup_type()
}

/// Maximal embedding dimension: as many minimal generators as the
/// multiplicity allows.
pub fn is_med(s: &NumericalSemigroup) -> bool {
    s.embedding_dimension() == s.multiplicity()
}

/// Every pseudo-Frobenius number already sits in the reduced window.
pub fn has_maximal_reduced_type(s: &NumericalSemigroup) -> bool {
    s.reduced_type() == s.semigroup_type()
}

/// Whether the set is a half-line Δ(m). All gaps sit below the
/// multiplicity exactly when the gaps are `{1, …, m-1}`.
pub fn is_half_line(s: &NumericalSemigroup) -> bool {
    s.frobenius() < s.multiplicity()
}

/// Δ(m) = `{0} ∪ {x : x ≥ m}` for `m ≥ 1`.
pub fn construct_half_line(multiplicity: i64) -> Result<NumericalSemigroup> {
    if multiplicity < 1 {
        return Err(Error::BadParameters(format!(
            "half-line multiplicity must be at least 1, got {multiplicity}"
        )));
    }
    if multiplicity > MAX_INPUT {
        return Err(Error::Overflow(multiplicity));
    }
    let mut table = vec![true; (multiplicity + 1) as usize];
    for slot in table[1..multiplicity as usize].iter_mut() {
        *slot = false;
    }
    Ok(NumericalSemigroup::from_table(table))
}

/// Δ(m) ∖ {2m - t} for `1 ≤ t ≤ m - 1`.
///
/// Removing `2m - t` from the half-line keeps the set closed because any sum
/// of two nonzero elements is at least `2m > 2m - t`. The parameter `t` is
/// the resulting type.
pub fn construct_delta_minus(multiplicity: i64, semigroup_type: i64) -> Result<NumericalSemigroup> {
    if semigroup_type < 1 || semigroup_type > multiplicity - 1 {
        return Err(Error::BadParameters(format!(
            "delta-minus requires 1 <= t <= m - 1, got m = {multiplicity}, t = {semigroup_type}"
        )));
    }
    if multiplicity > MAX_INPUT / 2 {
        return Err(Error::Overflow(multiplicity));
    }
    let removed = 2 * multiplicity - semigroup_type;
    let mut table = vec![true; (removed + 2) as usize];
    for slot in table[1..multiplicity as usize].iter_mut() {
        *slot = false;
    }
    table[removed as usize] = false;
    Ok(NumericalSemigroup::from_table(table))
}

/// Δ(F, m) = `⟨m⟩ ∪ {x : x ≥ F + 1}`: multiples of `m` up to `F`, everything
/// afterwards.
///
/// Requires `2 ≤ m < F` and `m ∤ F`, so that `F` really is the largest gap.
pub fn construct_delta_fm(frobenius: i64, multiplicity: i64) -> Result<NumericalSemigroup> {
    if multiplicity < 2 || multiplicity >= frobenius {
        return Err(Error::BadParameters(format!(
            "delta-fm requires 2 <= m < F, got F = {frobenius}, m = {multiplicity}"
        )));
    }
    if frobenius % multiplicity == 0 {
        return Err(Error::Divides {
            frobenius,
            multiplicity,
        });
    }
    if frobenius > MAX_INPUT {
        return Err(Error::Overflow(frobenius));
    }
    let mut table = vec![true; (frobenius + 2) as usize];
    for x in 1..=frobenius {
        table[x as usize] = x % multiplicity == 0;
    }
    Ok(NumericalSemigroup::from_table(table))
}

/// A semigroup with the given type and embedding dimension, for any
/// `2 ≤ t ≤ e - 1`: the witness is Δ(e + 1) ∖ {2(e + 1) - t}.
pub fn exists_with_type_and_edim(
    semigroup_type: i64,
    embedding_dimension: i64,
) -> Result<NumericalSemigroup> {
    if semigroup_type < 2 || semigroup_type > embedding_dimension - 1 {
        return Err(Error::BadParameters(format!(
            "requires 2 <= t <= e - 1, got t = {semigroup_type}, e = {embedding_dimension}"
        )));
    }
    let multiplicity = embedding_dimension
        .checked_add(1)
        .ok_or(Error::Overflow(embedding_dimension))?;
    construct_delta_minus(multiplicity, semigroup_type)
}

/// Structural classifier for the almost symmetric, maximal reduced type
/// family: half-lines and symmetric sets are terminal verdicts; otherwise
/// the only possible member with Frobenius number `F` and multiplicity `m`
/// is Δ(m) ∖ {2m - t} with `t = 2m - F`, which is rebuilt and compared.
pub fn classify_almost_symmetric_max_reduced(s: &NumericalSemigroup) -> Classification {
    if is_half_line(s) {
        return Classification::HalfLine;
    }
    if is_symmetric(s) {
        return Classification::Symmetric;
    }
    let multiplicity = s.multiplicity();
    let semigroup_type = 2 * multiplicity - s.frobenius();
    if semigroup_type >= 2 && semigroup_type < multiplicity {
        if let Ok(candidate) = construct_delta_minus(multiplicity, semigroup_type) {
            if &candidate == s {
                return Classification::DeltaMinus {
                    multiplicity,
                    semigroup_type,
                };
            }
        }
    }
    Classification::No
}

/// Structural classifier for the maximal embedding dimension, maximal
/// reduced type family: half-lines are terminal; otherwise the only
/// possible member is Δ(F, m), rebuilt from the set's own Frobenius number
/// and multiplicity and compared.
pub fn classify_med_max_reduced(s: &NumericalSemigroup) -> Classification {
    if is_half_line(s) {
        return Classification::HalfLine;
    }
    let frobenius = s.frobenius();
    let multiplicity = s.multiplicity();
    if multiplicity >= 2 && frobenius % multiplicity != 0 {
        if let Ok(candidate) = construct_delta_fm(frobenius, multiplicity) {
            if &candidate == s {
                return Classification::DeltaFm {
                    frobenius,
                    multiplicity,
                };
            }
        }
    }
    Classification::No
}
