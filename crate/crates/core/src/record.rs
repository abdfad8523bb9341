//! The full invariant profile of one semigroup, as a serializable record.
//!
//! Records exist for the CLI: one semigroup per line, keys always in the
//! same order, sets always sorted, so record streams can be diffed byte for
//! byte. The schema is versioned by the leading `v` field; parsing refuses
//! versions it does not know. A Frobenius number of `-1` (for ℕ) is
//! serialized literally.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::classify::{
    classify_almost_symmetric_max_reduced, classify_med_max_reduced, has_maximal_reduced_type,
    is_almost_symmetric, is_half_line, is_med, is_symmetric, Classification,
};
use crate::{Error, IntSet, NumericalSemigroup, Result};

/// Schema version written into, and required of, every record.
pub const SCHEMA_VERSION: &str = "v1";

/// Boolean classification summary.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Flags {
    pub symmetric: bool,
    pub almost_symmetric: bool,
    pub med: bool,
    pub max_reduced_type: bool,
    pub half_line: bool,
}

/// One semigroup with every derived invariant.
///
/// Field order is part of the schema; serialization preserves it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemigroupRecord {
    pub v: String,
    /// Minimal generators, whatever the semigroup was built from.
    pub gens: IntSet,
    pub gaps: IntSet,
    pub frobenius: i64,
    pub multiplicity: i64,
    pub genus: i64,
    #[serde(rename = "type")]
    pub semigroup_type: i64,
    pub reduced_type: i64,
    pub embedding_dimension: i64,
    pub pf: IntSet,
    pub rpf: IntSet,
    /// Apéry set of the multiplicity, sorted.
    pub apery_m: IntSet,
    pub flags: Flags,
    pub classification_as: Classification,
    pub classification_med: Classification,
}

impl SemigroupRecord {
    pub fn from_semigroup(s: &NumericalSemigroup) -> Self {
        let m = s.multiplicity();
        SemigroupRecord {
            v: SCHEMA_VERSION.to_string(),
            gens: s.minimal_generators().clone(),
            gaps: s.gaps(),
            frobenius: s.frobenius(),
            multiplicity: m,
            genus: s.genus(),
            semigroup_type: s.semigroup_type(),
            reduced_type: s.reduced_type(),
            embedding_dimension: s.embedding_dimension(),
            pf: s.pseudo_frobenius(),
            rpf: s.reduced_pf(),
            apery_m: s
                .apery_set(m)
                .expect("multiplicity is a nonzero element")
                .sorted(),
            flags: Flags {
                symmetric: is_symmetric(s),
                almost_symmetric: is_almost_symmetric(s),
                med: is_med(s),
                max_reduced_type: has_maximal_reduced_type(s),
                half_line: is_half_line(s),
            },
            classification_as: classify_almost_symmetric_max_reduced(s),
            classification_med: classify_med_max_reduced(s),
        }
    }

    /// Rebuilds the semigroup from the stored gap set.
    pub fn to_semigroup(&self) -> Result<NumericalSemigroup> {
        if self.v != SCHEMA_VERSION {
            return Err(Error::UnsupportedSchema(self.v.clone()));
        }
        NumericalSemigroup::from_gaps(&self.gaps)
    }

    /// One JSON line, no trailing newline.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("records always serialize")
    }

    /// Parses one JSON line, refusing unknown schema versions.
    pub fn from_json(line: &str) -> Result<Self> {
        let record: SemigroupRecord = serde_json::from_str(line)
            .map_err(|e| Error::BadParameters(format!("invalid record: {e}")))?;
        if record.v != SCHEMA_VERSION {
            return Err(Error::UnsupportedSchema(record.v));
        }
        Ok(record)
    }

    /// Human-oriented rendering: one `key: value` line per field, in schema
    /// order, flags flattened.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "v: {}", self.v);
        let _ = writeln!(out, "gens: {}", self.gens);
        let _ = writeln!(out, "gaps: {}", self.gaps);
        let _ = writeln!(out, "frobenius: {}", self.frobenius);
        let _ = writeln!(out, "multiplicity: {}", self.multiplicity);
        let _ = writeln!(out, "genus: {}", self.genus);
        let _ = writeln!(out, "type: {}", self.semigroup_type);
        let _ = writeln!(out, "reduced_type: {}", self.reduced_type);
        let _ = writeln!(out, "embedding_dimension: {}", self.embedding_dimension);
        let _ = writeln!(out, "pf: {}", self.pf);
        let _ = writeln!(out, "rpf: {}", self.rpf);
        let _ = writeln!(out, "apery_m: {}", self.apery_m);
        let _ = writeln!(out, "symmetric: {}", self.flags.symmetric);
        let _ = writeln!(out, "almost_symmetric: {}", self.flags.almost_symmetric);
        let _ = writeln!(out, "med: {}", self.flags.med);
        let _ = writeln!(out, "max_reduced_type: {}", self.flags.max_reduced_type);
        let _ = writeln!(out, "half_line: {}", self.flags.half_line);
        let _ = writeln!(out, "classification_as: {}", self.classification_as);
        let _ = writeln!(out, "classification_med: {}", self.classification_med);
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::construct_delta_minus;
    use crate::enumerate::{enumerate_by_genus, EnumerationQuery};

    fn sg(gens: &[i64]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(gens).unwrap()
    }

    #[test]
    fn record_for_the_worked_example() {
        let s = construct_delta_minus(7, 4).unwrap();
        let r = SemigroupRecord::from_semigroup(&s);
        assert_eq!(r.v, "v1");
        assert_eq!(r.gens, IntSet::from([7, 8, 9, 11, 12, 13]));
        assert_eq!(r.gaps, IntSet::from([1, 2, 3, 4, 5, 6, 10]));
        assert_eq!(r.frobenius, 10);
        assert_eq!(r.multiplicity, 7);
        assert_eq!(r.genus, 7);
        assert_eq!(r.semigroup_type, 4);
        assert_eq!(r.reduced_type, 4);
        assert_eq!(r.embedding_dimension, 6);
        assert_eq!(r.pf, IntSet::from([4, 5, 6, 10]));
        assert_eq!(r.rpf, IntSet::from([4, 5, 6, 10]));
        assert_eq!(r.apery_m, IntSet::from([0, 8, 9, 11, 12, 13, 17]));
        assert!(r.flags.almost_symmetric && r.flags.max_reduced_type);
        assert!(!r.flags.symmetric && !r.flags.med && !r.flags.half_line);
        assert_eq!(
            r.classification_as,
            Classification::DeltaMinus {
                multiplicity: 7,
                semigroup_type: 4
            }
        );
        assert_eq!(r.classification_med, Classification::No);
    }

    #[test]
    fn text_rendering_is_stable() {
        let r = SemigroupRecord::from_semigroup(&sg(&[3, 5, 7]));
        let expected = "\
v: v1
gens: {3,5,7}
gaps: {1,2,4}
frobenius: 4
multiplicity: 3
genus: 3
type: 2
reduced_type: 2
embedding_dimension: 3
pf: {2,4}
rpf: {2,4}
apery_m: {0,5,7}
symmetric: false
almost_symmetric: true
med: true
max_reduced_type: true
half_line: false
classification_as: delta-minus(3,2)
classification_med: delta-fm(4,3)
";
        assert_eq!(r.to_text(), expected);
    }

    #[test]
    fn naturals_serialize_with_signed_frobenius() {
        let r = SemigroupRecord::from_semigroup(&NumericalSemigroup::naturals());
        assert_eq!(r.frobenius, -1);
        let json = r.to_json();
        assert!(json.contains("\"frobenius\":-1"));
        assert!(json.contains("\"pf\":[-1]"));
        let back = SemigroupRecord::from_json(&json).unwrap();
        assert_eq!(back.to_semigroup().unwrap(), NumericalSemigroup::naturals());
    }

    #[test]
    fn json_roundtrip_over_small_universe() {
        for s in enumerate_by_genus(&EnumerationQuery::new(6)).unwrap() {
            let r = SemigroupRecord::from_semigroup(&s);
            let back = SemigroupRecord::from_json(&r.to_json()).unwrap();
            assert_eq!(back, r);
            assert_eq!(back.to_semigroup().unwrap(), s);
        }
    }

    #[test]
    fn records_are_internally_consistent() {
        for s in enumerate_by_genus(&EnumerationQuery::new(6)).unwrap() {
            let r = SemigroupRecord::from_semigroup(&s);
            assert_eq!(r.pf.len() as i64, r.semigroup_type);
            assert_eq!(r.rpf.len() as i64, r.reduced_type);
            assert_eq!(r.gens.len() as i64, r.embedding_dimension);
            assert_eq!(r.gaps.len() as i64, r.genus);
            assert_eq!(r.apery_m.len() as i64, r.multiplicity);
        }
    }

    #[test]
    fn schema_version_is_enforced() {
        let mut r = SemigroupRecord::from_semigroup(&sg(&[2, 5]));
        r.v = "v0".to_string();
        assert_eq!(
            r.to_semigroup(),
            Err(Error::UnsupportedSchema("v0".to_string()))
        );
        let json = r.to_json();
        assert_eq!(
            SemigroupRecord::from_json(&json),
            Err(Error::UnsupportedSchema("v0".to_string()))
        );
        assert!(matches!(
            SemigroupRecord::from_json("not json"),
            Err(Error::BadParameters(_))
        ));
    }

    #[test]
    fn serialized_key_order_is_frozen() {
        let json = SemigroupRecord::from_semigroup(&sg(&[2, 5])).to_json();
        let keys: Vec<usize> = [
            "\"v\":", "\"gens\":", "\"gaps\":", "\"frobenius\":", "\"multiplicity\":",
            "\"genus\":", "\"type\":", "\"reduced_type\":", "\"embedding_dimension\":",
            "\"pf\":", "\"rpf\":", "\"apery_m\":", "\"flags\":", "\"classification_as\":",
            "\"classification_med\":",
        ]
        .iter()
        .map(|k| json.find(k).unwrap_or_else(|| panic!("missing {k}")))
        .collect();
        assert!(keys.windows(2).all(|w| w[0] < w[1]), "{json}");
    }
}
