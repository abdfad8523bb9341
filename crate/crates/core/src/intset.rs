use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A sorted, duplicate-free set of integers with value semantics.
///
/// Used for gap sets, pseudo-Frobenius sets, and minimal generating systems.
/// Elements may be negative (the convention for ℕ puts −1 in its
/// pseudo-Frobenius set).
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntSet(Vec<i64>);

impl IntSet {
    pub fn new() -> Self {
        IntSet(Vec::new())
    }

    /// Builds a set from arbitrary values, sorting and deduplicating.
    pub fn from_vec(mut values: Vec<i64>) -> Self {
        values.sort_unstable();
        values.dedup();
        IntSet(values)
    }

    pub fn contains(&self, x: i64) -> bool {
        self.0.binary_search(&x).is_ok()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> Option<i64> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<i64> {
        self.0.last().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = i64> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    pub fn to_vec(&self) -> Vec<i64> {
        self.0.clone()
    }
}

impl From<Vec<i64>> for IntSet {
    fn from(values: Vec<i64>) -> Self {
        IntSet::from_vec(values)
    }
}

impl<const N: usize> From<[i64; N]> for IntSet {
    fn from(values: [i64; N]) -> Self {
        IntSet::from_vec(values.to_vec())
    }
}

impl FromIterator<i64> for IntSet {
    fn from_iter<I: IntoIterator<Item = i64>>(iter: I) -> Self {
        IntSet::from_vec(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a IntSet {
    type Item = i64;
    type IntoIter = std::iter::Copied<std::slice::Iter<'a, i64>>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter().copied()
    }
}

impl fmt::Display for IntSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for IntSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.0.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for IntSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let values = Vec::<i64>::deserialize(deserializer)?;
        for w in values.windows(2) {
            if w[0] >= w[1] {
                return Err(D::Error::custom("set elements must be strictly increasing"));
            }
        }
        Ok(IntSet(values))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_vec_sorts_and_dedups() {
        let s = IntSet::from_vec(vec![5, 1, 3, 1, 5]);
        assert_eq!(s.as_slice(), &[1, 3, 5]);
    }

    #[test]
    fn contains_uses_binary_search() {
        let s = IntSet::from([1, 2, 4]);
        assert!(s.contains(4));
        assert!(!s.contains(3));
        assert!(!s.contains(-1));
    }

    #[test]
    fn display_is_braced_and_compact() {
        assert_eq!(IntSet::from([4, 5, 6, 10]).to_string(), "{4,5,6,10}");
        assert_eq!(IntSet::new().to_string(), "{}");
        assert_eq!(IntSet::from([-1]).to_string(), "{-1}");
    }

    #[test]
    fn deserialize_rejects_unsorted_input() {
        assert!(serde_json::from_str::<IntSet>("[1,3,2]").is_err());
        assert!(serde_json::from_str::<IntSet>("[1,1]").is_err());
        let s: IntSet = serde_json::from_str("[-1]").unwrap();
        assert_eq!(s.as_slice(), &[-1]);
    }
}
