//! Canonical semigroup representation and its invariants.
//!
//! A [`NumericalSemigroup`] stores a boolean membership table over the window
//! `[0, F+1]`, where `F` is the Frobenius number (the largest integer not in
//! the set). Everything outside the window is determined: negative integers
//! are never elements, integers above `F` always are. The full monoid ℕ is
//! represented with `F = -1` and an all-true window `[0, 0]`.
//!
//! Conventions for ℕ: `F = -1`, multiplicity 1, genus 0, minimal generators
//! `{1}`, and `PF = rPF = {-1}`, so type and reduced type are both 1. Every
//! operation is total under these conventions.

use std::hash::{Hash, Hasher};
use std::sync::OnceLock;

use crate::{Error, IntSet, Result};

/// A numerical semigroup: an additively closed subset of ℕ containing 0
/// whose complement is finite.
#[derive(Debug, Clone)]
pub struct NumericalSemigroup {
    /// Membership over `[0, F+1]`; always `len = F + 2` (a single `true`
    /// entry when the set is all of ℕ).
    membership: Vec<bool>,
    frobenius: i64,
    multiplicity: i64,
    genus: i64,
    msg_cache: OnceLock<IntSet>,
}

/// The Apéry set of a nonzero element `n`: the least element of the
/// semigroup in each residue class modulo `n`.
///
/// Slot `i` holds the least element congruent to `i (mod n)`; slot 0 is
/// always 0, and the largest slot minus `n` recovers the Frobenius number.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AperySet {
    modulus: i64,
    elements: Vec<i64>,
}

impl AperySet {
    pub fn modulus(&self) -> i64 {
        self.modulus
    }

    /// Residue-indexed slots: `elements()[i] ≡ i (mod n)`.
    pub fn elements(&self) -> &[i64] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn max(&self) -> i64 {
        *self.elements.iter().max().expect("Apéry set is never empty")
    }

    /// The slots as a sorted set.
    pub fn sorted(&self) -> IntSet {
        IntSet::from_vec(self.elements.clone())
    }
}

fn gcd(mut a: i64, mut b: i64) -> i64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Inputs are rejected when `3 * max(input)` would leave `i64`; the largest
/// quantity any operation derives is below three times the largest input.
pub(crate) const MAX_INPUT: i64 = i64::MAX / 3;

impl NumericalSemigroup {
    /// The full monoid ℕ.
    pub fn naturals() -> Self {
        Self::from_table(vec![true])
    }

    /// Builds a semigroup from a normalized membership table.
    ///
    /// `table[0]` must be true and the table must be additively closed on its
    /// window; callers guarantee closure (public constructors validate it,
    /// the enumeration tree preserves it by removing minimal generators).
    pub(crate) fn from_table(mut table: Vec<bool>) -> Self {
        debug_assert!(!table.is_empty() && table[0], "0 is always an element");
        match table.iter().rposition(|&member| !member) {
            None => NumericalSemigroup {
                membership: vec![true],
                frobenius: -1,
                multiplicity: 1,
                genus: 0,
                msg_cache: OnceLock::new(),
            },
            Some(f) => {
                if table.len() == f + 1 {
                    table.push(true);
                } else {
                    table.truncate(f + 2);
                }
                let multiplicity = (1..table.len())
                    .find(|&i| table[i])
                    .expect("the entry following the last gap is an element")
                    as i64;
                let genus = table.iter().filter(|&&member| !member).count() as i64;
                NumericalSemigroup {
                    membership: table,
                    frobenius: f as i64,
                    multiplicity,
                    genus,
                    msg_cache: OnceLock::new(),
                }
            }
        }
    }

    /// The submonoid generated by `gens`, which must have gcd 1 for the
    /// complement to be finite.
    ///
    /// Membership is computed by forward dynamic programming. Once a run of
    /// `m` consecutive elements appears (`m` the least generator), every
    /// larger integer is an element, so the scan stops there; such a run
    /// always appears by `min * max`, because each residue class modulo `m`
    /// is reached by a sum of fewer than `m` copies of the other generators.
    pub fn from_generators(gens: &[i64]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if let Some(&bad) = gens.iter().find(|&&g| g < 1) {
            return Err(Error::NotPositive(bad));
        }
        let mut gens: Vec<i64> = gens.to_vec();
        gens.sort_unstable();
        gens.dedup();

        let smallest = gens[0];
        let largest = gens[gens.len() - 1];
        if largest > MAX_INPUT {
            return Err(Error::Overflow(largest));
        }
        let divisor = gens.iter().fold(0, |d, &g| gcd(d, g));
        if divisor > 1 {
            return Err(Error::GcdNotOne(divisor));
        }
        let bound = smallest
            .checked_mul(largest)
            .ok_or(Error::Overflow(largest))?;

        let mut table = Vec::with_capacity((smallest + largest + 2) as usize);
        table.push(true);
        let mut run = 1; // consecutive elements ending at the table's top
        let mut x = 1i64;
        while run < smallest {
            debug_assert!(x <= bound, "a full residue run must appear by min*max");
            let member = gens
                .iter()
                .take_while(|&&g| g <= x)
                .any(|&g| table[(x - g) as usize]);
            table.push(member);
            run = if member { run + 1 } else { 0 };
            x += 1;
        }
        Ok(Self::from_table(table))
    }

    /// The semigroup whose complement is exactly `gaps`.
    ///
    /// Fails with a witness pair when the complement of `gaps` is not
    /// additively closed.
    pub fn from_gaps(gaps: &IntSet) -> Result<Self> {
        let Some(last) = gaps.last() else {
            return Ok(Self::naturals());
        };
        let first = gaps.first().expect("nonempty");
        if first < 1 {
            return Err(Error::NotPositive(first));
        }
        if last > MAX_INPUT {
            return Err(Error::Overflow(last));
        }
        let mut table = vec![true; (last + 2) as usize];
        for gap in gaps.iter() {
            table[gap as usize] = false;
        }
        // Closure only needs checking inside the window: sums above the
        // largest gap are elements automatically.
        for a in 1..=last {
            if !table[a as usize] {
                continue;
            }
            for b in a..=(last - a) {
                if table[b as usize] && !table[(a + b) as usize] {
                    return Err(Error::NotClosed(a, b));
                }
            }
        }
        Ok(Self::from_table(table))
    }

    /// Removes a minimal generator larger than the Frobenius number,
    /// producing the child semigroup of the enumeration tree.
    pub(crate) fn without_generator(&self, x: i64) -> Self {
        debug_assert!(x > self.frobenius && x >= 1 && self.contains(x));
        debug_assert!(self.minimal_generators().contains(x));
        let mut table = vec![true; (x + 2) as usize];
        table[..self.membership.len()].copy_from_slice(&self.membership);
        table[x as usize] = false;
        Self::from_table(table)
    }

    /// Largest integer not in the set; `-1` for ℕ.
    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    /// Least nonzero element; 1 for ℕ.
    pub fn multiplicity(&self) -> i64 {
        self.multiplicity
    }

    /// Number of gaps.
    pub fn genus(&self) -> i64 {
        self.genus
    }

    /// Whether this is the full monoid ℕ.
    pub fn is_naturals(&self) -> bool {
        self.frobenius == -1
    }

    pub fn contains(&self, x: i64) -> bool {
        if x < 0 {
            false
        } else if x > self.frobenius {
            true
        } else {
            self.membership[x as usize]
        }
    }

    /// All positive integers not in the set, in increasing order.
    pub fn gaps(&self) -> IntSet {
        (1..=self.frobenius).filter(|&x| !self.contains(x)).collect()
    }

    /// The Apéry set of `n`, which must be a nonzero element.
    pub fn apery_set(&self, n: i64) -> Result<AperySet> {
        if n <= 0 || !self.contains(n) {
            return Err(Error::NotMember(n));
        }
        let mut elements = vec![-1i64; n as usize];
        let mut unfilled = n;
        let mut x = 0i64;
        while unfilled > 0 {
            // All slots fill by F + n: the stretch [F+1, F+n] covers every
            // residue class with elements.
            if self.contains(x) {
                let slot = &mut elements[(x % n) as usize];
                if *slot < 0 {
                    *slot = x;
                    unfilled -= 1;
                }
            }
            x += 1;
        }
        Ok(AperySet { modulus: n, elements })
    }

    /// Elements of `Ap(S, n)` maximal under the order `x ≤ y iff y - x ∈ S`.
    pub fn apery_maximals(&self, n: i64) -> Result<IntSet> {
        let apery = self.apery_set(n)?;
        let slots = apery.elements();
        let maximals = slots
            .iter()
            .copied()
            .filter(|&w| {
                !slots
                    .iter()
                    .any(|&other| other != w && self.contains(other - w))
            })
            .collect();
        Ok(maximals)
    }

    /// Pseudo-Frobenius numbers, computed by shifting the maximal Apéry
    /// elements of the multiplicity down by the multiplicity.
    ///
    /// [`pf_bruteforce`](Self::pf_bruteforce) computes the same set straight
    /// from the definition and serves as its independent check.
    pub fn pseudo_frobenius(&self) -> IntSet {
        let m = self.multiplicity;
        self.apery_maximals(m)
            .expect("multiplicity is a nonzero element")
            .iter()
            .map(|w| w - m)
            .collect()
    }

    /// Pseudo-Frobenius numbers by definition: integers `x` outside the set
    /// with `x + s` inside for every nonzero element `s`.
    ///
    /// Only `s ≤ F - x` needs testing, since larger sums land above the
    /// Frobenius number. The scan starts at `-1` so the ℕ convention
    /// `PF(ℕ) = {-1}` falls out of the same rule.
    pub fn pf_bruteforce(&self) -> IntSet {
        let f = self.frobenius;
        (-1..=f)
            .filter(|&x| !self.contains(x))
            .filter(|&x| {
                (1..=(f - x).max(0)).all(|s| !self.contains(s) || self.contains(x + s))
            })
            .collect()
    }

    /// The type: number of pseudo-Frobenius numbers.
    pub fn semigroup_type(&self) -> i64 {
        self.pseudo_frobenius().len() as i64
    }

    /// Gaps in the window `[F - m + 1, F]`, the reduced pseudo-Frobenius
    /// numbers.
    pub fn reduced_pf(&self) -> IntSet {
        let f = self.frobenius;
        let m = self.multiplicity;
        (f - m + 1..=f).filter(|&x| !self.contains(x)).collect()
    }

    /// The reduced type: number of reduced pseudo-Frobenius numbers.
    pub fn reduced_type(&self) -> i64 {
        self.reduced_pf().len() as i64
    }

    /// The minimal generating system.
    ///
    /// Candidates are the nonzero Apéry elements of the multiplicity plus
    /// the multiplicity itself; a candidate survives iff it is not a sum of
    /// two nonzero elements. Computed once and cached.
    pub fn minimal_generators(&self) -> &IntSet {
        self.msg_cache.get_or_init(|| {
            let m = self.multiplicity;
            let apery = self
                .apery_set(m)
                .expect("multiplicity is a nonzero element");
            let mut candidates: Vec<i64> = apery
                .elements()
                .iter()
                .copied()
                .filter(|&w| w != 0)
                .collect();
            candidates.push(m);
            candidates.retain(|&x| !self.is_sum_of_two_elements(x));
            IntSet::from_vec(candidates)
        })
    }

    fn is_sum_of_two_elements(&self, x: i64) -> bool {
        let m = self.multiplicity;
        (m..=x - m).any(|s| self.contains(s) && self.contains(x - s))
    }

    /// Number of minimal generators.
    pub fn embedding_dimension(&self) -> i64 {
        self.minimal_generators().len() as i64
    }

    /// The second-smallest minimal generator; only ℕ lacks one.
    pub fn second_generator(&self) -> Result<i64> {
        self.minimal_generators()
            .as_slice()
            .get(1)
            .copied()
            .ok_or(Error::NoSecondGenerator)
    }
}

impl PartialEq for NumericalSemigroup {
    fn eq(&self, other: &Self) -> bool {
        // Tables are normalized to the window [0, F+1], so table equality is
        // equality of gap sets.
        self.frobenius == other.frobenius && self.membership == other.membership
    }
}

impl Eq for NumericalSemigroup {}

impl Hash for NumericalSemigroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.frobenius.hash(state);
        self.membership.hash(state);
    }
}
