//! Exhaustive enumeration and the verification harness.
//!
//! [`enumerate_by_genus`] walks the semigroup tree: the root is ℕ and the
//! children of `S` are the sets `S ∖ {x}` for each minimal generator `x`
//! exceeding the Frobenius number. Removing such a generator keeps the set
//! closed and grows the genus by one, and every semigroup arises from a
//! unique parent (put its Frobenius number back), so the walk visits each
//! semigroup of genus ≤ bound exactly once.
//!
//! [`enumerate_gapsets_bruteforce`] regenerates a genus slice by filtering
//! all candidate gap subsets instead, solely so the two generators can be
//! compared; nothing in the tree walk is trusted without that cross-check.
//!
//! [`verify`] runs one registered claim over every semigroup in the
//! enumerated universe and reports each counterexample, carrying both of the
//! values whose comparison failed.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use itertools::Itertools;
use serde::Serialize;

use crate::classify::{
    classify_almost_symmetric_max_reduced, classify_med_max_reduced, has_maximal_reduced_type,
    is_almost_symmetric, is_half_line, is_med, is_symmetric, Classification,
};
use crate::{Error, IntSet, NumericalSemigroup, Result};

/// Default ceiling on genus bounds; the tree is exponential in the genus.
pub const DEFAULT_GENUS_CAP: u32 = 30;

/// Ceiling for the subset filter, which scans all `C(2g-1, g)` candidates.
pub const BRUTEFORCE_GENUS_CAP: u32 = 10;

/// Filter applied to enumerated semigroups.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Predicate {
    #[default]
    None,
    Symmetric,
    AlmostSymmetric,
    Med,
    MaxReducedType,
}

impl Predicate {
    pub const ALL: [Predicate; 5] = [
        Predicate::None,
        Predicate::Symmetric,
        Predicate::AlmostSymmetric,
        Predicate::Med,
        Predicate::MaxReducedType,
    ];

    pub fn eval(self, s: &NumericalSemigroup) -> bool {
        match self {
            Predicate::None => true,
            Predicate::Symmetric => is_symmetric(s),
            Predicate::AlmostSymmetric => is_almost_symmetric(s),
            Predicate::Med => is_med(s),
            Predicate::MaxReducedType => has_maximal_reduced_type(s),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Predicate::None => "none",
            Predicate::Symmetric => "symmetric",
            Predicate::AlmostSymmetric => "almost_symmetric",
            Predicate::Med => "med",
            Predicate::MaxReducedType => "max_reduced_type",
        }
    }
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Predicate {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        Predicate::ALL
            .into_iter()
            .find(|p| p.name() == text)
            .ok_or_else(|| Error::UnknownPredicate(text.to_string()))
    }
}

/// What to enumerate: a genus bound, a filter, and the cap the bound is
/// checked against.
#[derive(Debug, Clone)]
pub struct EnumerationQuery {
    pub max_genus: u32,
    pub filter: Predicate,
    pub cap: u32,
}

impl EnumerationQuery {
    pub fn new(max_genus: u32) -> Self {
        EnumerationQuery {
            max_genus,
            filter: Predicate::None,
            cap: DEFAULT_GENUS_CAP,
        }
    }

    pub fn with_filter(mut self, filter: Predicate) -> Self {
        self.filter = filter;
        self
    }

    pub fn with_cap(mut self, cap: u32) -> Self {
        self.cap = cap;
        self
    }
}

/// Depth-first walk of the semigroup tree.
///
/// Children are visited in increasing order of the removed generator, so the
/// yield order is fully deterministic: ℕ, then `{1}`, `{1,2}`, `{1,2,3}`, …
/// (as gap sets).
pub struct SemigroupTree {
    stack: Vec<NumericalSemigroup>,
    max_genus: i64,
    filter: Predicate,
}

impl Iterator for SemigroupTree {
    type Item = NumericalSemigroup;

    fn next(&mut self) -> Option<NumericalSemigroup> {
        while let Some(s) = self.stack.pop() {
            if s.genus() < self.max_genus {
                let frobenius = s.frobenius();
                let removable: Vec<i64> = s
                    .minimal_generators()
                    .iter()
                    .filter(|&x| x > frobenius)
                    .collect();
                // Pushed largest-first so the smallest removal is popped next.
                for x in removable.into_iter().rev() {
                    self.stack.push(s.without_generator(x));
                }
            }
            if self.filter.eval(&s) {
                return Some(s);
            }
        }
        None
    }
}

/// Every numerical semigroup with genus at most `query.max_genus`, each
/// exactly once, in deterministic depth-first order.
pub fn enumerate_by_genus(query: &EnumerationQuery) -> Result<SemigroupTree> {
    if query.max_genus > query.cap {
        return Err(Error::CapExceeded {
            requested: query.max_genus,
            cap: query.cap,
        });
    }
    Ok(SemigroupTree {
        stack: vec![NumericalSemigroup::naturals()],
        max_genus: query.max_genus as i64,
        filter: query.filter,
    })
}

/// Every numerical semigroup of genus exactly `genus`, regenerated without
/// the tree: all size-`genus` subsets of `{1, …, 2·genus - 1}` whose
/// complement is additively closed. The window suffices because
/// `F ≤ 2g - 1` holds for every numerical semigroup.
///
/// Exponential in `genus`; exists only to validate [`enumerate_by_genus`].
pub fn enumerate_gapsets_bruteforce(genus: u32) -> Result<Vec<NumericalSemigroup>> {
    if genus > BRUTEFORCE_GENUS_CAP {
        return Err(Error::CapExceeded {
            requested: genus,
            cap: BRUTEFORCE_GENUS_CAP,
        });
    }
    if genus == 0 {
        return Ok(vec![NumericalSemigroup::naturals()]);
    }
    let g = genus as i64;
    let mut found = Vec::new();
    for combo in (1..=2 * g - 1).combinations(genus as usize) {
        if let Ok(s) = NumericalSemigroup::from_gaps(&IntSet::from_vec(combo)) {
            found.push(s);
        }
    }
    Ok(found)
}

/// Per-genus counts of semigroups satisfying `filter`, for genus
/// `0 ..= max_genus`.
pub fn count_by_predicate(max_genus: u32, filter: Predicate) -> Result<Vec<(u32, u64)>> {
    count_by_predicate_with_cap(max_genus, filter, DEFAULT_GENUS_CAP)
}

/// [`count_by_predicate`] with an explicit cap.
pub fn count_by_predicate_with_cap(
    max_genus: u32,
    filter: Predicate,
    cap: u32,
) -> Result<Vec<(u32, u64)>> {
    let query = EnumerationQuery::new(max_genus).with_filter(filter).with_cap(cap);
    let mut counts = vec![0u64; max_genus as usize + 1];
    for s in enumerate_by_genus(&query)? {
        counts[s.genus() as usize] += 1;
    }
    Ok(counts
        .into_iter()
        .enumerate()
        .map(|(genus, count)| (genus as u32, count))
        .collect())
}

/// One counterexample: the offending gap set, the claim that failed, and the
/// two values whose comparison failed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub gaps: IntSet,
    pub claim: String,
    pub lhs: String,
    pub rhs: String,
}

/// Outcome of running one registered claim over the enumerated universe.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub theorem_id: String,
    /// Semigroups the claim actually constrains (its hypotheses filter the
    /// enumerated universe).
    pub universe_size: u64,
    pub violations: Vec<Violation>,
    /// Wall-clock diagnostic; never serialized, so reports stay
    /// byte-identical across runs.
    #[serde(skip)]
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

struct TheoremCheck {
    id: &'static str,
    /// Hypothesis gate; semigroups outside it are skipped and not counted.
    applies: fn(&NumericalSemigroup) -> bool,
    check: fn(&NumericalSemigroup, &mut Vec<Violation>),
}

fn violation(
    s: &NumericalSemigroup,
    claim: &str,
    lhs: impl fmt::Display,
    rhs: impl fmt::Display,
) -> Violation {
    Violation {
        gaps: s.gaps(),
        claim: claim.to_string(),
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
    }
}

fn applies_all(_: &NumericalSemigroup) -> bool {
    true
}

fn applies_proper(s: &NumericalSemigroup) -> bool {
    !s.is_naturals()
}

/// Frobenius number strictly between m and 2m.
fn applies_narrow_window(s: &NumericalSemigroup) -> bool {
    let m = s.multiplicity();
    m < s.frobenius() && s.frobenius() < 2 * m
}

fn applies_beyond_half_line(s: &NumericalSemigroup) -> bool {
    s.multiplicity() < s.frobenius()
}

fn applies_nonsymmetric_beyond_half_line(s: &NumericalSemigroup) -> bool {
    applies_beyond_half_line(s) && !is_symmetric(s)
}

/// The two pseudo-Frobenius routes agree.
fn check_pf_oracle(s: &NumericalSemigroup, out: &mut Vec<Violation>) {
    let via_apery = s.pseudo_frobenius();
    let via_definition = s.pf_bruteforce();
    if via_apery != via_definition {
        out.push(violation(
            s,
            "PF via Apery maximals equals PF by definition",
            via_apery,
            via_definition,
        ));
    }
}

fn check_genus_inequality(s: &NumericalSemigroup, out: &mut Vec<Violation>) {
    let lhs = 2 * s.genus();
    let rhs = s.frobenius() + s.semigroup_type();
    if lhs < rhs {
        out.push(violation(s, "2*genus >= frobenius + type", lhs, rhs));
    }
}

fn check_chain(s: &NumericalSemigroup, out: &mut Vec<Violation>) {
    let reduced = s.reduced_type();
    let full = s.semigroup_type();
    let m = s.multiplicity();
    if !(1 <= reduced && reduced <= full && full <= m - 1) {
        out.push(violation(
            s,
            "1 <= reduced type <= type <= multiplicity - 1",
            format!("s={reduced}, t={full}"),
            format!("m={m}"),
        ));
    }
}

fn check_rpf_shift(s: &NumericalSemigroup, out: &mut Vec<Violation>) {
    let m = s.multiplicity();
    let f = s.frobenius();
    let apery = s.apery_set(m).expect("multiplicity is a nonzero element");
    let above: IntSet = apery.elements().iter().copied().filter(|&w| w >= f + 1).collect();
    let shifted: IntSet = s.reduced_pf().iter().map(|h| h + m).collect();
    if above != shifted {
        out.push(violation(
            s,
            "Apery elements above F are the reduced PF shifted by m",
            &above,
            shifted,
        ));
    }
    let maximals = s
        .apery_maximals(m)
        .expect("multiplicity is a nonzero element");
    if !above.iter().all(|w| maximals.contains(w)) {
        out.push(violation(
            s,
            "Apery elements above F are maximal in the Apery set",
            above,
            maximals,
        ));
    }
}

fn check_gap_window(s: &NumericalSemigroup, out: &mut Vec<Violation>) {
    let m = s.multiplicity();
    let reduced = s.reduced_pf();
    for gap in s.gaps().iter().filter(|&gap| gap > m) {
        if !reduced.contains(gap) {
            out.push(violation(
                s,
                "every gap above the multiplicity is a reduced PF number",
                gap,
                &reduced,
            ));
        }
    }
}

fn check_med_type(s: &NumericalSemigroup, out: &mut Vec<Violation>) {
    let med = is_med(s);
    let full_type = s.semigroup_type() == s.multiplicity() - 1;
    if med != full_type {
        out.push(violation(
            s,
            "MED iff type = multiplicity - 1",
            format!("med={med}"),
            format!("type=m-1: {full_type}"),
        ));
    }
}

fn check_main_theorem(s: &NumericalSemigroup, out: &mut Vec<Violation>) {
    let predicates = is_almost_symmetric(s) && has_maximal_reduced_type(s);
    let verdict = classify_almost_symmetric_max_reduced(s);
    let structural = matches!(verdict, Classification::DeltaMinus { .. });
    if predicates != structural {
        out.push(violation(
            s,
            "almost symmetric + maximal reduced type iff delta-minus form",
            format!("predicates={predicates}"),
            format!("verdict={verdict}"),
        ));
    }
}

fn check_trichotomy(s: &NumericalSemigroup, out: &mut Vec<Violation>) {
    let predicates = is_almost_symmetric(s) && has_maximal_reduced_type(s);
    let verdict = classify_almost_symmetric_max_reduced(s);
    if predicates != (verdict != Classification::No) {
        out.push(violation(
            s,
            "almost symmetric + maximal reduced type iff half-line, symmetric, or delta-minus",
            format!("predicates={predicates}"),
            format!("verdict={verdict}"),
        ));
    }
}

fn check_type_edim(s: &NumericalSemigroup, out: &mut Vec<Violation>) {
    if is_almost_symmetric(s) && has_maximal_reduced_type(s) {
        let t = s.semigroup_type();
        let e = s.embedding_dimension();
        if t > e - 1 {
            out.push(violation(s, "type <= embedding dimension - 1", t, e - 1));
        }
    }
}

fn check_med_equiv(s: &NumericalSemigroup, out: &mut Vec<Violation>) {
    let reduced_full = s.reduced_type() == s.multiplicity() - 1;
    let med_max = is_med(s) && has_maximal_reduced_type(s);
    let n2 = s
        .second_generator()
        .expect("proper semigroups have a second generator");
    let early_second = s.frobenius() + 1 <= n2;
    if reduced_full != med_max || med_max != early_second {
        out.push(violation(
            s,
            "reduced type = m-1 iff MED + maximal reduced type iff F + 1 <= second generator",
            format!("s=m-1: {reduced_full}, med+max: {med_max}"),
            format!("F+1<=n2: {early_second}"),
        ));
    }
    if is_half_line(s) && !med_max {
        out.push(violation(
            s,
            "half-lines are MED with maximal reduced type",
            "half-line",
            format!("med+max: {med_max}"),
        ));
    }
}

fn check_med_theorem(s: &NumericalSemigroup, out: &mut Vec<Violation>) {
    let predicates = is_med(s) && has_maximal_reduced_type(s);
    let verdict = classify_med_max_reduced(s);
    let structural = matches!(verdict, Classification::DeltaFm { .. });
    if predicates != structural {
        out.push(violation(
            s,
            "MED + maximal reduced type iff delta-fm form",
            format!("predicates={predicates}"),
            format!("verdict={verdict}"),
        ));
    }
}

/// Every claim the harness can check, with its hypothesis gate. Both sides
/// of each equivalence are computed along independent routes: predicates on
/// one side, structural reconstruction or a definitional scan on the other.
const REGISTRY: &[TheoremCheck] = &[
    TheoremCheck {
        id: "pf-oracle",
        applies: applies_all,
        check: check_pf_oracle,
    },
    TheoremCheck {
        id: "genus-inequality",
        applies: applies_all,
        check: check_genus_inequality,
    },
    TheoremCheck {
        id: "chain",
        applies: applies_proper,
        check: check_chain,
    },
    TheoremCheck {
        id: "rpf-shift",
        applies: applies_all,
        check: check_rpf_shift,
    },
    TheoremCheck {
        id: "gap-window",
        applies: applies_narrow_window,
        check: check_gap_window,
    },
    TheoremCheck {
        id: "med-type",
        applies: applies_proper,
        check: check_med_type,
    },
    TheoremCheck {
        id: "main-theorem",
        applies: applies_nonsymmetric_beyond_half_line,
        check: check_main_theorem,
    },
    TheoremCheck {
        id: "trichotomy",
        applies: applies_all,
        check: check_trichotomy,
    },
    TheoremCheck {
        id: "type-edim",
        applies: applies_proper,
        check: check_type_edim,
    },
    TheoremCheck {
        id: "med-equiv",
        applies: applies_proper,
        check: check_med_equiv,
    },
    TheoremCheck {
        id: "med-theorem",
        applies: applies_beyond_half_line,
        check: check_med_theorem,
    },
];

/// Ids accepted by [`verify`], in registry order.
pub fn theorem_ids() -> Vec<&'static str> {
    REGISTRY.iter().map(|check| check.id).collect()
}

/// Runs one registered claim over every semigroup of genus ≤ `max_genus`.
pub fn verify(theorem_id: &str, max_genus: u32) -> Result<VerificationReport> {
    verify_with_cap(theorem_id, max_genus, DEFAULT_GENUS_CAP)
}

/// [`verify`] with an explicit cap.
pub fn verify_with_cap(theorem_id: &str, max_genus: u32, cap: u32) -> Result<VerificationReport> {
    let entry = REGISTRY
        .iter()
        .find(|check| check.id == theorem_id)
        .ok_or_else(|| Error::UnknownTheorem(theorem_id.to_string()))?;
    let started = Instant::now();
    let query = EnumerationQuery::new(max_genus).with_cap(cap);
    let mut universe_size = 0;
    let mut violations = Vec::new();
    for s in enumerate_by_genus(&query)? {
        if !(entry.applies)(&s) {
            continue;
        }
        universe_size += 1;
        (entry.check)(&s, &mut violations);
    }
    Ok(VerificationReport {
        theorem_id: theorem_id.to_string(),
        universe_size,
        violations,
        elapsed: started.elapsed(),
    })
}

/// Runs the whole registry, one report per claim, in registry order.
pub fn verify_all(max_genus: u32) -> Result<Vec<VerificationReport>> {
    verify_all_with_cap(max_genus, DEFAULT_GENUS_CAP)
}

/// [`verify_all`] with an explicit cap.
pub fn verify_all_with_cap(max_genus: u32, cap: u32) -> Result<Vec<VerificationReport>> {
    REGISTRY
        .iter()
        .map(|check| verify_with_cap(check.id, max_genus, cap))
        .collect()
}
