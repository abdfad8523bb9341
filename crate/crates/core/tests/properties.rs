//! Randomized invariants, each checked against a definition-level oracle
//! written independently of the library internals.

use proptest::prelude::*;

use sgp::classify;
use sgp::record::SemigroupRecord;
use sgp::{Error, IntSet, NumericalSemigroup};

/// Generator lists that always describe a numerical semigroup: the trailing
/// coprime pair pins the gcd at 1.
fn generator_lists() -> impl Strategy<Value = Vec<i64>> {
    (proptest::collection::vec(2i64..=40, 0..=4), 2i64..=40).prop_map(|(mut gens, seed)| {
        gens.push(seed);
        gens.push(seed + 1);
        gens
    })
}

fn semigroups() -> impl Strategy<Value = NumericalSemigroup> {
    generator_lists().prop_map(|gens| NumericalSemigroup::from_generators(&gens).unwrap())
}

/// Plain forward dynamic programming over a fixed window, no early exit.
fn naive_members(gens: &[i64], bound: i64) -> Vec<bool> {
    let mut table = vec![false; (bound + 1) as usize];
    table[0] = true;
    for x in 1..=bound {
        table[x as usize] = gens.iter().any(|&g| g <= x && table[(x - g) as usize]);
    }
    table
}

proptest! {
    #[test]
    fn membership_matches_naive_dp(gens in generator_lists()) {
        let s = NumericalSemigroup::from_generators(&gens).unwrap();
        let smallest = *gens.iter().min().unwrap();
        let largest = *gens.iter().max().unwrap();
        let bound = smallest * largest;
        let oracle = naive_members(&gens, bound);
        let expected_f = (0..=bound).rev().find(|&x| !oracle[x as usize]).unwrap_or(-1);
        prop_assert_eq!(s.frobenius(), expected_f);
        for x in 0..=bound {
            prop_assert_eq!(s.contains(x), oracle[x as usize], "x = {}", x);
        }
    }

    #[test]
    fn pf_routes_agree(s in semigroups()) {
        prop_assert_eq!(s.pseudo_frobenius(), s.pf_bruteforce());
    }

    #[test]
    fn apery_invariants(s in semigroups(), offset in 0i64..3) {
        let f = s.frobenius();
        for n in [s.multiplicity(), (f + 1).max(1) + offset] {
            let apery = s.apery_set(n).unwrap();
            prop_assert_eq!(apery.len() as i64, n);
            prop_assert_eq!(apery.max() - n, f);
            for (i, &w) in apery.elements().iter().enumerate() {
                prop_assert_eq!(w % n, i as i64);
                prop_assert!(s.contains(w));
                prop_assert!(!s.contains(w - n));
            }
        }
    }

    #[test]
    fn gaps_rebuild_the_semigroup(s in semigroups()) {
        let gaps = s.gaps();
        prop_assert_eq!(gaps.len() as i64, s.genus());
        let rebuilt = NumericalSemigroup::from_gaps(&gaps).unwrap();
        prop_assert_eq!(rebuilt, s);
    }

    #[test]
    fn minimal_generators_are_minimal_and_sufficient(s in semigroups()) {
        let msg = s.minimal_generators();
        for x in msg.iter() {
            let decomposable = (1..x)
                .any(|a| s.contains(a) && a >= s.multiplicity() && s.contains(x - a));
            prop_assert!(!decomposable, "{} splits into nonzero elements", x);
        }
        let regenerated = NumericalSemigroup::from_generators(&msg.to_vec()).unwrap();
        prop_assert_eq!(regenerated, s);
    }

    #[test]
    fn type_chain_holds(s in semigroups()) {
        if !s.is_naturals() {
            let reduced = s.reduced_type();
            let full = s.semigroup_type();
            prop_assert!(1 <= reduced);
            prop_assert!(reduced <= full);
            prop_assert!(full <= s.multiplicity() - 1);
        }
    }

    #[test]
    fn random_gap_subsets_split_cleanly(picks in proptest::collection::vec(any::<bool>(), 18)) {
        let candidate: IntSet = picks
            .iter()
            .enumerate()
            .filter(|(_, &keep)| keep)
            .map(|(i, _)| i as i64 + 1)
            .collect();
        match NumericalSemigroup::from_gaps(&candidate) {
            Ok(s) => prop_assert_eq!(s.gaps(), candidate),
            Err(Error::NotClosed(a, b)) => {
                prop_assert!(!candidate.contains(a));
                prop_assert!(!candidate.contains(b));
                prop_assert!(candidate.contains(a + b));
            }
            Err(other) => prop_assert!(false, "unexpected error {:?}", other),
        }
    }

    #[test]
    fn records_roundtrip(s in semigroups()) {
        let record = SemigroupRecord::from_semigroup(&s);
        let reparsed = SemigroupRecord::from_json(&record.to_json()).unwrap();
        prop_assert_eq!(&reparsed, &record);
        prop_assert_eq!(reparsed.to_semigroup().unwrap(), s);
    }

    #[test]
    fn classifier_verdicts_match_predicates(s in semigroups()) {
        let verdict = classify::classify_almost_symmetric_max_reduced(&s);
        let in_family = classify::is_almost_symmetric(&s) && classify::has_maximal_reduced_type(&s);
        prop_assert_eq!(verdict != classify::Classification::No, in_family);

        let med_verdict = classify::classify_med_max_reduced(&s);
        let in_med_family = classify::is_med(&s) && classify::has_maximal_reduced_type(&s);
        prop_assert_eq!(med_verdict != classify::Classification::No, in_med_family);
    }
}
