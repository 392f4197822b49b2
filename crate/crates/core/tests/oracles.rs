mod common;

use std::collections::BTreeSet;

use mpl2_core::enumerate::{
    brute_force_catalog, brute_force_solutions, enumerate_2permutational, enumerate_sf_2reductive,
    two_reductive_filter, SolutionClass,
};
use mpl2_core::Solution;

fn set(solutions: impl Iterator<Item = Solution>) -> BTreeSet<Solution> {
    solutions.collect()
}

#[test]
fn oracle_matches_pipeline_up_to_three() {
    for n in 1..=3 {
        for (class, inv) in [(SolutionClass::TwoPerm, false), (SolutionClass::TwoPermInv, true)] {
            let oracle = brute_force_catalog(n, class, false).unwrap();
            let pipeline = enumerate_2permutational(n, inv).unwrap();
            assert_eq!(
                set(oracle.solutions().cloned()),
                set(pipeline.solutions().cloned()),
                "n = {n}, class = {class}"
            );
        }
    }
}

#[test]
fn oracle_counts() {
    let le2 = |s: &Solution| matches!(mpl2_core::retract::multipermutation_level(s, None), Some(0..=2));
    assert_eq!(brute_force_solutions(3, &le2, false).unwrap().len(), 20);
    let inv_le2 = |s: &Solution| s.is_involutive() && le2(s);
    assert_eq!(brute_force_solutions(2, &inv_le2, false).unwrap().len(), 2);
    let any = |_: &Solution| true;
    assert_eq!(brute_force_solutions(1, &any, false).unwrap().len(), 1);
}

#[test]
fn backtracking_oracle_at_four() {
    let oracle = brute_force_catalog(4, SolutionClass::TwoPerm, true).unwrap();
    let pipeline = enumerate_2permutational(4, false).unwrap();
    assert_eq!(oracle.len(), 219);
    assert_eq!(set(oracle.solutions().cloned()), set(pipeline.solutions().cloned()));
}

#[test]
fn square_free_oracle_up_to_three() {
    for n in 1..=3 {
        for (class, inv) in [(SolutionClass::Sf2r, false), (SolutionClass::Sf2rInv, true)] {
            let oracle = brute_force_catalog(n, class, false).unwrap();
            let pipeline = enumerate_sf_2reductive(n, inv).unwrap();
            assert_eq!(set(oracle.solutions().cloned()), set(pipeline.solutions().cloned()));
        }
    }
}

#[test]
fn orbit_construction_matches_two_reductive_filter() {
    for n in 1..=5 {
        for inv in [false, true] {
            let direct = common::two_reductive_by_orbits(n, inv);
            let filtered = two_reductive_filter(&enumerate_2permutational(n, inv).unwrap());
            assert_eq!(direct, set(filtered.solutions().cloned()), "n = {n}, involutive = {inv}");
        }
    }
}

#[test]
fn canonical_forms_equal_full_minimum_on_small_catalogs() {
    for n in 1..=4 {
        let cat = enumerate_2permutational(n, false).unwrap();
        let canon = set(cat.solutions().cloned());
        let full = set(cat.solutions().map(common::full_minimum));
        assert_eq!(canon.len(), full.len(), "n = {n}");
    }
}

#[test]
fn pipeline_outputs_pass_direct_braid_check() {
    for n in 1..=5 {
        let cat = enumerate_2permutational(n, false).unwrap();
        assert!(cat.solutions().all(common::braid_direct), "n = {n}");
    }
}
