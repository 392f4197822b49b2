//! Constellation expansion, isotope expansion and the permutational layer.

use rayon::prelude::*;

use crate::autgroup::{automorphism_group, canonical_form};
use crate::classify::is_2_reductive;
use crate::error::{Error, Result};
use crate::isotope::{make_isotope, IsotopePair};
use crate::perm::{PermGroup, Permutation};
use crate::solution::Solution;

use super::catalog::{Catalog, CatalogEntry, Provenance, SolutionClass};
use super::constellation::{solution_from_constellation, Constellation};
use super::groups::{abelian_groups, partitions, AbelianGroupSpec};

/// Runs `f` on a dedicated pool of `jobs` worker threads (at least one).
pub fn with_jobs<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> T {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .expect("thread pool")
        .install(f)
}

/// All tuples over `0..radix` of length `len`, lexicographic.
fn tuples(radix: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..radix).map(move |v| {
                    let mut t = t.clone();
                    t.push(v);
                    t
                })
            })
            .collect();
    }
    out
}

fn cartesian<T: Clone>(choices: &[Vec<T>]) -> Vec<Vec<T>> {
    let mut out = vec![Vec::new()];
    for options in choices {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                options.iter().map(move |o| {
                    let mut p = prefix.clone();
                    p.push(o.clone());
                    p
                })
            })
            .collect();
    }
    out
}

/// Group choices per block; blocks of equal size take non-decreasing choices
/// since permuting such blocks gives an isomorphic solution.
fn group_assignments(sizes: &[usize]) -> Vec<Vec<AbelianGroupSpec>> {
    let per_block: Vec<Vec<AbelianGroupSpec>> = sizes.iter().map(|&m| abelian_groups(m)).collect();
    let index_choices: Vec<Vec<usize>> = per_block.iter().map(|g| (0..g.len()).collect()).collect();
    cartesian(&index_choices)
        .into_iter()
        .filter(|idx| (1..sizes.len()).all(|i| sizes[i] != sizes[i - 1] || idx[i] >= idx[i - 1]))
        .map(|idx| idx.iter().enumerate().map(|(b, &i)| per_block[b][i].clone()).collect())
        .collect()
}

/// Every constellation of size `n` satisfying the generation condition.
///
/// Partitions are non-increasing. For each block `j` the constants landing
/// in it (`c[i][j]`, and `d[i][j]` unless involutive) are chosen together and
/// only generating choices are kept, so no failing constellation is built.
pub fn constellations(n: usize, involutive_only: bool) -> Vec<Constellation> {
    let mut out = Vec::new();
    for sizes in partitions(n) {
        let k = sizes.len();
        for groups in group_assignments(&sizes) {
            let per_column: Vec<Vec<Vec<usize>>> = (0..k)
                .map(|j| {
                    let g = &groups[j];
                    let width = if involutive_only { k - 1 } else { 2 * (k - 1) };
                    tuples(g.order(), width)
                        .into_iter()
                        .filter(|t| g.generated_by(t))
                        .collect()
                })
                .collect();
            for columns in cartesian(&per_column) {
                let mut c = vec![vec![0; k]; k];
                let mut d = vec![vec![0; k]; k];
                for (j, col) in columns.iter().enumerate() {
                    let others = (0..k).filter(|&i| i != j);
                    for (slot, i) in others.enumerate() {
                        if involutive_only {
                            c[i][j] = col[slot];
                        } else {
                            c[i][j] = col[2 * slot];
                            d[i][j] = col[2 * slot + 1];
                        }
                    }
                }
                out.push(Constellation {
                    groups: groups.clone(),
                    c,
                    d: if involutive_only { Vec::new() } else { d },
                });
            }
        }
    }
    out
}

fn class_for(general: SolutionClass, involutive: SolutionClass, involutive_only: bool) -> SolutionClass {
    if involutive_only {
        involutive
    } else {
        general
    }
}

/// Sorts by solution then provenance and keeps the first entry per solution.
fn dedup_sorted(mut items: Vec<(Solution, Provenance)>) -> Vec<(Solution, Provenance)> {
    items.par_sort_unstable();
    items.dedup_by(|later, earlier| later.0 == earlier.0);
    items
}

fn into_entries(items: Vec<(Solution, Provenance)>) -> Vec<CatalogEntry> {
    items
        .into_par_iter()
        .map(|(s, p)| CatalogEntry::new(s, p))
        .collect()
}

/// All square-free 2-reductive solutions of size `n` up to isomorphism,
/// including the trivial one.
pub fn enumerate_sf_2reductive(n: usize, involutive_only: bool) -> Result<Catalog> {
    if n == 0 {
        return Err(Error::EmptySize);
    }
    let forms: Vec<(Solution, Provenance)> = constellations(n, involutive_only)
        .into_par_iter()
        .map(|c| {
            let s = solution_from_constellation(&c, involutive_only)
                .expect("constellations are generated with the generation condition");
            (canonical_form(&s), Provenance::none())
        })
        .collect();
    Ok(Catalog {
        n,
        class: class_for(SolutionClass::Sf2r, SolutionClass::Sf2rInv, involutive_only),
        entries: into_entries(dedup_sorted(forms)),
    })
}

/// For each conjugacy class of Aut(base) a representative π₁, with the
/// representatives π₂ of the classes of its centralizer for which π₁π₂
/// commutes with every σ_x and τ_x.
pub fn isotope_choices(base: &Solution) -> Vec<(Permutation, Vec<Permutation>)> {
    let aut = automorphism_group(base);
    let translations: Vec<Permutation> = base
        .sigma_rows()
        .into_iter()
        .chain(base.tau_rows())
        .collect();
    aut.conjugacy_classes()
        .into_iter()
        .map(|class| {
            let pi1 = class[0].clone();
            let cent = aut.centralizer(&pi1).expect("representative lies in the group");
            let pi2s = cent
                .conjugacy_classes()
                .into_iter()
                .map(|c| c[0].clone())
                .filter(|pi2| {
                    let prod = &pi1 * pi2;
                    translations.iter().all(|t| prod.commutes(t))
                })
                .collect();
            (pi1, pi2s)
        })
        .collect()
}

fn check_base(base: &Solution, involutive_only: bool) -> Result<()> {
    if !base.is_square_free() {
        return Err(Error::NotSquareFree);
    }
    if !is_2_reductive(base) {
        return Err(Error::NotTwoReductive);
    }
    if involutive_only && !base.is_involutive() {
        return Err(Error::NotInvolutive);
    }
    Ok(())
}

/// The isotope pairs of a square-free 2-reductive base, one per isomorphism
/// class of resulting solutions.
pub fn isotope_pairs(base: &Solution, involutive_only: bool) -> Result<Vec<IsotopePair>> {
    check_base(base, involutive_only)?;
    if involutive_only {
        let aut = automorphism_group(base);
        return Ok(aut
            .conjugacy_classes()
            .into_iter()
            .map(|c| IsotopePair {
                pi2: c[0].inverse(),
                pi1: c[0].clone(),
            })
            .collect());
    }
    Ok(isotope_choices(base)
        .into_iter()
        .flat_map(|(pi1, pi2s)| {
            pi2s.into_iter().map(move |pi2| IsotopePair {
                pi1: pi1.clone(),
                pi2,
            })
        })
        .collect())
}

pub fn isotopes_of_base(base: &Solution, involutive_only: bool) -> Result<Vec<(IsotopePair, Solution)>> {
    isotope_pairs(base, involutive_only)?
        .into_iter()
        .map(|pair| make_isotope(base, &pair).map(|s| (pair, s)))
        .collect()
}

/// Commuting pairs (f, g) of S_n up to simultaneous conjugation, or the pairs
/// (f, f⁻¹) up to conjugation.
pub fn permutational_pairs(n: usize, involutive_only: bool) -> Vec<IsotopePair> {
    let sym = PermGroup::symmetric(n);
    let mut out = Vec::new();
    for class in sym.conjugacy_classes() {
        let f = class[0].clone();
        if involutive_only {
            out.push(IsotopePair {
                pi2: f.inverse(),
                pi1: f,
            });
            continue;
        }
        let cent = sym.centralizer(&f).expect("representative lies in S_n");
        for c in cent.conjugacy_classes() {
            out.push(IsotopePair {
                pi1: f.clone(),
                pi2: c[0].clone(),
            });
        }
    }
    out
}

fn permutational_candidates(
    n: usize,
    involutive_only: bool,
    base_index: Option<usize>,
) -> Vec<(Solution, Provenance)> {
    permutational_pairs(n, involutive_only)
        .into_par_iter()
        .map(|pair| {
            let s = Solution::permutational(&pair.pi1, &pair.pi2).expect("pairs commute");
            let prov = Provenance {
                base_index,
                pi1: pair.pi1.to_cycles(),
                pi2: pair.pi2.to_cycles(),
            };
            (canonical_form(&s), prov)
        })
        .collect()
}

/// Solutions of multipermutation level at most one: constant rows σ_x = f
/// and τ_x = g with fg = gf.
pub fn enumerate_permutational(n: usize) -> Result<Catalog> {
    if n == 0 {
        return Err(Error::EmptySize);
    }
    Ok(Catalog {
        n,
        class: SolutionClass::Perm,
        entries: into_entries(dedup_sorted(permutational_candidates(n, false, None))),
    })
}

/// Canonical forms of every isotope produced from `bases` (a square-free
/// catalog) plus the permutational layer, before deduplication.
pub fn isotope_candidates(bases: &Catalog, involutive_only: bool) -> Result<Vec<(Solution, Provenance)>> {
    let n = bases.n;
    let trivial = Solution::trivial(n);
    let trivial_index = bases.entries.iter().position(|e| e.solution == trivial);
    let mut out = permutational_candidates(n, involutive_only, trivial_index);
    let nested: Vec<Result<Vec<(Solution, Provenance)>>> = bases
        .entries
        .par_iter()
        .enumerate()
        .filter(|(_, e)| e.solution != trivial)
        .map(|(index, e)| {
            Ok(isotopes_of_base(&e.solution, involutive_only)?
                .into_iter()
                .map(|(pair, s)| {
                    let prov = Provenance {
                        base_index: Some(index),
                        pi1: pair.pi1.to_cycles(),
                        pi2: pair.pi2.to_cycles(),
                    };
                    (canonical_form(&s), prov)
                })
                .collect())
        })
        .collect();
    for chunk in nested {
        out.extend(chunk?);
    }
    Ok(out)
}

/// Isotope expansion of an existing square-free catalog.
pub fn enumerate_2permutational_from(bases: &Catalog, involutive_only: bool) -> Result<Catalog> {
    let candidates = isotope_candidates(bases, involutive_only)?;
    Ok(Catalog {
        n: bases.n,
        class: class_for(SolutionClass::TwoPerm, SolutionClass::TwoPermInv, involutive_only),
        entries: into_entries(dedup_sorted(candidates)),
    })
}

/// All solutions of multipermutation level at most two, up to isomorphism.
pub fn enumerate_2permutational(n: usize, involutive_only: bool) -> Result<Catalog> {
    let bases = enumerate_sf_2reductive(n, involutive_only)?;
    enumerate_2permutational_from(&bases, involutive_only)
}

/// Keeps the 2-reductive members of a 2-permutational catalog.
pub fn two_reductive_filter(catalog: &Catalog) -> Catalog {
    let class = class_for(
        SolutionClass::TwoRed,
        SolutionClass::TwoRedInv,
        catalog.class.involutive_only(),
    );
    catalog.filtered(class, |e| e.flags.two_reductive)
}

/// Builds the catalog of any class on the current thread pool.
pub fn enumerate_class(n: usize, class: SolutionClass) -> Result<Catalog> {
    let inv = class.involutive_only();
    match class {
        SolutionClass::Sf2r | SolutionClass::Sf2rInv => enumerate_sf_2reductive(n, inv),
        SolutionClass::TwoPerm | SolutionClass::TwoPermInv => enumerate_2permutational(n, inv),
        SolutionClass::TwoRed | SolutionClass::TwoRedInv => {
            Ok(two_reductive_filter(&enumerate_2permutational(n, inv)?))
        }
        SolutionClass::Perm => enumerate_permutational(n),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::autgroup::are_isomorphic;
    use crate::samples;
    use std::collections::BTreeSet;

    fn p(n: usize, s: &str) -> Permutation {
        Permutation::from_cycles(n, s).unwrap()
    }

    #[test]
    fn small_square_free_counts() {
        let general: Vec<usize> = (1..=4)
            .map(|n| enumerate_sf_2reductive(n, false).unwrap().len())
            .collect();
        assert_eq!(general, vec![1, 1, 4, 20]);
        let inv: Vec<usize> = (1..=4)
            .map(|n| enumerate_sf_2reductive(n, true).unwrap().len())
            .collect();
        assert_eq!(inv, vec![1, 1, 2, 5]);
        let two = enumerate_sf_2reductive(2, false).unwrap();
        assert_eq!(two.entries[0].solution, Solution::trivial(2));
        assert!(enumerate_sf_2reductive(0, false).is_err());
    }

    #[test]
    fn constellation_scan_for_two_points() {
        // exhaustive: only the partition 1+1 survives generation
        let all = constellations(2, false);
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].groups.len(), 2);
    }

    #[test]
    fn example_base_choices() {
        let base = samples::two_block_base();
        let choices = isotope_choices(&base);
        let aut = automorphism_group(&base);
        let mut counts: Vec<(String, usize)> = choices
            .iter()
            .map(|(pi1, pi2s)| (pi1.to_cycles(), pi2s.len()))
            .collect();
        counts.sort();
        assert_eq!(counts.len(), 5);
        let total: usize = counts.iter().map(|c| c.1).sum();
        assert_eq!(total, 14);

        // compare the chosen π₂ against the listed ones class by class
        let class_set = |group: &PermGroup, elems: &[Permutation]| -> BTreeSet<Permutation> {
            let classes = group.conjugacy_classes();
            elems
                .iter()
                .map(|e| classes.iter().find(|c| c.contains(e)).unwrap()[0].clone())
                .collect()
        };
        let listed: Vec<(&str, Vec<&str>)> = vec![
            ("id", vec!["id", "(0,1)", "(0,1)(2,3)"]),
            ("(0,1)(2,3)", vec!["id", "(0,1)", "(0,1)(2,3)"]),
            ("(0,1)", vec!["id", "(0,1)", "(2,3)", "(0,1)(2,3)"]),
            ("(0,2,1,3)", vec!["(0,2,1,3)", "(0,3,1,2)"]),
            ("(0,2)(1,3)", vec!["(0,2)(1,3)", "(0,3)(1,2)"]),
        ];
        for (pi1_text, pi2_texts) in listed {
            let pi1 = p(4, pi1_text);
            let (rep, chosen) = choices
                .iter()
                .find(|(rep, _)| {
                    aut.conjugacy_classes()
                        .iter()
                        .any(|c| c.contains(rep) && c.contains(&pi1))
                })
                .unwrap();
            // move the listed π₂ to the chosen representative's frame
            let g = aut
                .elements()
                .iter()
                .find(|g| pi1.conjugate_by(g) == *rep)
                .unwrap();
            let cent = aut.centralizer(rep).unwrap();
            let expected: Vec<Permutation> =
                pi2_texts.iter().map(|t| p(4, t).conjugate_by(g)).collect();
            assert_eq!(class_set(&cent, &expected), class_set(&cent, chosen), "pi1 = {pi1_text}");
            assert_eq!(chosen.len(), pi2_texts.len());
        }
    }

    #[test]
    fn example_base_isotopes() {
        let base = samples::two_block_base();
        let all = isotopes_of_base(&base, false).unwrap();
        assert_eq!(all.len(), 14);
        let forms: BTreeSet<Solution> = all.iter().map(|(_, s)| canonical_form(s)).collect();
        assert_eq!(forms.len(), 14);
        assert_eq!(all.iter().filter(|(_, s)| s.is_involutive()).count(), 5);
        let inv = isotopes_of_base(&base, true).unwrap();
        assert_eq!(inv.len(), 5);
        let inv_forms: BTreeSet<Solution> = inv.iter().map(|(_, s)| canonical_form(s)).collect();
        assert!(inv_forms.is_subset(&forms));
        assert!(all.iter().any(|(pair, s)| *s == base && pair.pi1.is_identity()));
    }

    #[test]
    fn base_preconditions() {
        assert!(matches!(
            isotopes_of_base(&samples::level_three(), false),
            Err(Error::NotSquareFree) | Err(Error::NotTwoReductive)
        ));
        let f = p(3, "(0,1,2)");
        let perm = Solution::permutational(&f, &f).unwrap();
        assert!(matches!(isotopes_of_base(&perm, false), Err(Error::NotSquareFree)));
    }

    #[test]
    fn trivial_base_gives_permutational_isotopes() {
        let t = Solution::trivial(3);
        let iso = isotopes_of_base(&t, false).unwrap();
        assert_eq!(iso.len(), 8);
        assert!(iso.iter().all(|(_, s)| matches!(
            crate::retract::multipermutation_level(s, None),
            Some(0..=1)
        )));
        assert!(iso
            .iter()
            .any(|(pair, s)| pair.pi1.is_identity() && pair.pi2.is_identity() && *s == t));
    }

    #[test]
    fn permutational_counts() {
        let counts: Vec<usize> = (1..=4).map(|n| enumerate_permutational(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 4, 8, 21]);
        let inv: Vec<usize> = (1..=4).map(|n| permutational_pairs(n, true).len()).collect();
        assert_eq!(inv, vec![1, 2, 3, 5]);
    }

    // Orbit counting by brute force: commuting pairs modulo simultaneous
    // conjugation, computed directly from the orbit sets.
    #[test]
    fn permutational_matches_orbit_enumeration() {
        use crate::perm::all_permutations;
        for n in 1..=4 {
            let perms = all_permutations(n);
            let mut seen = BTreeSet::new();
            let mut orbits = 0;
            for f in &perms {
                for g in &perms {
                    if !f.commutes(g) || seen.contains(&(f.clone(), g.clone())) {
                        continue;
                    }
                    orbits += 1;
                    for h in &perms {
                        seen.insert((f.conjugate_by(h), g.conjugate_by(h)));
                    }
                }
            }
            assert_eq!(enumerate_permutational(n).unwrap().len(), orbits, "n = {n}");
        }
    }

    #[test]
    fn small_two_permutational_counts() {
        let general: Vec<usize> = (1..=4)
            .map(|n| enumerate_2permutational(n, false).unwrap().len())
            .collect();
        assert_eq!(general, vec![1, 4, 20, 219]);
        let inv: Vec<usize> = (1..=4)
            .map(|n| enumerate_2permutational(n, true).unwrap().len())
            .collect();
        assert_eq!(inv, vec![1, 2, 5, 19]);
        let red: Vec<usize> = (1..=4)
            .map(|n| two_reductive_filter(&enumerate_2permutational(n, false).unwrap()).len())
            .collect();
        assert_eq!(red, vec![1, 4, 20, 207]);
    }

    #[test]
    fn no_collisions_before_dedup() {
        for n in 1..=4 {
            for inv in [false, true] {
                let bases = enumerate_sf_2reductive(n, inv).unwrap();
                let raw = isotope_candidates(&bases, inv).unwrap();
                let cat = enumerate_2permutational_from(&bases, inv).unwrap();
                assert_eq!(raw.len(), cat.len(), "n = {n}, involutive = {inv}");
            }
        }
    }

    #[test]
    fn provenance_rebuilds_entries() {
        let bases = enumerate_sf_2reductive(4, false).unwrap();
        let cat = enumerate_2permutational_from(&bases, false).unwrap();
        for e in &cat.entries {
            let idx = e.provenance.base_index.expect("every entry has a base");
            let pair = IsotopePair::parse(4, &e.provenance.pi1, &e.provenance.pi2).unwrap();
            let rebuilt = make_isotope(&bases.entries[idx].solution, &pair).unwrap();
            assert!(are_isomorphic(&rebuilt, &e.solution).is_some());
        }
    }

    #[test]
    fn jobs_do_not_change_output() {
        let one = with_jobs(1, || enumerate_2permutational(4, false).unwrap());
        let four = with_jobs(4, || enumerate_2permutational(4, false).unwrap());
        assert_eq!(one.to_jsonl_string(), four.to_jsonl_string());
    }
}
