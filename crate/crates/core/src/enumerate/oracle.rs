//! Exhaustive search over all row assignments, independent of the
//! constellation and isotope machinery.

use rayon::prelude::*;

use crate::autgroup::canonical_form;
use crate::classify::classify;
use crate::error::{Error, Result};
use crate::perm::all_permutations;
use crate::solution::Solution;

use super::catalog::{Catalog, CatalogEntry, Provenance, SolutionClass};

/// Largest size scanned without the override.
pub const ORACLE_CAP: usize = 3;
/// Largest size accepted with the override.
pub const ORACLE_HARD_CAP: usize = 4;

const UNSET: u8 = u8::MAX;

/// Partial tables; rows are filled in the order σ_0, τ_0, σ_1, τ_1, …
struct Partial {
    n: usize,
    sigma: Vec<u8>,
    tau: Vec<u8>,
}

impl Partial {
    fn s(&self, x: Option<usize>, y: Option<usize>) -> Option<usize> {
        let v = self.sigma[x? * self.n + y?];
        (v != UNSET).then_some(v as usize)
    }

    fn t(&self, y: Option<usize>, x: Option<usize>) -> Option<usize> {
        let v = self.tau[y? * self.n + x?];
        (v != UNSET).then_some(v as usize)
    }

    /// False if some braid component is already determined on both sides and
    /// the sides differ.
    fn consistent(&self) -> bool {
        let n = self.n;
        let differs = |a: Option<usize>, b: Option<usize>| matches!((a, b), (Some(a), Some(b)) if a != b);
        for x in 0..n {
            let x = Some(x);
            for y in 0..n {
                let y = Some(y);
                for z in 0..n {
                    let z = Some(z);
                    // first component
                    let l1 = self.s(self.s(x, y), self.s(self.t(y, x), z));
                    let r1 = self.s(x, self.s(y, z));
                    if differs(l1, r1) {
                        return false;
                    }
                    // middle component
                    let l2 = self.t(self.s(self.t(y, x), z), self.s(x, y));
                    let r2 = self.s(self.t(self.s(y, z), x), self.t(z, y));
                    if differs(l2, r2) {
                        return false;
                    }
                    // last component
                    let l3 = self.t(z, self.t(y, x));
                    let r3 = self.t(self.t(z, y), self.t(self.s(y, z), x));
                    if differs(l3, r3) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

fn backtrack(n: usize, first_sigma: usize, rows: &[Vec<u8>], keep: &(dyn Fn(&Solution) -> bool + Sync)) -> Vec<Solution> {
    fn go(
        slot: usize,
        partial: &mut Partial,
        rows: &[Vec<u8>],
        keep: &(dyn Fn(&Solution) -> bool + Sync),
        out: &mut Vec<Solution>,
    ) {
        let n = partial.n;
        if slot == 2 * n {
            let s = Solution::from_flat(n, partial.sigma.clone(), partial.tau.clone())
                .expect("rows are permutations");
            debug_assert!(s.check_braid());
            if keep(&s) {
                out.push(canonical_form(&s));
            }
            return;
        }
        let x = slot / 2;
        let use_sigma = slot.is_multiple_of(2);
        for row in rows {
            {
                let table = if use_sigma { &mut partial.sigma } else { &mut partial.tau };
                table[x * n..(x + 1) * n].copy_from_slice(row);
            }
            if partial.consistent() {
                go(slot + 1, partial, rows, keep, out);
            }
        }
        let table = if use_sigma { &mut partial.sigma } else { &mut partial.tau };
        table[x * n..(x + 1) * n].fill(UNSET);
    }
    let mut partial = Partial {
        n,
        sigma: vec![UNSET; n * n],
        tau: vec![UNSET; n * n],
    };
    partial.sigma[..n].copy_from_slice(&rows[first_sigma]);
    let mut out = Vec::new();
    if partial.consistent() {
        go(1, &mut partial, rows, keep, &mut out);
    }
    out
}

fn plain_scan(n: usize, first_sigma: usize, rows: &[Vec<u8>], keep: &(dyn Fn(&Solution) -> bool + Sync)) -> Vec<Solution> {
    let m = rows.len();
    let slots = 2 * n;
    let total = m.pow(slots as u32 - 1);
    let mut out = Vec::new();
    let mut sigma = vec![0u8; n * n];
    let mut tau = vec![0u8; n * n];
    sigma[..n].copy_from_slice(&rows[first_sigma]);
    for code in 0..total {
        let mut c = code;
        for slot in 1..slots {
            let row = &rows[c % m];
            c /= m;
            let x = slot / 2;
            let table = if slot % 2 == 0 { &mut sigma } else { &mut tau };
            table[x * n..(x + 1) * n].copy_from_slice(row);
        }
        let s = Solution::from_flat(n, sigma.clone(), tau.clone()).expect("rows are permutations");
        if s.check_braid() && keep(&s) {
            out.push(canonical_form(&s));
        }
    }
    out
}

/// Canonical forms of every solution of size `n` passing `keep`, found by
/// scanning all `(n!)^(2n)` assignments of rows (sizes up to 3) or by
/// backtracking with partial braid checks (size 4, only with `allow_big`).
pub fn brute_force_solutions(
    n: usize,
    keep: &(dyn Fn(&Solution) -> bool + Sync),
    allow_big: bool,
) -> Result<Vec<Solution>> {
    if n == 0 {
        return Err(Error::EmptySize);
    }
    let cap = if allow_big { ORACLE_HARD_CAP } else { ORACLE_CAP };
    if n > cap {
        return Err(Error::SizeCapExceeded { n, cap });
    }
    let rows: Vec<Vec<u8>> = all_permutations(n)
        .iter()
        .map(|p| p.images().iter().map(|&v| v as u8).collect())
        .collect();
    let mut found: Vec<Solution> = (0..rows.len())
        .into_par_iter()
        .flat_map_iter(|first| {
            if n <= ORACLE_CAP {
                plain_scan(n, first, &rows, keep)
            } else {
                backtrack(n, first, &rows, keep)
            }
        })
        .collect();
    found.par_sort_unstable();
    found.dedup();
    Ok(found)
}

/// The oracle restricted to one catalog class.
pub fn brute_force_catalog(n: usize, class: SolutionClass, allow_big: bool) -> Result<Catalog> {
    let keep = move |s: &Solution| class.contains(&classify(s));
    let found = brute_force_solutions(n, &keep, allow_big)?;
    Ok(Catalog {
        n,
        class,
        entries: found
            .into_par_iter()
            .map(|s| CatalogEntry::new(s, Provenance::none()))
            .collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tiny_oracle() {
        let any = |_: &Solution| true;
        assert_eq!(brute_force_solutions(1, &any, false).unwrap().len(), 1);
        // every solution on two points is permutational
        assert_eq!(brute_force_solutions(2, &any, false).unwrap().len(), 4);
        assert_eq!(brute_force_catalog(2, SolutionClass::TwoPermInv, false).unwrap().len(), 2);
    }

    #[test]
    fn size_cap() {
        let any = |_: &Solution| true;
        assert!(matches!(
            brute_force_solutions(4, &any, false),
            Err(Error::SizeCapExceeded { n: 4, cap: 3 })
        ));
        assert!(matches!(
            brute_force_solutions(5, &any, true),
            Err(Error::SizeCapExceeded { n: 5, cap: 4 })
        ));
    }

    #[test]
    fn backtracking_agrees_with_scan() {
        let any = |_: &Solution| true;
        for n in 1..=3 {
            let rows: Vec<Vec<u8>> = all_permutations(n)
                .iter()
                .map(|p| p.images().iter().map(|&v| v as u8).collect())
                .collect();
            let mut a: Vec<Solution> = (0..rows.len()).flat_map(|f| plain_scan(n, f, &rows, &any)).collect();
            let mut b: Vec<Solution> = (0..rows.len()).flat_map(|f| backtrack(n, f, &rows, &any)).collect();
            a.sort();
            a.dedup();
            b.sort();
            b.dedup();
            assert_eq!(a, b, "n = {n}");
        }
    }
}
