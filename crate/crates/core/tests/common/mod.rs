//! Reference computations that avoid the enumeration pipeline.
#![allow(dead_code)]

use std::collections::BTreeSet;

use mpl2_core::enumerate::{abelian_groups, partitions, AbelianGroupSpec};
use mpl2_core::perm::all_permutations;
use mpl2_core::{canonical_form, Solution};

/// Braid relation evaluated on triples by composing r on X³ directly.
pub fn braid_direct(s: &Solution) -> bool {
    let n = s.n();
    let r = |a: usize, b: usize| (s.s(a, b), s.t(b, a));
    (0..n).all(|x| {
        (0..n).all(|y| {
            (0..n).all(|z| {
                let (a, b) = r(x, y);
                let (b, c) = r(b, z);
                let (a, b) = r(a, b);
                let left = (a, b, c);
                let (b, c) = r(y, z);
                let (a, b) = r(x, b);
                let (b, c) = r(b, c);
                left == (a, b, c)
            })
        })
    })
}

/// Least relabeling over all of S_n.
pub fn full_minimum(s: &Solution) -> Solution {
    all_permutations(s.n())
        .iter()
        .map(|p| s.relabel(p))
        .min()
        .expect("S_n is non-empty")
}

fn product<T: Clone>(choices: &[Vec<T>]) -> Vec<Vec<T>> {
    let mut out = vec![Vec::new()];
    for options in choices {
        let mut next = Vec::with_capacity(out.len() * options.len());
        for prefix in &out {
            for o in options {
                let mut p: Vec<T> = prefix.clone();
                p.push(o.clone());
                next.push(p);
            }
        }
        out = next;
    }
    out
}

/// Every 2-reductive solution of size `n` up to isomorphism, built as
/// σ_x(y) = y + c(i,j), τ_y(x) = x + d(j,i) on orbits A_1, …, A_k with
/// arbitrary constants (diagonal ones included) whose images generate each
/// orbit. A 2-reductive solution has an abelian translation group acting
/// regularly on each orbit with rows constant on orbits, so this covers all
/// of them; nothing is assumed beyond that.
pub fn two_reductive_by_orbits(n: usize, involutive_only: bool) -> BTreeSet<Solution> {
    let mut found = BTreeSet::new();
    for sizes in partitions(n) {
        let k = sizes.len();
        let per_block: Vec<Vec<AbelianGroupSpec>> = sizes.iter().map(|&m| abelian_groups(m)).collect();
        for groups in product(&per_block) {
            let off: Vec<usize> = groups
                .iter()
                .scan(0, |acc, g| {
                    let o = *acc;
                    *acc += g.order();
                    Some(o)
                })
                .collect();
            let block: Vec<usize> = (0..k)
                .flat_map(|i| std::iter::repeat_n(i, groups[i].order()))
                .collect();
            // column j: (c(0,j), d(0,j), c(1,j), d(1,j), …), all in A_j
            let columns: Vec<Vec<Vec<usize>>> = (0..k)
                .map(|j| {
                    let m = groups[j].order();
                    product(&vec![(0..m).collect::<Vec<_>>(); 2 * k])
                        .into_iter()
                        .filter(|t| groups[j].generated_by(t))
                        .collect()
                })
                .collect();
            for cols in product(&columns) {
                let mut sigma = vec![vec![0; n]; n];
                let mut tau = vec![vec![0; n]; n];
                for x in 0..n {
                    let i = block[x];
                    for y in 0..n {
                        let j = block[y];
                        sigma[x][y] = off[j] + groups[j].add(y - off[j], cols[j][2 * i]);
                        tau[y][x] = off[i] + groups[i].add(x - off[i], cols[i][2 * j + 1]);
                    }
                }
                let s = Solution::new(n, &sigma, &tau).expect("translations are bijections");
                if !braid_direct(&s) || (involutive_only && !s.is_involutive()) {
                    continue;
                }
                found.insert(canonical_form(&s));
            }
        }
    }
    found
}
