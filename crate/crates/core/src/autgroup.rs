//! Automorphism groups, isomorphism search and canonical forms.
//!
//! Every search is restricted by an isomorphism-invariant point coloring:
//! points start out colored by local data (cycle types of σ_x and τ_x, class
//! sizes of the row relations, whether x is a fixed point of its own rows),
//! and colors are refined by the colors of the points each row touches until
//! the partition is stable. Any isomorphism maps a point to a point of the same
//! color, so restricting to color-preserving maps loses nothing.

use crate::classify::is_isomorphism;
use crate::perm::{PermGroup, Permutation};
use crate::retract::{approx_partition, backsim_partition, sim_partition};
use crate::solution::Solution;

/// Replaces keys by their rank among the distinct keys present.
fn dense_rank<K: Ord + Clone>(keys: &[K]) -> Vec<usize> {
    let mut distinct: Vec<K> = keys.to_vec();
    distinct.sort();
    distinct.dedup();
    keys.iter()
        .map(|k| distinct.binary_search(k).expect("key present"))
        .collect()
}

/// Stable isomorphism-invariant coloring of the points of `s`.
pub fn point_colors(s: &Solution) -> Vec<usize> {
    let n = s.n();
    let approx = approx_partition(s);
    let sim = sim_partition(s);
    let back = backsim_partition(s);
    let initial: Vec<_> = (0..n)
        .map(|x| {
            (
                s.sigma(x).cycle_type(),
                s.tau(x).cycle_type(),
                approx.classes()[approx.class_of(x)].len(),
                sim.classes()[sim.class_of(x)].len(),
                back.classes()[back.class_of(x)].len(),
                s.s(x, x) == x,
                s.t(x, x) == x,
            )
        })
        .collect();
    let mut colors = dense_rank(&initial);
    let mut count = colors.iter().max().map_or(0, |m| m + 1);
    loop {
        let keys: Vec<(usize, Vec<[usize; 5]>)> = (0..n)
            .map(|x| {
                let mut around: Vec<[usize; 5]> = (0..n)
                    .map(|y| {
                        [
                            colors[y],
                            colors[s.s(x, y)],
                            colors[s.t(x, y)],
                            colors[s.s(y, x)],
                            colors[s.t(y, x)],
                        ]
                    })
                    .collect();
                around.sort_unstable();
                (colors[x], around)
            })
            .collect();
        let next = dense_rank(&keys);
        let next_count = next.iter().max().map_or(0, |m| m + 1);
        colors = next;
        if next_count == count {
            return colors;
        }
        count = next_count;
    }
}

/// Calls `visit` with every bijection `φ` such that `color_b[φ(x)] == color_a[x]`
/// and that is consistent with `a → b` on the points assigned so far.
/// Stops early when `visit` returns `false`.
fn search_maps(
    a: &Solution,
    b: &Solution,
    color_a: &[usize],
    color_b: &[usize],
    visit: &mut dyn FnMut(&[usize]) -> bool,
) {
    let n = a.n();
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn consistent(a: &Solution, b: &Solution, image: &[usize], k: usize) -> bool {
        // all constraints among points 0..=k whose outputs are also assigned
        let check = |x: usize, y: usize| -> bool {
            let (sx, tx) = (a.s(x, y), a.t(x, y));
            (image[sx] == usize::MAX || image[sx] == b.s(image[x], image[y]))
                && (image[tx] == usize::MAX || image[tx] == b.t(image[x], image[y]))
        };
        (0..=k).all(|y| check(k, y) && check(y, k))
            && (0..k).all(|x| {
                (0..k).all(|y| {
                    // outputs that just became assigned
                    let (sx, tx) = (a.s(x, y), a.t(x, y));
                    (sx != k || image[k] == b.s(image[x], image[y]))
                        && (tx != k || image[k] == b.t(image[x], image[y]))
                })
            })
    }
    fn go(
        k: usize,
        a: &Solution,
        b: &Solution,
        color_a: &[usize],
        color_b: &[usize],
        image: &mut Vec<usize>,
        used: &mut Vec<bool>,
        visit: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        let n = a.n();
        if k == n {
            return visit(image);
        }
        for target in 0..n {
            if used[target] || color_b[target] != color_a[k] {
                continue;
            }
            image[k] = target;
            used[target] = true;
            let keep_going = if consistent(a, b, image, k) {
                go(k + 1, a, b, color_a, color_b, image, used, visit)
            } else {
                true
            };
            used[target] = false;
            image[k] = usize::MAX;
            if !keep_going {
                return false;
            }
        }
        true
    }
    go(0, a, b, color_a, color_b, &mut image, &mut used, visit);
}

/// All automorphisms of `s`.
pub fn automorphism_group(s: &Solution) -> PermGroup {
    let colors = point_colors(s);
    let mut found = Vec::new();
    search_maps(s, s, &colors, &colors, &mut |img| {
        let phi = Permutation::from_images(img.iter().copied()).expect("search yields bijections");
        debug_assert!(is_isomorphism(s, s, &phi));
        found.push(phi);
        true
    });
    let group = PermGroup::closure(s.n(), found.clone()).expect("degrees agree");
    debug_assert_eq!(group.order(), found.len());
    group
}

/// Some isomorphism from `a` onto `b`, if one exists.
pub fn are_isomorphic(a: &Solution, b: &Solution) -> Option<Permutation> {
    if a.n() != b.n() {
        return None;
    }
    let ca = point_colors(a);
    let cb = point_colors(b);
    let mut sa = ca.clone();
    let mut sb = cb.clone();
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb {
        return None;
    }
    let mut found = None;
    search_maps(a, b, &ca, &cb, &mut |img| {
        found = Some(Permutation::from_images(img.iter().copied()).expect("bijection"));
        false
    });
    if let Some(phi) = &found {
        assert!(is_isomorphism(a, b, phi));
    }
    found
}

/// The canonical relabeling of `s` together with the map `φ` that produces it
/// (`canonical == s.relabel(φ)`).
///
/// Among all relabelings that send color class `k` onto the `k`-th block of
/// positions, the one with the lexicographically least concatenated
/// `(sigma, tau)` tables is chosen. The candidate set transforms covariantly
/// under isomorphism, so equal outputs are equivalent to isomorphic inputs.
pub fn canonical_labeling(s: &Solution) -> (Solution, Permutation) {
    let n = s.n();
    if n == 0 {
        return (s.clone(), Permutation::identity(0));
    }
    let colors = point_colors(s);
    let mut position_color: Vec<usize> = colors.clone();
    position_color.sort_unstable();

    let (sigma, tau) = s.flat_tables();
    let mut best: Vec<u8> = Vec::new();
    let mut best_phi: Vec<usize> = Vec::new();
    let mut scratch = vec![0u8; 2 * n * n];

    // preimage[p] = point placed at position p
    let mut preimage = vec![0usize; n];
    let mut phi = vec![0usize; n];
    let mut used = vec![false; n];

    #[allow(clippy::too_many_arguments)]
    fn place(
        p: usize,
        n: usize,
        colors: &[usize],
        position_color: &[usize],
        sigma: &[u8],
        tau: &[u8],
        preimage: &mut [usize],
        phi: &mut [usize],
        used: &mut [bool],
        best: &mut Vec<u8>,
        best_phi: &mut Vec<usize>,
        scratch: &mut [u8],
    ) {
        if p == n {
            compare_candidate(n, sigma, tau, preimage, phi, best, best_phi, scratch);
            return;
        }
        for x in 0..n {
            if used[x] || colors[x] != position_color[p] {
                continue;
            }
            used[x] = true;
            preimage[p] = x;
            phi[x] = p;
            place(
                p + 1,
                n,
                colors,
                position_color,
                sigma,
                tau,
                preimage,
                phi,
                used,
                best,
                best_phi,
                scratch,
            );
            used[x] = false;
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn compare_candidate(
        n: usize,
        sigma: &[u8],
        tau: &[u8],
        preimage: &[usize],
        phi: &[usize],
        best: &mut Vec<u8>,
        best_phi: &mut Vec<usize>,
        scratch: &mut [u8],
    ) {
        let entry = |i: usize| -> u8 {
            let (table, i) = if i < n * n { (sigma, i) } else { (tau, i - n * n) };
            let (p, q) = (i / n, i % n);
            phi[table[preimage[p] * n + preimage[q]] as usize] as u8
        };
        let total = 2 * n * n;
        if best.is_empty() {
            for (i, slot) in scratch.iter_mut().enumerate() {
                *slot = entry(i);
            }
            *best = scratch.to_vec();
            *best_phi = phi.to_vec();
            return;
        }
        for i in 0..total {
            let v = entry(i);
            if v > best[i] {
                return;
            }
            if v < best[i] {
                best[i] = v;
                for (j, slot) in best.iter_mut().enumerate().skip(i + 1) {
                    *slot = entry(j);
                }
                *best_phi = phi.to_vec();
                return;
            }
        }
    }

    place(
        0,
        n,
        &colors,
        &position_color,
        sigma,
        tau,
        &mut preimage,
        &mut phi,
        &mut used,
        &mut best,
        &mut best_phi,
        &mut scratch,
    );
    let phi = Permutation::from_images(best_phi).expect("bijection");
    let (bs, bt) = best.split_at(n * n);
    let canonical = Solution::from_flat(n, bs.to_vec(), bt.to_vec()).expect("relabeling");
    debug_assert_eq!(canonical, s.relabel(&phi));
    (canonical, phi)
}

pub fn canonical_form(s: &Solution) -> Solution {
    canonical_labeling(s).0
}
