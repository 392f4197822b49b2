//! Row-equality relations, the retraction quotient and multipermutation level.

use crate::solution::Solution;

/// A partition of `{0, .., n-1}` with classes indexed in order of their
/// minimal member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    class_of: Vec<usize>,
    classes: Vec<Vec<usize>>,
}

impl Partition {
    /// Groups points by an arbitrary key.
    pub fn by_key<K: PartialEq>(n: usize, key: impl Fn(usize) -> K) -> Partition {
        let keys: Vec<K> = (0..n).map(&key).collect();
        let mut class_of = vec![usize::MAX; n];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for x in 0..n {
            if class_of[x] != usize::MAX {
                continue;
            }
            let id = classes.len();
            let members: Vec<usize> = (x..n).filter(|&y| keys[y] == keys[x]).collect();
            for &y in &members {
                class_of[y] = id;
            }
            classes.push(members);
        }
        Partition { class_of, classes }
    }

    pub fn n(&self) -> usize {
        self.class_of.len()
    }

    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x]
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn is_discrete(&self) -> bool {
        self.classes.len() == self.n()
    }
}

/// x ∼ y iff σ_x = σ_y.
pub fn sim_partition(s: &Solution) -> Partition {
    Partition::by_key(s.n(), |x| s.sigma_row(x))
}

/// x ∽ y iff τ_x = τ_y.
pub fn backsim_partition(s: &Solution) -> Partition {
    Partition::by_key(s.n(), |x| s.tau_row(x))
}

/// x ≈ y iff σ_x = σ_y and τ_x = τ_y.
pub fn approx_partition(s: &Solution) -> Partition {
    Partition::by_key(s.n(), |x| (s.sigma_row(x), s.tau_row(x)))
}

/// The quotient of `s` by ≈, re-indexed by minimal member.
///
/// Panics if ≈ fails to be a congruence, which cannot happen for a solution.
pub fn retraction(s: &Solution) -> Solution {
    let part = approx_partition(s);
    let m = part.len();
    let reps: Vec<usize> = part.classes().iter().map(|c| c[0]).collect();
    let mut sigma = vec![0u8; m * m];
    let mut tau = vec![0u8; m * m];
    for (i, &x) in reps.iter().enumerate() {
        for (j, &y) in reps.iter().enumerate() {
            sigma[i * m + j] = part.class_of(s.s(x, y)) as u8;
            tau[i * m + j] = part.class_of(s.t(x, y)) as u8;
        }
    }
    for x in 0..s.n() {
        let cx = part.class_of(x);
        for y in 0..s.n() {
            let cy = part.class_of(y);
            assert_eq!(
                sigma[cx * m + cy] as usize,
                part.class_of(s.s(x, y)),
                "≈ is not a congruence for sigma"
            );
            assert_eq!(
                tau[cx * m + cy] as usize,
                part.class_of(s.t(x, y)),
                "≈ is not a congruence for tau"
            );
        }
    }
    Solution::from_flat(m, sigma, tau).expect("quotient rows of bijections are bijections")
}

/// Least `k` with `|Ret^k(s)| = 1`, or `None` when the retraction sequence
/// stalls at more than one point or exceeds `cap` steps (`cap` defaults to n).
///
/// A one-point solution has level 0.
pub fn multipermutation_level(s: &Solution, cap: Option<usize>) -> Option<usize> {
    let cap = cap.unwrap_or(s.n());
    let mut current = s.clone();
    let mut level = 0;
    while current.n() > 1 {
        if level >= cap {
            return None;
        }
        let next = retraction(&current);
        if next.n() == current.n() {
            return None;
        }
        current = next;
        level += 1;
    }
    Some(level)
}

pub fn is_irretractable(s: &Solution) -> bool {
    s.n() > 1 && approx_partition(s).is_discrete()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;
    use crate::samples;

    #[test]
    fn partitions() {
        let base = samples::two_block_base();
        assert_eq!(approx_partition(&base).classes(), &[vec![0, 1], vec![2, 3]]);
        assert_eq!(approx_partition(&Solution::trivial(3)).len(), 1);
        let ex = samples::irretractable_five();
        assert!(approx_partition(&ex).is_discrete());
        assert_eq!(sim_partition(&ex).classes(), &[vec![0], vec![1, 3], vec![2, 4]]);
        assert_eq!(backsim_partition(&ex).classes(), &[vec![0, 2, 3], vec![1, 4]]);
    }

    #[test]
    fn retractions() {
        let r = retraction(&samples::two_block_base());
        // quotient of {0,1},{2,3}: each class swaps nothing on its own class
        // and acts on the other class, which is a single point after the
        // quotient, so both rows are the identity on two points
        assert_eq!(r, Solution::trivial(2));
        assert_eq!(retraction(&Solution::trivial(4)), Solution::trivial(1));
        let ex = samples::irretractable_five();
        assert_eq!(retraction(&ex), ex);
    }

    #[test]
    fn levels() {
        assert_eq!(multipermutation_level(&samples::level_three(), None), Some(3));
        let f = Permutation::from_cycles(3, "(0,1,2)").unwrap();
        let perm = Solution::permutational(&f, &f.inverse()).unwrap();
        assert_eq!(multipermutation_level(&perm, None), Some(1));
        assert_eq!(multipermutation_level(&samples::irretractable_five(), None), None);
        assert_eq!(multipermutation_level(&Solution::trivial(1), None), Some(0));
        assert_eq!(multipermutation_level(&samples::two_block_base(), None), Some(2));
        assert_eq!(multipermutation_level(&samples::level_three(), Some(2)), None);
    }

    #[test]
    fn irretractability() {
        assert!(is_irretractable(&samples::irretractable_five()));
        assert!(!is_irretractable(&samples::two_block_base()));
        assert!(!is_irretractable(&Solution::trivial(1)));
    }
}
