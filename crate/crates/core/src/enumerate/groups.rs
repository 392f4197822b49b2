//! Finite abelian groups as products of cyclic factors.

use serde::{Deserialize, Serialize};

/// Z_{f_1} × … × Z_{f_k} with prime-power factors sorted ascending.
///
/// Elements are indexed `0..order()` in lexicographic order of their residue
/// tuples, the first factor being the most significant; index 0 is zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AbelianGroupSpec {
    factors: Vec<usize>,
}

impl AbelianGroupSpec {
    /// Normalizes arbitrary cyclic factors to sorted prime-power form.
    pub fn new(factors: &[usize]) -> AbelianGroupSpec {
        let mut pp = Vec::new();
        for &f in factors {
            assert!(f >= 1, "cyclic factor must be positive");
            for (p, e) in factorize(f) {
                pp.push(p.pow(e as u32));
            }
        }
        pp.sort_unstable();
        AbelianGroupSpec { factors: pp }
    }

    pub fn trivial() -> AbelianGroupSpec {
        AbelianGroupSpec { factors: Vec::new() }
    }

    pub fn factors(&self) -> &[usize] {
        &self.factors
    }

    pub fn order(&self) -> usize {
        self.factors.iter().product()
    }

    pub fn is_cyclic(&self) -> bool {
        let mut primes: Vec<usize> = self.factors.iter().map(|&f| factorize(f)[0].0).collect();
        let len = primes.len();
        primes.dedup();
        primes.len() == len
    }

    pub fn to_tuple(&self, mut index: usize) -> Vec<usize> {
        let mut out = vec![0; self.factors.len()];
        for (slot, &f) in out.iter_mut().zip(&self.factors).rev() {
            *slot = index % f;
            index /= f;
        }
        out
    }

    pub fn from_tuple(&self, tuple: &[usize]) -> usize {
        tuple
            .iter()
            .zip(&self.factors)
            .fold(0, |acc, (&t, &f)| acc * f + t % f)
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        let (ta, tb) = (self.to_tuple(a), self.to_tuple(b));
        let sum: Vec<usize> = ta.iter().zip(&tb).map(|(x, y)| x + y).collect();
        self.from_tuple(&sum)
    }

    pub fn neg(&self, a: usize) -> usize {
        let t: Vec<usize> = self
            .to_tuple(a)
            .iter()
            .zip(&self.factors)
            .map(|(&x, &f)| (f - x) % f)
            .collect();
        self.from_tuple(&t)
    }

    /// Full addition table, `table[a * order + b] = a + b`.
    pub fn addition_table(&self) -> Vec<usize> {
        let m = self.order();
        (0..m * m).map(|i| self.add(i / m, i % m)).collect()
    }

    /// Whether `elements` generate the whole group.
    pub fn generated_by(&self, elements: &[usize]) -> bool {
        let m = self.order();
        let mut reached = vec![false; m];
        reached[0] = true;
        let mut frontier = vec![0];
        while let Some(a) = frontier.pop() {
            for &g in elements {
                let b = self.add(a, g);
                if !reached[b] {
                    reached[b] = true;
                    frontier.push(b);
                }
            }
        }
        reached.iter().all(|&r| r)
    }

    /// Human-readable name such as `Z2xZ4`, or `1` for the trivial group.
    pub fn name(&self) -> String {
        if self.factors.is_empty() {
            return "1".to_string();
        }
        self.factors
            .iter()
            .map(|f| format!("Z{f}"))
            .collect::<Vec<_>>()
            .join("x")
    }
}

fn factorize(mut m: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= m {
        let mut e = 0;
        while m.is_multiple_of(p) {
            m /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += 1;
    }
    if m > 1 {
        out.push((m, 1));
    }
    out
}

/// Partitions of `k` as non-increasing sequences, in lexicographically
/// decreasing order.
pub fn partitions(k: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(current.clone());
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            current.push(part);
            go(rest - part, part, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    go(k, k, &mut Vec::new(), &mut out);
    out
}

/// One group per isomorphism class of abelian groups of order `m`.
pub fn abelian_groups(m: usize) -> Vec<AbelianGroupSpec> {
    assert!(m >= 1, "group order must be positive");
    let mut specs = vec![Vec::new()];
    for (p, e) in factorize(m) {
        let mut next = Vec::new();
        for lambda in partitions(e) {
            for base in &specs {
                let mut f: Vec<usize> = base.clone();
                f.extend(lambda.iter().map(|&l| p.pow(l as u32)));
                next.push(f);
            }
        }
        specs = next;
    }
    let mut out: Vec<AbelianGroupSpec> = specs.iter().map(|f| AbelianGroupSpec::new(f)).collect();
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_classes() {
        assert_eq!(abelian_groups(1), vec![AbelianGroupSpec::trivial()]);
        let four = abelian_groups(4);
        assert_eq!(four.len(), 2);
        assert!(four.contains(&AbelianGroupSpec::new(&[4])));
        assert!(four.contains(&AbelianGroupSpec::new(&[2, 2])));
        assert_eq!(abelian_groups(6), vec![AbelianGroupSpec::new(&[2, 3])]);
        assert_eq!(abelian_groups(8).len(), 3);
        assert_eq!(abelian_groups(12).len(), 2);
        assert_eq!(abelian_groups(16).len(), 5);
        for m in 1..=32 {
            assert!(abelian_groups(m).iter().all(|g| g.order() == m));
        }
    }

    #[test]
    fn normalization() {
        assert_eq!(AbelianGroupSpec::new(&[6]).factors(), &[2, 3]);
        assert!(AbelianGroupSpec::new(&[6]).is_cyclic());
        assert!(!AbelianGroupSpec::new(&[2, 2]).is_cyclic());
        assert_eq!(AbelianGroupSpec::new(&[2, 4]).name(), "Z2xZ4");
        assert_eq!(AbelianGroupSpec::trivial().name(), "1");
    }

    #[test]
    fn arithmetic() {
        let g = AbelianGroupSpec::new(&[2, 3]);
        assert_eq!(g.to_tuple(5), vec![1, 2]);
        assert_eq!(g.from_tuple(&[1, 2]), 5);
        for a in 0..6 {
            assert_eq!(g.add(a, g.neg(a)), 0);
            for b in 0..6 {
                assert_eq!(g.add(a, b), g.add(b, a));
            }
        }
        assert!(g.generated_by(&[5]));
        assert!(!g.generated_by(&[3]));
        assert!(!g.generated_by(&[]));
        assert!(AbelianGroupSpec::trivial().generated_by(&[]));
        let k = AbelianGroupSpec::new(&[2, 2]);
        assert!(!k.generated_by(&[1]));
        assert!(k.generated_by(&[1, 2]));
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (1..=8).map(|k| partitions(k).len()).collect();
        assert_eq!(counts, vec![1, 2, 3, 5, 7, 11, 15, 22]);
        assert_eq!(partitions(3), vec![vec![3], vec![2, 1], vec![1, 1, 1]]);
    }
}
