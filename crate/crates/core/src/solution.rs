//! The [`Solution`] value and the pointwise axioms it can satisfy.
//!
//! A solution on `X = {0, .., n-1}` is a pair of permutation families. The map
//! `r(x, y) = (σ_x(y), τ_y(x))` is stored as two `n x n` tables:
//! `sigma[x][y] = σ_x(y)` and `tau[y][x] = τ_y(x)`, so that row `x` of either
//! table is the permutation carrying subscript `x`.
//!
//! Construction checks non-degeneracy (every row is a bijection) but not the
//! braid relation; [`Solution::check_braid`] does that.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{is_bijection, Permutation, MAX_DEGREE};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Solution {
    n: usize,
    sigma: Vec<u8>,
    tau: Vec<u8>,
    sigma_inv: Vec<u8>,
    tau_inv: Vec<u8>,
}

/// The JSON interchange shape `{"n": .., "sigma": [[..]], "tau": [[..]]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolutionJson {
    pub n: usize,
    pub sigma: Vec<Vec<usize>>,
    pub tau: Vec<Vec<usize>>,
}

fn invert_rows(n: usize, table: &[u8]) -> Vec<u8> {
    let mut inv = vec![0u8; n * n];
    for x in 0..n {
        for y in 0..n {
            inv[x * n + table[x * n + y] as usize] = y as u8;
        }
    }
    inv
}

fn flatten(table: &'static str, n: usize, rows: &[Vec<usize>]) -> Result<Vec<u8>> {
    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
        return Err(Error::ShapeMismatch {
            table,
            n,
            rows: rows.len(),
            lengths: rows.iter().map(Vec::len).collect(),
        });
    }
    let mut flat = Vec::with_capacity(n * n);
    for (x, row) in rows.iter().enumerate() {
        for &v in row {
            if v >= n {
                return Err(Error::NonBijectiveRow {
                    table,
                    subscript: x,
                });
            }
            flat.push(v as u8);
        }
    }
    Ok(flat)
}

impl Solution {
    /// Builds a solution from raw tables. Every row must be a bijection; the
    /// braid relation is not checked.
    pub fn new(n: usize, sigma: &[Vec<usize>], tau: &[Vec<usize>]) -> Result<Solution> {
        if n > MAX_DEGREE {
            return Err(Error::DegreeTooLarge(n));
        }
        let sigma = flatten("sigma", n, sigma)?;
        let tau = flatten("tau", n, tau)?;
        Solution::from_flat(n, sigma, tau)
    }

    pub fn from_rows(sigma: &[Permutation], tau: &[Permutation]) -> Result<Solution> {
        let n = sigma.len();
        if tau.len() != n {
            return Err(Error::ShapeMismatch {
                table: "tau",
                n,
                rows: tau.len(),
                lengths: tau.iter().map(Permutation::degree).collect(),
            });
        }
        for (table, rows) in [("sigma", sigma), ("tau", tau)] {
            if rows.iter().any(|r| r.degree() != n) {
                return Err(Error::ShapeMismatch {
                    table,
                    n,
                    rows: n,
                    lengths: rows.iter().map(Permutation::degree).collect(),
                });
            }
        }
        let sigma: Vec<u8> = sigma.iter().flat_map(|p| p.bytes().to_vec()).collect();
        let tau: Vec<u8> = tau.iter().flat_map(|p| p.bytes().to_vec()).collect();
        Solution::from_flat(n, sigma, tau)
    }

    pub(crate) fn from_flat(n: usize, sigma: Vec<u8>, tau: Vec<u8>) -> Result<Solution> {
        for (table, flat) in [("sigma", &sigma), ("tau", &tau)] {
            for x in 0..n {
                if !is_bijection(&flat[x * n..(x + 1) * n]) {
                    return Err(Error::NonBijectiveRow {
                        table,
                        subscript: x,
                    });
                }
            }
        }
        let sigma_inv = invert_rows(n, &sigma);
        let tau_inv = invert_rows(n, &tau);
        Ok(Solution {
            n,
            sigma,
            tau,
            sigma_inv,
            tau_inv,
        })
    }

    /// The projection solution: every σ_x and τ_y is the identity.
    pub fn trivial(n: usize) -> Solution {
        let id = Permutation::identity(n);
        Solution::permutational(&id, &id).expect("identity rows")
    }

    /// The permutational solution with σ_x = f and τ_y = g for all x, y.
    /// It satisfies the braid relation exactly when `f` and `g` commute.
    pub fn permutational(f: &Permutation, g: &Permutation) -> Result<Solution> {
        let n = f.degree();
        Solution::from_rows(&vec![f.clone(); n], &vec![g.clone(); n])
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// σ_x(y)
    #[inline]
    pub fn s(&self, x: usize, y: usize) -> usize {
        self.sigma[x * self.n + y] as usize
    }

    /// τ_y(x)
    #[inline]
    pub fn t(&self, y: usize, x: usize) -> usize {
        self.tau[y * self.n + x] as usize
    }

    /// σ_x⁻¹(z)
    #[inline]
    pub fn s_inv(&self, x: usize, z: usize) -> usize {
        self.sigma_inv[x * self.n + z] as usize
    }

    /// τ_y⁻¹(z)
    #[inline]
    pub fn t_inv(&self, y: usize, z: usize) -> usize {
        self.tau_inv[y * self.n + z] as usize
    }

    pub(crate) fn sigma_row(&self, x: usize) -> &[u8] {
        &self.sigma[x * self.n..(x + 1) * self.n]
    }

    pub(crate) fn tau_row(&self, y: usize) -> &[u8] {
        &self.tau[y * self.n..(y + 1) * self.n]
    }

    pub(crate) fn flat_tables(&self) -> (&[u8], &[u8]) {
        (&self.sigma, &self.tau)
    }

    pub fn sigma(&self, x: usize) -> Permutation {
        Permutation::from_bytes_unchecked(self.sigma_row(x))
    }

    pub fn tau(&self, y: usize) -> Permutation {
        Permutation::from_bytes_unchecked(self.tau_row(y))
    }

    pub fn sigma_rows(&self) -> Vec<Permutation> {
        (0..self.n).map(|x| self.sigma(x)).collect()
    }

    pub fn tau_rows(&self) -> Vec<Permutation> {
        (0..self.n).map(|y| self.tau(y)).collect()
    }

    /// r(x, y) = (σ_x(y), τ_y(x))
    #[inline]
    pub fn r(&self, x: usize, y: usize) -> (usize, usize) {
        (self.s(x, y), self.t(y, x))
    }

    /// The isomorphic copy obtained by renaming each point `x` to `φ(x)`:
    /// σ'_{φ(x)} = φ σ_x φ⁻¹ and likewise for τ.
    pub fn relabel(&self, phi: &Permutation) -> Solution {
        let n = self.n;
        assert_eq!(phi.degree(), n, "relabeling degree mismatch");
        let mut sigma = vec![0u8; n * n];
        let mut tau = vec![0u8; n * n];
        for x in 0..n {
            let px = phi.apply(x);
            for y in 0..n {
                let py = phi.apply(y);
                sigma[px * n + py] = phi.apply(self.s(x, y)) as u8;
                tau[px * n + py] = phi.apply(self.t(x, y)) as u8;
            }
        }
        Solution::from_flat(n, sigma, tau).expect("relabeling preserves bijectivity")
    }

    /// First triple on which `(id×r)(r×id)(id×r)` and `(r×id)(id×r)(r×id)`
    /// disagree, in lexicographic order.
    pub fn braid_violation(&self) -> Option<(usize, usize, usize)> {
        let n = self.n;
        let mut first = None;
        'outer: for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    // (id×r)(r×id)(id×r)
                    let (b1, c1) = self.r(y, z);
                    let (a2, b2) = self.r(x, b1);
                    let (b3, c3) = self.r(b2, c1);
                    let lhs = (a2, b3, c3);
                    // (r×id)(id×r)(r×id)
                    let (a1, b1) = self.r(x, y);
                    let (b2, c2) = self.r(b1, z);
                    let (a3, b3) = self.r(a1, b2);
                    let rhs = (a3, b3, c2);
                    if lhs != rhs {
                        first = Some((x, y, z));
                        break 'outer;
                    }
                }
            }
        }
        let birack = self.birack_identities_hold();
        assert_eq!(
            first.is_none(),
            birack,
            "braid relation and the three derived birack identities disagree"
        );
        first
    }

    pub fn check_braid(&self) -> bool {
        self.braid_violation().is_none()
    }

    /// σ_xσ_y = σ_{σ_x(y)}σ_{τ_y(x)}, the mixed identity, and
    /// τ_xτ_y = τ_{τ_x(y)}τ_{σ_y(x)}, over all points.
    fn birack_identities_hold(&self) -> bool {
        let n = self.n;
        for x in 0..n {
            for y in 0..n {
                let sxy = self.s(x, y);
                let tyx = self.t(y, x);
                let txy = self.t(x, y);
                let syx = self.s(y, x);
                for z in 0..n {
                    if self.s(x, self.s(y, z)) != self.s(sxy, self.s(tyx, z)) {
                        return false;
                    }
                    if self.t(x, self.t(y, z)) != self.t(txy, self.t(syx, z)) {
                        return false;
                    }
                    let lhs = self.t(self.s(tyx, z), sxy);
                    let rhs = self.s(self.t(self.s(y, z), x), self.t(z, y));
                    if lhs != rhs {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// r² = id on X².
    pub fn is_involutive(&self) -> bool {
        let n = self.n;
        (0..n).all(|x| {
            (0..n).all(|y| {
                let (u, v) = self.r(x, y);
                self.r(u, v) == (x, y)
            })
        })
    }

    pub fn is_square_free(&self) -> bool {
        (0..self.n).all(|x| self.s(x, x) == x && self.t(x, x) == x)
    }

    /// σ_x = τ_x⁻¹ for every x.
    pub fn satisfies_lri(&self) -> bool {
        let n = self.n;
        (0..n).all(|x| (0..n).all(|y| self.t(x, self.s(x, y)) == y))
    }

    /// σ_xσ_y = σ_{σ_x(y)}σ_x for all x, y.
    pub fn is_left_distributive(&self) -> bool {
        let n = self.n;
        (0..n).all(|x| {
            (0..n).all(|y| {
                let sxy = self.s(x, y);
                (0..n).all(|z| self.s(x, self.s(y, z)) == self.s(sxy, self.s(x, z)))
            })
        })
    }

    /// τ_xτ_y = τ_{τ_x(y)}τ_x for all x, y.
    pub fn is_right_distributive(&self) -> bool {
        let n = self.n;
        (0..n).all(|x| {
            (0..n).all(|y| {
                let txy = self.t(x, y);
                (0..n).all(|z| self.t(x, self.t(y, z)) == self.t(txy, self.t(x, z)))
            })
        })
    }

    pub fn is_distributive(&self) -> bool {
        self.is_left_distributive() && self.is_right_distributive()
    }

    /// The solution `r⁻¹(x, y) = (σ̂_x(y), τ̂_y(x))`.
    pub fn inverse_solution(&self) -> Result<Solution> {
        let n = self.n;
        let mut inv = vec![usize::MAX; n * n];
        for x in 0..n {
            for y in 0..n {
                let (a, b) = self.r(x, y);
                let slot = &mut inv[a * n + b];
                if *slot != usize::MAX {
                    return Err(Error::NotBijective);
                }
                *slot = x * n + y;
            }
        }
        let mut sigma = vec![0u8; n * n];
        let mut tau = vec![0u8; n * n];
        for x in 0..n {
            for y in 0..n {
                let pre = inv[x * n + y];
                let (a, b) = (pre / n, pre % n);
                sigma[x * n + y] = a as u8;
                tau[y * n + x] = b as u8;
            }
        }
        let hat = Solution::from_flat(n, sigma, tau)?;
        for x in 0..n {
            for y in 0..n {
                let (sh, th) = (hat.s(x, y), hat.t(y, x));
                assert_eq!(self.s(sh, th), x);
                assert_eq!(self.t(th, sh), y);
                let (s, t) = (self.s(x, y), self.t(y, x));
                assert_eq!(hat.s(s, t), x);
                assert_eq!(hat.t(t, s), y);
            }
        }
        Ok(hat)
    }

    pub fn to_json(&self) -> SolutionJson {
        let n = self.n;
        let table = |flat: &[u8]| -> Vec<Vec<usize>> {
            (0..n)
                .map(|x| flat[x * n..(x + 1) * n].iter().map(|&v| v as usize).collect())
                .collect()
        };
        SolutionJson {
            n,
            sigma: table(&self.sigma),
            tau: table(&self.tau),
        }
    }

    pub fn from_json(json: &SolutionJson) -> Result<Solution> {
        Solution::new(json.n, &json.sigma, &json.tau)
    }
}

impl Serialize for Solution {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Solution {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let json = SolutionJson::deserialize(deserializer)?;
        Solution::from_json(&json).map_err(serde::de::Error::custom)
    }
}

impl fmt::Debug for Solution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sigma: Vec<String> = self.sigma_rows().iter().map(Permutation::to_cycles).collect();
        let tau: Vec<String> = self.tau_rows().iter().map(Permutation::to_cycles).collect();
        f.debug_struct("Solution")
            .field("n", &self.n)
            .field("sigma", &sigma)
            .field("tau", &tau)
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples;

    fn p(n: usize, s: &str) -> Permutation {
        Permutation::from_cycles(n, s).unwrap()
    }

    // r² scan written directly over the tables.
    fn r_squared_fixes_everything(s: &Solution) -> bool {
        let j = s.to_json();
        (0..s.n()).all(|x| {
            (0..s.n()).all(|y| {
                let (u, v) = (j.sigma[x][y], j.tau[y][x]);
                (j.sigma[u][v], j.tau[v][u]) == (x, y)
            })
        })
    }

    #[test]
    fn construction() {
        let t = Solution::new(2, &[vec![0, 1], vec![0, 1]], &[vec![0, 1], vec![0, 1]]).unwrap();
        assert_eq!(t, Solution::trivial(2));
        assert!(t.check_braid());

        let ex = samples::irretractable_five();
        assert_eq!(ex.sigma(1), p(5, "(0,2,3)"));
        assert_eq!(ex.tau(0), p(5, "(1,4)(2,3)"));

        let err = Solution::new(2, &[vec![0, 0], vec![0, 1]], &[vec![0, 1], vec![0, 1]]);
        assert!(matches!(
            err,
            Err(Error::NonBijectiveRow {
                table: "sigma",
                subscript: 0
            })
        ));
        let err = Solution::new(2, &[vec![0, 1]], &[vec![0, 1], vec![0, 1]]);
        assert!(matches!(err, Err(Error::ShapeMismatch { .. })));
        let err = Solution::new(2, &[vec![0, 1], vec![1, 0]], &[vec![0, 1], vec![1, 1]]);
        assert!(matches!(
            err,
            Err(Error::NonBijectiveRow {
                table: "tau",
                subscript: 1
            })
        ));
    }

    #[test]
    fn braid_examples() {
        assert!(samples::irretractable_five().check_braid());
        let f = p(4, "(0,1)(2,3)");
        let g = p(4, "(0,2)(1,3)");
        assert!(Solution::permutational(&f, &g).unwrap().check_braid());
        let h = p(4, "(0,1,2)");
        assert!(!Solution::permutational(&f, &h).unwrap().check_braid());
    }

    #[test]
    fn involutive_examples() {
        assert!(Solution::trivial(3).is_involutive());
        assert!(samples::two_block_base().is_involutive());
        let ex = samples::irretractable_five();
        assert!(!ex.is_involutive());
        assert!(!r_squared_fixes_everything(&ex));
    }

    #[test]
    fn square_free_and_lri() {
        assert!(samples::two_block_base().is_square_free());
        assert!(Solution::trivial(4).is_square_free());
        let ex = samples::irretractable_five();
        // τ_0 = (1,4)(2,3) fixes 0 but σ_2 = (0,3,2) moves 2
        assert!(!ex.is_square_free());
        assert_ne!(ex.s(2, 2), 2);

        assert!(samples::two_block_base().satisfies_lri());
        assert!(Solution::trivial(3).satisfies_lri());
        assert!(!ex.satisfies_lri());
    }

    #[test]
    fn distributivity() {
        assert!(samples::two_block_base().is_distributive());
        assert!(Solution::trivial(2).is_distributive());
        // brute-force the 4x4 left identity for the level-three sample
        let s = samples::level_three();
        let mut left = true;
        for x in 0..4 {
            for y in 0..4 {
                let lhs = &s.sigma(x) * &s.sigma(y);
                let rhs = &s.sigma(s.s(x, y)) * &s.sigma(x);
                left &= lhs == rhs;
            }
        }
        assert_eq!(s.is_left_distributive(), left);
    }

    #[test]
    fn inverse_solution_cases() {
        let base = samples::two_block_base();
        assert_eq!(base.inverse_solution().unwrap(), base);
        let ex = samples::irretractable_five();
        let hat = ex.inverse_solution().unwrap();
        assert!(hat.check_braid());
        assert_eq!(hat.inverse_solution().unwrap(), ex);
        assert_ne!(hat, ex);
    }

    #[test]
    fn json_round_trip() {
        let ex = samples::irretractable_five();
        let text = serde_json::to_string(&ex).unwrap();
        assert!(text.starts_with("{\"n\":5,\"sigma\":[[0,1,2,3,4],"));
        let back: Solution = serde_json::from_str(&text).unwrap();
        assert_eq!(back, ex);
        assert!(serde_json::from_str::<Solution>(r#"{"n":2,"sigma":[[0,0],[0,1]],"tau":[[0,1],[0,1]]}"#).is_err());
    }

    #[test]
    fn relabel_preserves_braid() {
        let ex = samples::irretractable_five();
        let phi = p(5, "(0,4,1)(2,3)");
        let moved = ex.relabel(&phi);
        assert!(moved.check_braid());
        assert_eq!(moved.relabel(&phi.inverse()), ex);
        for x in 0..5 {
            assert_eq!(moved.sigma(phi.apply(x)), ex.sigma(x).conjugate_by(&phi));
        }
    }

    #[test]
    fn permutational_braid_iff_commuting() {
        for f in crate::perm::all_permutations(3) {
            for g in crate::perm::all_permutations(3) {
                let s = Solution::permutational(&f, &g).unwrap();
                assert_eq!(s.check_braid(), f.commutes(&g));
            }
        }
    }
}
