//! Isotopes: post-composing every σ_x with π₁ and every τ_x with π₂.
//!
//! For a 2-permutational solution the diagonal maps give the unique
//! square-free isotope, and that isotope is 2-reductive. This is how every
//! level-2 solution is decomposed into a square-free base plus a pair of
//! commuting automorphisms.

use serde::Serialize;

use crate::classify::{diagonal_t, diagonal_u, is_2_permutational, is_2_reductive, is_automorphism};
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::solution::Solution;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IsotopePair {
    pub pi1: Permutation,
    pub pi2: Permutation,
}

#[derive(Serialize)]
struct PairJson {
    pi1: String,
    pi2: String,
}

impl Serialize for IsotopePair {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        PairJson {
            pi1: self.pi1.to_cycles(),
            pi2: self.pi2.to_cycles(),
        }
        .serialize(serializer)
    }
}

impl IsotopePair {
    pub fn new(pi1: Permutation, pi2: Permutation) -> Result<Self> {
        if pi1.degree() != pi2.degree() {
            return Err(Error::DegreeMismatch {
                left: pi1.degree(),
                right: pi2.degree(),
            });
        }
        Ok(IsotopePair { pi1, pi2 })
    }

    pub fn identity(n: usize) -> Self {
        IsotopePair {
            pi1: Permutation::identity(n),
            pi2: Permutation::identity(n),
        }
    }

    pub fn parse(n: usize, pi1: &str, pi2: &str) -> Result<Self> {
        IsotopePair::new(Permutation::from_cycles(n, pi1)?, Permutation::from_cycles(n, pi2)?)
    }

    pub fn inverse(&self) -> Self {
        IsotopePair {
            pi1: self.pi1.inverse(),
            pi2: self.pi2.inverse(),
        }
    }

    pub fn degree(&self) -> usize {
        self.pi1.degree()
    }

    /// Both components conjugated by `phi`.
    pub fn conjugate_by(&self, phi: &Permutation) -> Self {
        IsotopePair {
            pi1: self.pi1.conjugate_by(phi),
            pi2: self.pi2.conjugate_by(phi),
        }
    }
}

/// The tables μ_x = σ_xπ₁, ν_x = τ_xπ₂ without checking the braid relation.
pub fn isotope_tables(s: &Solution, pair: &IsotopePair) -> Result<Solution> {
    let n = s.n();
    if pair.degree() != n {
        return Err(Error::DegreeMismatch {
            left: n,
            right: pair.degree(),
        });
    }
    let mut sigma = Vec::with_capacity(n * n);
    let mut tau = Vec::with_capacity(n * n);
    for x in 0..n {
        sigma.extend((0..n).map(|y| s.s(x, pair.pi1.apply(y)) as u8));
    }
    for x in 0..n {
        tau.extend((0..n).map(|y| s.t(x, pair.pi2.apply(y)) as u8));
    }
    Solution::from_flat(n, sigma, tau)
}

/// The (π₁, π₂)-isotope, rejected with the first failing triple when the
/// composed tables violate the braid relation.
pub fn make_isotope(s: &Solution, pair: &IsotopePair) -> Result<Solution> {
    let iso = isotope_tables(s, pair)?;
    match iso.braid_violation() {
        None => Ok(iso),
        Some((x, y, z)) => Err(Error::BraidViolation { x, y, z }),
    }
}

/// The three isotope conditions over a 2-reductive base (L, R):
/// L_xπ₁L_y = L_{π₁(y)}π₁L_{π₂(x)},
/// R_xπ₂R_y = R_{π₂(y)}π₂R_{π₁(x)} and
/// R_{π₁(y)}π₂L_xπ₁ = L_{π₂(x)}π₁R_yπ₂.
pub fn check_is_conditions(base: &Solution, pair: &IsotopePair) -> bool {
    let n = base.n();
    if pair.degree() != n {
        return false;
    }
    let (p1, p2) = (&pair.pi1, &pair.pi2);
    let l = |x: usize, y: usize| base.s(x, y);
    let r = |x: usize, y: usize| base.t(x, y);
    for x in 0..n {
        for y in 0..n {
            for w in 0..n {
                let is1 = l(x, p1.apply(l(y, w))) == l(p1.apply(y), p1.apply(l(p2.apply(x), w)));
                let is3 = r(x, p2.apply(r(y, w))) == r(p2.apply(y), p2.apply(r(p1.apply(x), w)));
                let is2 = r(p1.apply(y), p2.apply(l(x, p1.apply(w))))
                    == l(p2.apply(x), p1.apply(r(y, p2.apply(w))));
                if !(is1 && is3 && is2) {
                    return false;
                }
            }
        }
    }
    true
}

/// The (σ_e⁻¹, τ_e⁻¹)-isotope of a 2-permutational solution, which is 2-reductive.
pub fn reductive_isotope_at(s: &Solution, e: usize) -> Result<Solution> {
    if e >= s.n() {
        return Err(Error::PointOutOfRange {
            point: e,
            degree: s.n(),
        });
    }
    if !is_2_permutational(s) {
        return Err(Error::NotTwoPermutational);
    }
    let pair = IsotopePair::new(s.sigma(e).inverse(), s.tau(e).inverse())?;
    let iso = make_isotope(s, &pair)?;
    assert!(is_2_reductive(&iso), "(σ_e⁻¹, τ_e⁻¹)-isotope must be 2-reductive");
    Ok(iso)
}

/// Splits a 2-permutational solution into its square-free 2-reductive base
/// (the (U, T)-isotope) and the pair `(U⁻¹, T⁻¹)` that rebuilds the input:
/// `make_isotope(base, pair) == s`.
pub fn square_free_isotope(s: &Solution) -> Result<(Solution, IsotopePair)> {
    if !is_2_permutational(s) {
        return Err(Error::NotTwoPermutational);
    }
    let u = diagonal_u(s)?;
    let t = diagonal_t(s)?;
    let base = make_isotope(s, &IsotopePair::new(u.clone(), t.clone())?)?;
    assert!(base.is_square_free(), "(U, T)-isotope must be square-free");
    assert!(is_2_reductive(&base), "(U, T)-isotope must be 2-reductive");
    assert!(is_automorphism(&base, &u) && is_automorphism(&base, &t));
    let pair = IsotopePair::new(u.inverse(), t.inverse())?;
    debug_assert_eq!(&isotope_tables(&base, &pair)?, s);
    Ok((base, pair))
}

/// π₂ = L_xπ₁⁻¹L⁻¹_{π₁(x)} for every x: the (π₁, π₂)-isotope of an involutive
/// 2-reductive base is involutive exactly when this holds.
pub fn involutive_pair_condition(base: &Solution, pair: &IsotopePair) -> bool {
    let n = base.n();
    if pair.degree() != n {
        return false;
    }
    let p1_inv = pair.pi1.inverse();
    (0..n).all(|x| {
        let px = pair.pi1.apply(x);
        (0..n).all(|w| pair.pi2.apply(w) == base.s(x, p1_inv.apply(base.s_inv(px, w))))
    })
}

/// Runs the involutive-isotope checks on a 2-permutational involutive solution:
/// the (U, T)-isotope and every (σ_e⁻¹, τ_e⁻¹)-isotope are involutive,
/// T⁻¹ = σ_xUτ_x for every x, and the identities σ_xτ_yτ_x = τ_{σ_x(y)} and
/// τ_yτ_x⁻¹ = σ_xτ_{σ_x⁻¹(y)} hold.
pub fn check_involutive_isotope_consistency(s: &Solution) -> Result<bool> {
    if !is_2_permutational(s) {
        return Err(Error::NotTwoPermutational);
    }
    if !s.is_involutive() {
        return Err(Error::NotInvolutive);
    }
    let n = s.n();
    let (base, _) = square_free_isotope(s)?;
    if !base.is_involutive() {
        return Ok(false);
    }
    for e in 0..n {
        if !reductive_isotope_at(s, e)?.is_involutive() {
            return Ok(false);
        }
    }
    let u = diagonal_u(s)?;
    let t_inv = diagonal_t(s)?.inverse();
    for x in 0..n {
        for w in 0..n {
            if t_inv.apply(w) != s.s(x, u.apply(s.t(x, w))) {
                return Ok(false);
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            let sxy = s.s(x, y);
            let sxiy = s.s_inv(x, y);
            for w in 0..n {
                if s.s(x, s.t(y, s.t(x, w))) != s.t(sxy, w) {
                    return Ok(false);
                }
                if s.t(y, s.t_inv(x, w)) != s.s(x, s.t(sxiy, w)) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}
