//! Level-2 predicates, diagonal maps, displacement group and the derived
//! identity suite for 2-permutational solutions.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{commute_pairwise, PermPair, PermPairGroup, Permutation};
use crate::retract::{backsim_partition, is_irretractable, multipermutation_level, sim_partition};
use crate::solution::Solution;

/// Flat record of every predicate this crate knows how to evaluate.
///
/// `mpl` is `None` when the retraction sequence does not reach a point, or
/// when the input fails the braid relation. A one-point solution has level 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub braid: bool,
    pub involutive: bool,
    pub square_free: bool,
    pub lri: bool,
    pub left_distributive: bool,
    pub right_distributive: bool,
    pub two_reductive: bool,
    pub two_permutational: bool,
    pub irretractable: bool,
    pub mpl: Option<usize>,
    pub dis_abelian: bool,
}

impl ClassificationReport {
    /// Implications that must hold between the flags of any solution.
    pub fn is_consistent(&self) -> bool {
        let imp = |a: bool, b: bool| !a || b;
        imp(self.two_reductive, self.two_permutational)
            && imp(self.square_free && self.two_permutational, self.two_reductive)
            && imp(
                self.two_permutational && self.left_distributive && self.right_distributive,
                self.two_reductive,
            )
            && imp(self.two_permutational, self.dis_abelian)
            && (!self.braid || self.two_permutational == matches!(self.mpl, Some(0..=2)))
            && imp(self.irretractable, self.mpl.is_none())
    }
}

pub fn classify(s: &Solution) -> ClassificationReport {
    let braid = s.check_braid();
    ClassificationReport {
        braid,
        involutive: s.is_involutive(),
        square_free: s.is_square_free(),
        lri: s.satisfies_lri(),
        left_distributive: s.is_left_distributive(),
        right_distributive: s.is_right_distributive(),
        two_reductive: is_2_reductive(s),
        two_permutational: is_2_permutational(s),
        irretractable: is_irretractable(s),
        mpl: if braid {
            multipermutation_level(s, None)
        } else {
            None
        },
        dis_abelian: commute_pairwise(&displacement_generators(s)),
    }
}

/// σ_{σ_x(y)} = σ_y, τ_{τ_x(y)} = τ_y, σ_{τ_x(y)} = σ_y and τ_{σ_x(y)} = τ_y.
pub fn is_2_reductive(s: &Solution) -> bool {
    let n = s.n();
    let sim = sim_partition(s);
    let back = backsim_partition(s);
    (0..n).all(|x| {
        (0..n).all(|y| {
            sim.class_of(s.s(x, y)) == sim.class_of(y)
                && back.class_of(s.t(x, y)) == back.class_of(y)
                && sim.class_of(s.t(x, y)) == sim.class_of(y)
                && back.class_of(s.s(x, y)) == back.class_of(y)
        })
    })
}

/// σ_{σ_x(z)}, τ_{τ_x(z)}, σ_{τ_x(z)} and τ_{σ_x(z)} do not depend on x.
pub fn is_2_permutational(s: &Solution) -> bool {
    let n = s.n();
    let sim = sim_partition(s);
    let back = backsim_partition(s);
    (0..n).all(|z| {
        (1..n).all(|x| {
            sim.class_of(s.s(x, z)) == sim.class_of(s.s(0, z))
                && back.class_of(s.t(x, z)) == back.class_of(s.t(0, z))
                && sim.class_of(s.t(x, z)) == sim.class_of(s.t(0, z))
                && back.class_of(s.s(x, z)) == back.class_of(s.s(0, z))
        })
    })
}

fn diagonal(s: &Solution, which: &'static str) -> Result<Permutation> {
    let n = s.n();
    let images: Vec<usize> = match which {
        "U" => (0..n).map(|x| s.s_inv(x, x)).collect(),
        _ => (0..n).map(|x| s.t_inv(x, x)).collect(),
    };
    Permutation::from_images(images).map_err(|_| Error::DiagonalNotBijective(which))
}

/// U(x) = σ_x⁻¹(x).
pub fn diagonal_u(s: &Solution) -> Result<Permutation> {
    let u = diagonal(s, "U")?;
    if is_2_permutational(s) {
        let u_inv = u.inverse();
        for x in 0..s.n() {
            assert_eq!(u_inv.apply(x), s.s(s.t_inv(x, x), x), "U⁻¹ formula");
        }
        assert!(u.commutes(&diagonal(s, "T")?), "U and T must commute");
    }
    Ok(u)
}

/// T(x) = τ_x⁻¹(x).
pub fn diagonal_t(s: &Solution) -> Result<Permutation> {
    let t = diagonal(s, "T")?;
    if is_2_permutational(s) {
        let t_inv = t.inverse();
        for x in 0..s.n() {
            assert_eq!(t_inv.apply(x), s.t(s.s_inv(x, x), x), "T⁻¹ formula");
        }
        assert!(t.commutes(&diagonal(s, "U")?), "U and T must commute");
    }
    Ok(t)
}

/// φσ_x = σ_{φ(x)}φ and φτ_x = τ_{φ(x)}φ for every x.
pub fn is_automorphism(s: &Solution, phi: &Permutation) -> bool {
    is_isomorphism(s, s, phi)
}

/// Checks that `phi` maps `a` isomorphically onto `b`.
pub fn is_isomorphism(a: &Solution, b: &Solution, phi: &Permutation) -> bool {
    let n = a.n();
    if b.n() != n || phi.degree() != n {
        return false;
    }
    (0..n).all(|x| {
        let px = phi.apply(x);
        (0..n).all(|y| {
            let py = phi.apply(y);
            phi.apply(a.s(x, y)) == b.s(px, py) && phi.apply(a.t(x, y)) == b.t(px, py)
        })
    })
}

fn displacement_generators(s: &Solution) -> Vec<PermPair> {
    let sigma = s.sigma_rows();
    let tau = s.tau_rows();
    let sigma_inv: Vec<Permutation> = sigma.iter().map(Permutation::inverse).collect();
    let tau_inv: Vec<Permutation> = tau.iter().map(Permutation::inverse).collect();
    let mut gens = BTreeSet::new();
    for x in 0..s.n() {
        for y in 0..s.n() {
            gens.insert((&sigma[x] * &sigma_inv[y], &tau_inv[x] * &tau[y]));
        }
    }
    gens.into_iter().collect()
}

/// Dis(X) = ⟨(σ_xσ_y⁻¹, τ_x⁻¹τ_y)⟩.
pub fn displacement_group(s: &Solution) -> PermPairGroup {
    PermPairGroup::closure(s.n(), displacement_generators(s)).expect("degrees agree")
}

/// ⟨(σ_xσ_y⁻¹, τ_xτ_y⁻¹)⟩, the variant preserved by isotopy: post-composing
/// every row with a fixed bijection cancels in both components.
pub fn isotopy_displacement_group(s: &Solution) -> PermPairGroup {
    let sigma = s.sigma_rows();
    let tau = s.tau_rows();
    let mut gens = BTreeSet::new();
    for x in 0..s.n() {
        for y in 0..s.n() {
            gens.insert((&sigma[x] * &sigma[y].inverse(), &tau[x] * &tau[y].inverse()));
        }
    }
    PermPairGroup::closure(s.n(), gens.into_iter().collect()).expect("degrees agree")
}

/// 𝒢(X) = ⟨(σ_x, τ_x⁻¹)⟩.
pub fn permutation_group(s: &Solution) -> PermPairGroup {
    let gens: BTreeSet<PermPair> = (0..s.n())
        .map(|x| (s.sigma(x), s.tau(x).inverse()))
        .collect();
    PermPairGroup::closure(s.n(), gens.into_iter().collect()).expect("degrees agree")
}

/// Evaluates `f` on every tuple in `{0..n}^K`.
fn for_all<const K: usize>(n: usize, f: impl Fn([usize; K]) -> bool) -> bool {
    let mut v = [0usize; K];
    if n == 0 {
        return true;
    }
    loop {
        if !f(v) {
            return false;
        }
        let mut i = 0;
        loop {
            if i == K {
                return true;
            }
            v[i] += 1;
            if v[i] < n {
                break;
            }
            v[i] = 0;
            i += 1;
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub holds: bool,
}

/// Exhaustively evaluates the identities that every 2-permutational solution
/// satisfies. Each permutation identity is checked pointwise, with the last
/// tuple coordinate `w` as the point of application.
pub fn check_2perm_identity_suite(s: &Solution) -> Vec<IdentityCheck> {
    let n = s.n();
    let (sg, ta) = (|x, y| s.s(x, y), |x, y| s.t(x, y));
    let (si, ti) = (|x, y| s.s_inv(x, y), |x, y| s.t_inv(x, y));
    let checks: Vec<(&'static str, bool)> = vec![
        ("sigma_of_sigma_image", for_all(n, |[x, y, z, w]| sg(sg(x, z), w) == sg(sg(y, z), w))),
        ("tau_of_tau_image", for_all(n, |[x, y, z, w]| ta(ta(x, z), w) == ta(ta(y, z), w))),
        ("sigma_of_tau_image", for_all(n, |[x, y, z, w]| sg(ta(x, z), w) == sg(ta(y, z), w))),
        ("tau_of_sigma_image", for_all(n, |[x, y, z, w]| ta(sg(x, z), w) == ta(sg(y, z), w))),
        (
            "tau_of_sigma_inverse_image",
            for_all(n, |[x, y, z, w]| ta(si(x, y), w) == ta(si(z, y), w)),
        ),
        (
            "sigma_of_tau_inverse_image",
            for_all(n, |[x, y, z, w]| sg(ti(x, y), w) == sg(ti(z, y), w)),
        ),
        (
            "reduced_mixed_braid",
            for_all(n, |[x, z, a, b, w]| ta(sg(a, z), sg(x, w)) == sg(ta(b, x), ta(z, w))),
        ),
        (
            "sigma_tau_inverse_swap",
            for_all(n, |[x, y, z, w]| sg(ti(x, y), w) == sg(sg(z, y), w)),
        ),
        (
            "tau_sigma_inverse_swap",
            for_all(n, |[x, y, z, w]| ta(si(x, y), w) == ta(ta(z, y), w)),
        ),
        (
            "sigma_absorbs_tau_sigma",
            for_all(n, |[x, y, z, w]| {
                sg(ta(x, sg(z, y)), w) == sg(y, w) && sg(sg(z, ta(x, y)), w) == sg(y, w)
            }),
        ),
        (
            "tau_absorbs_sigma_tau",
            for_all(n, |[x, y, z, w]| {
                ta(sg(x, ta(z, y)), w) == ta(y, w) && ta(ta(z, sg(x, y)), w) == ta(y, w)
            }),
        ),
        (
            "sigma_of_sigma_inverse",
            for_all(n, |[x, y, z, w]| sg(si(y, x), w) == sg(ta(z, x), w)),
        ),
        (
            "tau_of_tau_inverse",
            for_all(n, |[x, y, z, w]| ta(ti(y, x), w) == ta(sg(z, x), w)),
        ),
        (
            "sigma_quotient_shift",
            for_all(n, |[x, y, z, b, w]| si(y, sg(x, w)) == sg(ta(z, x), si(ta(b, y), w))),
        ),
        (
            "tau_quotient_shift",
            for_all(n, |[x, y, z, b, w]| ta(x, ti(y, w)) == ti(si(b, y), ta(si(z, x), w))),
        ),
        (
            "sigma_tau_exchange",
            for_all(n, |[x, z, a, b, w]| sg(x, ta(z, w)) == ta(sg(a, z), sg(sg(b, x), w))),
        ),
        (
            "sigma_inverse_tau_exchange",
            for_all(n, |[x, z, a, b, w]| si(x, ta(z, w)) == ta(si(a, z), si(sg(b, x), w))),
        ),
        (
            "sigma_double_shift",
            for_all(n, |[x, y, a, z, w]| {
                sg(sg(x, y), sg(sg(a, z), w)) == sg(sg(x, sg(a, z)), sg(y, w))
            }),
        ),
        (
            "tau_double_shift",
            for_all(n, |[x, y, a, z, w]| {
                ta(ta(x, y), ta(ta(a, z), w)) == ta(ta(x, ta(a, z)), ta(y, w))
            }),
        ),
        (
            "entropic_sigma",
            for_all(n, |[x, y, z, w]| sg(sg(x, y), sg(z, w)) == sg(sg(x, z), sg(y, w))),
        ),
        (
            "entropic_tau",
            for_all(n, |[x, y, z, w]| ta(ta(x, y), ta(z, w)) == ta(ta(x, z), ta(y, w))),
        ),
        (
            "entropic_mixed",
            for_all(n, |[x, y, z, u]| ta(sg(z, u), sg(x, y)) == sg(ta(z, x), ta(u, y))),
        ),
        (
            "sigma_displacements_commute",
            for_all(n, |[a, y, x, w]| sg(a, si(y, sg(x, w))) == sg(x, si(y, sg(a, w)))),
        ),
        (
            "tau_displacements_commute",
            for_all(n, |[a, y, x, w]| ta(a, ti(y, ta(x, w))) == ta(x, ti(y, ta(a, w)))),
        ),
        (
            "mixed_displacements_commute",
            for_all(n, |[a, y, b, w]| {
                sg(a, si(y, ta(b, ti(y, w)))) == ta(b, ti(y, sg(a, si(y, w))))
            }),
        ),
    ];
    checks
        .into_iter()
        .map(|(name, holds)| IdentityCheck { name, holds })
        .collect()
}

/// The six conditions that are pairwise equivalent on 2-permutational
/// solutions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ReductionConditions {
    /// (i) 2-reductive
    pub two_reductive: bool,
    /// (ii) left and right distributive
    pub distributive: bool,
    /// (iii) every σ_x and τ_x is an automorphism
    pub translations_are_automorphisms: bool,
    /// (iv) {σ_x, τ_x} ∪ {U, T} generates an abelian group
    pub translations_and_diagonals_abelian: bool,
    /// (v) the pairs (σ_x, τ_x⁻¹) and (U⁻¹, T) generate an abelian group
    pub pair_group_abelian: bool,
    /// (vi) Uσ_x = σ_xU and Tτ_x = τ_xT for every x
    pub diagonals_centralize: bool,
}

impl ReductionConditions {
    pub fn conditions(&self) -> [bool; 6] {
        [
            self.two_reductive,
            self.distributive,
            self.translations_are_automorphisms,
            self.translations_and_diagonals_abelian,
            self.pair_group_abelian,
            self.diagonals_centralize,
        ]
    }

    pub fn all_agree(&self) -> bool {
        let c = self.conditions();
        c.iter().all(|&b| b == c[0])
    }
}

pub fn reduction_conditions(s: &Solution) -> ReductionConditions {
    let sigma = s.sigma_rows();
    let tau = s.tau_rows();
    let diagonals = diagonal(s, "U").ok().zip(diagonal(s, "T").ok());

    let translations_are_automorphisms = sigma
        .iter()
        .chain(tau.iter())
        .all(|p| is_automorphism(s, p));

    let (iv, v, vi) = match &diagonals {
        None => (false, false, false),
        Some((u, t)) => {
            let mut gens: Vec<Permutation> = sigma.iter().chain(tau.iter()).cloned().collect();
            gens.push(u.clone());
            gens.push(t.clone());
            let mut pairs: Vec<PermPair> = sigma
                .iter()
                .zip(&tau)
                .map(|(sx, tx)| (sx.clone(), tx.inverse()))
                .collect();
            pairs.push((u.inverse(), t.clone()));
            let vi = sigma.iter().all(|sx| u.commutes(sx)) && tau.iter().all(|tx| t.commutes(tx));
            (commute_pairwise(&gens), commute_pairwise(&pairs), vi)
        }
    };

    ReductionConditions {
        two_reductive: is_2_reductive(s),
        distributive: s.is_distributive(),
        translations_are_automorphisms,
        translations_and_diagonals_abelian: iv,
        pair_group_abelian: v,
        diagonals_centralize: vi,
    }
}
