//! Finite set-theoretic solutions of the Yang–Baxter equation of
//! multipermutation level at most two: permutations, solutions, retraction,
//! classification, isotopes, automorphism groups and enumeration.

pub mod autgroup;
pub mod classify;
pub mod enumerate;
pub mod error;
pub mod isotope;
pub mod perm;
pub mod retract;
pub mod samples;
pub mod solution;

pub use autgroup::{are_isomorphic, automorphism_group, canonical_form, canonical_labeling};
pub use classify::{classify, ClassificationReport};
pub use enumerate::{Catalog, CatalogEntry, Provenance, SolutionClass};
pub use error::{Error, Result};
pub use isotope::IsotopePair;
pub use perm::{PermGroup, PermPair, Permutation};
pub use solution::Solution;
