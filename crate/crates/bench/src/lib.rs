//! Fixtures shared by the benchmarks.

use mpl2_core::enumerate::{enumerate_sf_2reductive, Catalog};
use mpl2_core::Solution;

/// Square-free bases of size `n`, trivial one excluded.
pub fn nontrivial_bases(n: usize) -> Vec<Solution> {
    let catalog: Catalog = enumerate_sf_2reductive(n, false).expect("n >= 1");
    catalog
        .solutions()
        .filter(|s| **s != Solution::trivial(n))
        .cloned()
        .collect()
}
