//! Small named solutions used throughout the tests, benches and docs.
//! Letters `a, b, c, d` map to points `0, 1, 2, 3`.

use crate::perm::Permutation;
use crate::solution::Solution;

fn rows(n: usize, cycles: &[&str]) -> Vec<Permutation> {
    cycles
        .iter()
        .map(|c| Permutation::from_cycles(n, c).expect("valid sample cycles"))
        .collect()
}

/// Irretractable, non-involutive solution on five points:
/// σ_0 = τ_1 = τ_4 = id, σ_1 = σ_3 = (0,2,3), τ_0 = τ_2 = τ_3 = (1,4)(2,3),
/// σ_2 = σ_4 = (0,3,2).
pub fn irretractable_five() -> Solution {
    let sigma = rows(5, &["id", "(0,2,3)", "(0,3,2)", "(0,2,3)", "(0,3,2)"]);
    let tau = rows(5, &["(1,4)(2,3)", "id", "(1,4)(2,3)", "(1,4)(2,3)", "id"]);
    Solution::from_rows(&sigma, &tau).expect("valid sample")
}

/// Involutive square-free 2-reductive solution on `{a,b,c,d}` with
/// L_a = L_b = R_a = R_b = (c,d) and L_c = L_d = R_c = R_d = (a,b).
pub fn two_block_base() -> Solution {
    let l = rows(4, &["(2,3)", "(2,3)", "(0,1)", "(0,1)"]);
    Solution::from_rows(&l, &l).expect("valid sample")
}

/// A solution of multipermutation level 3 on `{a,b,c,d}`:
/// σ_a = τ_a = (a,c), σ_c = τ_c = (a,c)(b,d), all other rows trivial.
pub fn level_three() -> Solution {
    let l = rows(4, &["(0,2)", "id", "(0,2)(1,3)", "id"]);
    Solution::from_rows(&l, &l).expect("valid sample")
}
