//! Square-free 2-reductive solutions built from a partition, abelian groups
//! and matrices of translation constants.

use crate::classify::is_2_reductive;
use crate::error::{Error, Result};
use crate::solution::Solution;

use super::groups::AbelianGroupSpec;

/// `c[i][j]` and `d[i][j]` are element indices of `groups[j]`; the diagonal
/// entries are zero. In involutive mode `d` is ignored (and may be empty):
/// it is taken to be `-c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constellation {
    pub groups: Vec<AbelianGroupSpec>,
    pub c: Vec<Vec<usize>>,
    pub d: Vec<Vec<usize>>,
}

impl Constellation {
    pub fn blocks(&self) -> usize {
        self.groups.len()
    }

    pub fn size(&self) -> usize {
        self.groups.iter().map(|g| g.order()).sum()
    }

    fn offsets(&self) -> Vec<usize> {
        let mut off = Vec::with_capacity(self.groups.len());
        let mut acc = 0;
        for g in &self.groups {
            off.push(acc);
            acc += g.order();
        }
        off
    }

    /// The effective `d` matrix.
    pub fn d_matrix(&self, involutive_mode: bool) -> Vec<Vec<usize>> {
        if involutive_mode {
            self.c
                .iter()
                .map(|row| {
                    row.iter()
                        .zip(&self.groups)
                        .map(|(&v, g)| g.neg(v))
                        .collect()
                })
                .collect()
        } else {
            self.d.clone()
        }
    }

    fn validate(&self, involutive_mode: bool) -> Result<Vec<Vec<usize>>> {
        let k = self.blocks();
        let d = self.d_matrix(involutive_mode);
        let square = |m: &Vec<Vec<usize>>| m.len() == k && m.iter().all(|r| r.len() == k);
        if !square(&self.c) || !square(&d) {
            return Err(Error::InvalidConstellation(format!(
                "constant matrices must be {k}x{k}"
            )));
        }
        for i in 0..k {
            for j in 0..k {
                let m = self.groups[j].order();
                if self.c[i][j] >= m || d[i][j] >= m {
                    return Err(Error::InvalidConstellation(format!(
                        "constant at ({i},{j}) is not an element of block {j}"
                    )));
                }
            }
            if self.c[i][i] != 0 || d[i][i] != 0 {
                return Err(Error::InvalidConstellation(format!(
                    "diagonal constant at block {i} is not zero"
                )));
            }
        }
        Ok(d)
    }

    /// Whether every block is generated by the constants landing in it.
    pub fn generation_holds(&self, involutive_mode: bool) -> bool {
        let d = self.d_matrix(involutive_mode);
        (0..self.blocks()).all(|j| {
            let gens: Vec<usize> = (0..self.blocks())
                .flat_map(|i| [self.c[i][j], d[i][j]])
                .collect();
            self.groups[j].generated_by(&gens)
        })
    }
}

/// σ_x(y) = y + c[i][j] and τ_y(x) = x + d[j][i] for x in block i and y in
/// block j, on the disjoint union of the blocks in order.
pub fn solution_from_constellation(c: &Constellation, involutive_mode: bool) -> Result<Solution> {
    let d = c.validate(involutive_mode)?;
    for j in 0..c.blocks() {
        let gens: Vec<usize> = (0..c.blocks()).flat_map(|i| [c.c[i][j], d[i][j]]).collect();
        if !c.groups[j].generated_by(&gens) {
            return Err(Error::GenerationFails { block: j });
        }
    }
    let n = c.size();
    let off = c.offsets();
    let tables: Vec<Vec<usize>> = c.groups.iter().map(|g| g.addition_table()).collect();
    let mut block_of = Vec::with_capacity(n);
    for (i, g) in c.groups.iter().enumerate() {
        block_of.extend(std::iter::repeat_n(i, g.order()));
    }
    let mut sigma = vec![0u8; n * n];
    let mut tau = vec![0u8; n * n];
    for x in 0..n {
        let i = block_of[x];
        let a = x - off[i];
        for y in 0..n {
            let j = block_of[y];
            let b = y - off[j];
            let mj = c.groups[j].order();
            let mi = c.groups[i].order();
            sigma[x * n + y] = (off[j] + tables[j][b * mj + c.c[i][j]]) as u8;
            tau[y * n + x] = (off[i] + tables[i][a * mi + d[j][i]]) as u8;
        }
    }
    let s = Solution::from_flat(n, sigma, tau)?;
    assert!(s.check_braid(), "constellation produced a non-solution");
    assert!(s.is_square_free());
    assert!(is_2_reductive(&s));
    if involutive_mode {
        assert!(s.is_involutive());
    }
    Ok(s)
}
