//! Counts per size for every catalog class, compared with published values.

use serde::Serialize;

use crate::error::Result;

use super::catalog::SolutionClass;
use super::pipeline::{enumerate_2permutational_from, enumerate_sf_2reductive, two_reductive_filter};

/// Published counts for sizes 1 to 6.
pub const EXPECTED: [(SolutionClass, [usize; 6]); 6] = [
    (SolutionClass::TwoPerm, [1, 4, 20, 219, 3113, 88604]),
    (SolutionClass::TwoRed, [1, 4, 20, 207, 3061, 88304]),
    (SolutionClass::Sf2r, [1, 1, 4, 20, 183, 2513]),
    (SolutionClass::TwoPermInv, [1, 2, 5, 19, 70, 359]),
    (SolutionClass::TwoRedInv, [1, 2, 5, 17, 65, 323]),
    (SolutionClass::Sf2rInv, [1, 1, 2, 5, 15, 55]),
];

pub fn expected_count(class: SolutionClass, n: usize) -> Option<usize> {
    EXPECTED
        .iter()
        .find(|(c, _)| *c == class)
        .and_then(|(_, row)| row.get(n.checked_sub(1)?).copied())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub class: SolutionClass,
    /// `counts[k]` is the count for size `k + 1`.
    pub counts: Vec<usize>,
    pub expected: Vec<Option<usize>>,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableReport {
    pub max_n: usize,
    pub rows: Vec<TableRow>,
    pub pass: bool,
}

impl TableReport {
    pub fn row(&self, class: SolutionClass) -> Option<&TableRow> {
        self.rows.iter().find(|r| r.class == class)
    }
}

/// Per-size counts for the six classes above; cells beyond the published
/// range are reported without a verdict.
pub fn table1(max_n: usize) -> Result<TableReport> {
    let mut counts: Vec<(SolutionClass, Vec<usize>)> =
        EXPECTED.iter().map(|(c, _)| (*c, Vec::new())).collect();
    let mut push = |class: SolutionClass, v: usize| {
        counts.iter_mut().find(|(c, _)| *c == class).expect("known class").1.push(v);
    };
    for n in 1..=max_n {
        for inv in [false, true] {
            let bases = enumerate_sf_2reductive(n, inv)?;
            let perm = enumerate_2permutational_from(&bases, inv)?;
            let red = two_reductive_filter(&perm);
            push(bases.class, bases.len());
            push(perm.class, perm.len());
            push(red.class, red.len());
        }
    }
    let rows: Vec<TableRow> = counts
        .into_iter()
        .map(|(class, counts)| {
            let expected: Vec<Option<usize>> = (1..=max_n).map(|n| expected_count(class, n)).collect();
            let pass = counts
                .iter()
                .zip(&expected)
                .all(|(c, e)| e.is_none_or(|e| e == *c));
            TableRow {
                class,
                counts,
                expected,
                pass,
            }
        })
        .collect();
    Ok(TableReport {
        max_n,
        pass: rows.iter().all(|r| r.pass),
        rows,
    })
}
