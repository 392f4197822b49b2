//! Enumeration of level-2 solutions up to isomorphism.

mod catalog;
mod constellation;
mod groups;
mod oracle;
mod pipeline;
mod table;

pub use catalog::{Catalog, CatalogEntry, Provenance, SolutionClass};
pub use constellation::{solution_from_constellation, Constellation};
pub use groups::{abelian_groups, partitions, AbelianGroupSpec};
pub use oracle::{brute_force_catalog, brute_force_solutions, ORACLE_CAP, ORACLE_HARD_CAP};
pub use pipeline::{
    constellations, enumerate_2permutational, enumerate_2permutational_from, enumerate_class,
    enumerate_permutational, enumerate_sf_2reductive, isotope_candidates, isotope_choices,
    isotope_pairs, isotopes_of_base, permutational_pairs, two_reductive_filter, with_jobs,
};
pub use table::{expected_count, table1, TableReport, TableRow, EXPECTED};
