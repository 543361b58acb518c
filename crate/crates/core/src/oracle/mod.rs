//! Finite-semigroup ground truth: tables, brute-force deciders and the
//! structures generated from tables.

mod build;
mod corpus;
mod decide;
mod table;

pub use build::{finite_structure, structure_from_table, table_representatives, table_value};
pub use corpus::{small_tables, tables_of_order};
pub use decide::{table_decide, table_green, Property};
pub use table::FiniteSemigroup;
