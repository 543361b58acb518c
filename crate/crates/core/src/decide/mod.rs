//! Decision procedures over structures. Each returns a [`Verdict`] whose
//! witnesses are chosen shortest-then-lexicographic.
//!
//! Procedures normalize their input first, so every letter is its own
//! representative.

mod basic;
mod clifford;
mod defect;
mod free;
mod simple;

pub use basic::{green_related, is_commutative, is_group, is_monoid};
pub use clifford::{clifford_species, clifford_species_check, is_clifford, CliffordSpecies};
pub use defect::{palindromic_defect, Defect};
pub use free::is_free;
pub use simple::{cs_species, cs_species_check, is_completely_simple, set_partitions, CsSpecies};

use crate::lang::{Cfg, Nfa, Symbol, Word};
use crate::structure::WhStructure;

/// Green's relations.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum GreenRel {
    R,
    L,
    H,
}

/// Enumeration caps for the species searches and the defect witness.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_species: usize,
    pub max_alphabet_clifford: usize,
    pub defect_witness_length: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_species: 10_000,
            max_alphabet_clifford: 4,
            defect_witness_length: 12,
        }
    }
}

/// Members of the table of the shape `left #1 middle #2 right`.
fn table_slice(s: &WhStructure, left: &Nfa, middle: &Nfa, right: &Nfa) -> Cfg {
    let shape = Nfa::concat_all(&[left, &Nfa::word(&[Symbol::SEP1]), middle, &Nfa::word(&[Symbol::SEP2]), right]);
    s.table().intersect_nfa(&shape)
}

/// Splits a table word `u#1v#2x` into its three parts.
fn split_table_word(w: &[Symbol]) -> (Word, Word, Word) {
    let i = w.iter().position(|&x| x == Symbol::SEP1).expect("table word has #1");
    let j = w.iter().position(|&x| x == Symbol::SEP2).expect("table word has #2");
    (w[..i].to_vec(), w[i + 1..j].to_vec(), w[j + 1..].to_vec())
}

/// Shortest-lex `v` with `left #1 v #2 right` in the table and `v` in
/// `middle`.
fn shortest_middle(s: &WhStructure, left: &[Symbol], middle: &Nfa, right: &[Symbol]) -> Option<Word> {
    table_slice(s, &Nfa::word(left), middle, &Nfa::word(right))
        .shortest_word()
        .map(|w| split_table_word(&w).1)
}

/// Shortest-lex `v` with `v #1 middle_word #2 right` in the table.
fn shortest_left(s: &WhStructure, left: &Nfa, middle: &[Symbol], right: &[Symbol]) -> Option<Word> {
    table_slice(s, left, &Nfa::word(middle), &Nfa::word(right))
        .shortest_word()
        .map(|w| split_table_word(&w).0)
}

fn letter_name(s: &WhStructure, a: Symbol) -> String {
    s.symbols().name(a).to_string()
}
