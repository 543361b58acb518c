//! Word-hyperbolic structures for semigroups and the decision procedures
//! that run on them.
//!
//! A structure pairs a regular language of representatives `L` with a
//! context-free multiplication table `M` whose members `u#1v#2w^rev` record
//! that `u · v = w`. Everything here reduces to operations on automata and
//! grammars in [`lang`].

pub mod arithmetic;
pub mod decide;
mod error;
pub mod fixtures;
pub mod lang;
pub mod oracle;
pub mod structure;

pub use arithmetic::{check_multiply, multiply, represent, word_eq};
pub use error::{Error, Result};
pub use lang::{Cfg, FreeGroupWord, Nfa, Symbol, SymbolTable, Transducer, Word};
pub use oracle::FiniteSemigroup;
pub use structure::{Verdict, WhStructure, Witness};
