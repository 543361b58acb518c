//! Formal-language kernel: finite automata, context-free grammars, finite
//! transducers and reduced words in free groups.
//!
//! Every decision procedure in this crate is ultimately compiled down to the
//! operations here. Values are immutable once built; all operations return
//! fresh values.

mod cfg;
mod freegroup;
mod nfa;
mod product;
mod symbol;
mod transducer;

pub use cfg::{Cfg, GSym, NtId, Production};
pub use freegroup::{FreeGroupWord, Sign};
pub use nfa::{Nfa, StateId};
pub use symbol::{reversed, Symbol, SymbolTable, Word};
pub use transducer::{Transducer, TransducerEdge};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LangError {
    #[error("reserved symbol `{0}` cannot be declared")]
    ReservedSymbol(String),
    #[error("symbol `{0}` declared twice")]
    DuplicateSymbol(String),
    #[error("invalid symbol name `{0}`")]
    BadSymbolName(String),
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
    #[error("grammar language is empty")]
    EmptyLanguage,
    #[error("grammar language contains the empty word")]
    EpsilonInLanguage,
    #[error("language is not contained in A*#2A*: {0}")]
    NotSeparated(String),
}
