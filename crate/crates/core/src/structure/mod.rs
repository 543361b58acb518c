//! Word-hyperbolic structures: the data model, its file format, validation
//! and the generator normalizations.

mod builder;
mod io;
mod merge;
mod normalize;
mod validate;
mod verdict;

use std::collections::{BTreeMap, HashMap, HashSet};
use std::sync::{Mutex, OnceLock};

pub use builder::StructureBuilder;
pub use io::{grammar_from_json, load_structure, parse_structure, save_structure, structure_to_json, GrammarFile};
pub use merge::{letters_agree, merge_letters};
pub use normalize::{normalize_generators, normalized};
pub use validate::validate_necessary;
pub use verdict::{Verdict, Witness};

use crate::error::{Error, Result};
use crate::lang::{Cfg, Nfa, Symbol, SymbolTable, Word};

/// An interpreted word-hyperbolic structure: alphabet, regular language of
/// representatives, context-free multiplication table and the assignment of
/// generators.
#[derive(Debug)]
pub struct WhStructure {
    symbols: SymbolTable,
    alphabet: Vec<Symbol>,
    reps: Nfa,
    state_names: Vec<String>,
    table: Cfg,
    nt_names: Vec<String>,
    assignment: BTreeMap<Symbol, Word>,
    reversed_table: OnceLock<Cfg>,
    pub(crate) cache: Mutex<ArithCache>,
}

/// Memoized products and product checks for short operands.
#[derive(Debug, Default)]
pub(crate) struct ArithCache {
    pub products: HashMap<(Word, Word), Word>,
    pub checks: HashMap<(Word, Word, Word), bool>,
}

impl Clone for WhStructure {
    fn clone(&self) -> Self {
        WhStructure {
            symbols: self.symbols.clone(),
            alphabet: self.alphabet.clone(),
            reps: self.reps.clone(),
            state_names: self.state_names.clone(),
            table: self.table.clone(),
            nt_names: self.nt_names.clone(),
            assignment: self.assignment.clone(),
            reversed_table: self.reversed_table.clone(),
            cache: Mutex::default(),
        }
    }
}

impl PartialEq for WhStructure {
    fn eq(&self, other: &Self) -> bool {
        self.symbols == other.symbols
            && self.alphabet == other.alphabet
            && self.reps == other.reps
            && self.state_names == other.state_names
            && self.table == other.table
            && self.nt_names == other.nt_names
            && self.assignment == other.assignment
    }
}

impl WhStructure {
    /// Assembles and validates a structure. `assignment` entries default to
    /// the embedding `a ↦ a`.
    pub fn from_parts(
        symbols: SymbolTable,
        alphabet: Vec<Symbol>,
        reps: Nfa,
        state_names: Vec<String>,
        table: Cfg,
        nt_names: Vec<String>,
        assignment: BTreeMap<Symbol, Word>,
    ) -> Result<Self> {
        let s = Self::assemble(symbols, alphabet, reps, state_names, table, nt_names, assignment);
        s.check_invariants()?;
        Ok(s)
    }

    /// Assembles without checking language-level invariants. Used for
    /// structures derived by constructions that preserve them.
    pub(crate) fn assemble(
        symbols: SymbolTable,
        alphabet: Vec<Symbol>,
        reps: Nfa,
        state_names: Vec<String>,
        table: Cfg,
        nt_names: Vec<String>,
        mut assignment: BTreeMap<Symbol, Word>,
    ) -> Self {
        for &a in &alphabet {
            assignment.entry(a).or_insert_with(|| vec![a]);
        }
        assignment.retain(|a, _| alphabet.contains(a));
        let reps = reps.with_alphabet(alphabet.iter().copied());
        let table = canonical_table(&table).with_terminals(
            alphabet.iter().copied().chain([Symbol::SEP1, Symbol::SEP2]),
        );
        WhStructure {
            symbols,
            alphabet,
            reps,
            state_names,
            table,
            nt_names,
            assignment,
            reversed_table: OnceLock::new(),
            cache: Mutex::default(),
        }
    }

    fn check_invariants(&self) -> Result<()> {
        let mut seen = HashSet::new();
        for &a in &self.alphabet {
            if a.is_separator() {
                return Err(Error::invariant("reserved symbol", "separators cannot be alphabet symbols"));
            }
            if !seen.insert(a) {
                return Err(Error::invariant("duplicate symbol", self.symbols.name(a).to_string()));
            }
        }
        for (_, a, _) in self.reps.transitions() {
            if !seen.contains(&a) {
                return Err(Error::invariant(
                    "reps alphabet",
                    format!("transition label `{}` is not an alphabet symbol", self.symbols.name(a)),
                ));
            }
        }
        for t in self.table.terminals() {
            if !t.is_separator() && !seen.contains(t) {
                return Err(Error::invariant(
                    "table alphabet",
                    format!("terminal `{}` is not an alphabet symbol", self.symbols.name(*t)),
                ));
            }
        }
        check_names("state", &self.state_names, self.reps.num_states())?;
        check_names("nonterminal", &self.nt_names, self.table.num_nts() as usize)?;
        for n in &self.nt_names {
            if self.symbols.get(n).is_some() {
                return Err(Error::invariant("nonterminal name", format!("`{n}` clashes with a symbol")));
            }
        }
        if self.reps.accepts(&[]) {
            return Err(Error::invariant("empty representative", "reps accepts the empty word"));
        }
        for (&a, w) in &self.assignment {
            if !self.reps.accepts(w) {
                return Err(Error::invariant(
                    "assignment word not in L",
                    format!("{} -> {}", self.symbols.name(a), self.display(w)),
                ));
            }
        }
        if let Some(w) = self.table_outside_reps() {
            return Err(Error::invariant(
                "table not inside L#1L#2L^rev",
                format!("offending word {}", self.display(&w)),
            ));
        }
        Ok(())
    }

    /// Shortest member of the table that is not of the form
    /// `u#1v#2w^rev` with `u, v, w ∈ L`.
    pub fn table_outside_reps(&self) -> Option<Word> {
        let bound = self.shell();
        let full: Vec<Symbol> = self.alphabet.iter().copied().chain([Symbol::SEP1, Symbol::SEP2]).collect();
        let outside = bound.complement_over(full);
        self.table.intersect_nfa(&outside).shortest_word()
    }

    /// The regular language `L #1 L #2 L^rev`.
    pub fn shell(&self) -> Nfa {
        Nfa::concat_all(&[
            &self.reps,
            &Nfa::word(&[Symbol::SEP1]),
            &self.reps,
            &Nfa::word(&[Symbol::SEP2]),
            &self.reps.reverse(),
        ])
    }

    // ---- accessors -------------------------------------------------------

    pub fn symbols(&self) -> &SymbolTable {
        &self.symbols
    }

    /// Alphabet symbols in declaration order.
    pub fn alphabet(&self) -> &[Symbol] {
        &self.alphabet
    }

    pub fn reps(&self) -> &Nfa {
        &self.reps
    }

    pub fn state_names(&self) -> &[String] {
        &self.state_names
    }

    pub fn table(&self) -> &Cfg {
        &self.table
    }

    /// The table with every production reversed (cached).
    pub fn reversed_table(&self) -> &Cfg {
        self.reversed_table.get_or_init(|| self.table.reverse())
    }

    pub fn nt_names(&self) -> &[String] {
        &self.nt_names
    }

    pub fn assignment(&self, a: Symbol) -> &Word {
        &self.assignment[&a]
    }

    pub fn assignments(&self) -> &BTreeMap<Symbol, Word> {
        &self.assignment
    }

    pub fn in_reps(&self, w: &[Symbol]) -> bool {
        self.reps.accepts(w)
    }

    /// Whether every letter is its own representative.
    pub fn is_normalized(&self) -> bool {
        self.alphabet
            .iter()
            .all(|&a| self.assignment[&a] == [a] && self.reps.accepts(&[a]))
    }

    pub fn symbol(&self, name: &str) -> Result<Symbol> {
        match self.symbols.get(name) {
            Some(s) if self.alphabet.contains(&s) => Ok(s),
            _ => Err(Error::Lang(crate::lang::LangError::UnknownSymbol(name.to_string()))),
        }
    }

    /// Parses a word over the alphabet (separators rejected).
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        let w = self.symbols.parse_word(text)?;
        if let Some(&bad) = w.iter().find(|a| !self.alphabet.contains(a)) {
            return Err(Error::Lang(crate::lang::LangError::UnknownSymbol(
                self.symbols.name(bad).to_string(),
            )));
        }
        Ok(w)
    }

    pub fn display(&self, w: &[Symbol]) -> String {
        self.symbols.display(w)
    }

    pub fn render(&self, w: &[Symbol]) -> Vec<String> {
        self.symbols.render(w)
    }

    /// Drops memoized arithmetic results.
    pub fn clear_cache(&self) {
        *self.cache.lock().expect("cache lock") = ArithCache::default();
    }
}

fn check_names(kind: &'static str, names: &[String], expected: usize) -> Result<()> {
    if names.len() != expected {
        return Err(Error::invariant("name table", format!("{kind} names do not match count")));
    }
    let mut seen = HashSet::new();
    for n in names {
        if n.is_empty() {
            return Err(Error::invariant("name table", format!("empty {kind} name")));
        }
        if !seen.insert(n) {
            return Err(Error::invariant("name table", format!("duplicate {kind} name `{n}`")));
        }
    }
    Ok(())
}

/// Same grammar with productions sorted and deduplicated.
fn canonical_table(g: &Cfg) -> Cfg {
    let mut prods = g.productions().to_vec();
    prods.sort();
    prods.dedup();
    let mut out = Cfg::new(g.num_nts(), g.start(), g.terminals().iter().copied());
    for p in prods {
        out.add_production(p.head, p.body);
    }
    out
}

/// Picks names `prefix0, prefix1, …` that avoid every name in `taken`.
pub(crate) fn fresh_names(prefix: &str, count: usize, taken: &dyn Fn(&str) -> bool) -> Vec<String> {
    let mut p = prefix.to_string();
    while (0..count).any(|i| taken(&format!("{p}{i}"))) {
        p.push('_');
    }
    (0..count).map(|i| format!("{p}{i}")).collect()
}
