use std::collections::{BTreeMap, HashMap};

use super::WhStructure;
use crate::error::{Error, Result};
use crate::lang::{Cfg, GSym, LangError, Nfa, Symbol, SymbolTable, Word};

/// Name-based construction of a [`WhStructure`].
///
/// States and nonterminals are declared implicitly on first use, in order.
#[derive(Clone, Debug, Default)]
pub struct StructureBuilder {
    symbols: SymbolTable,
    alphabet: Vec<Symbol>,
    states: Vec<String>,
    state_index: HashMap<String, u32>,
    transitions: Vec<(u32, Symbol, u32)>,
    initial: Vec<u32>,
    accepting: Vec<u32>,
    nonterminals: Vec<String>,
    start: Option<String>,
    productions: Vec<(String, Vec<String>)>,
    assignment: Vec<(Symbol, Vec<String>)>,
}

impl StructureBuilder {
    pub fn new<S: AsRef<str>>(alphabet: &[S]) -> Result<Self> {
        let mut b = StructureBuilder::default();
        for name in alphabet {
            let s = b.symbols.declare(name.as_ref())?;
            b.alphabet.push(s);
        }
        Ok(b)
    }

    pub fn symbols(&self) -> &SymbolTable {
        &self.symbols
    }

    pub fn state(&mut self, name: &str) -> u32 {
        if let Some(&s) = self.state_index.get(name) {
            return s;
        }
        let s = self.states.len() as u32;
        self.states.push(name.to_string());
        self.state_index.insert(name.to_string(), s);
        s
    }

    fn letter(&self, name: &str) -> Result<Symbol> {
        match self.symbols.get(name) {
            Some(s) if !s.is_separator() => Ok(s),
            _ => Err(LangError::UnknownSymbol(name.to_string()).into()),
        }
    }

    pub fn transition(&mut self, from: &str, sym: &str, to: &str) -> Result<&mut Self> {
        let a = self.letter(sym)?;
        let (f, t) = (self.state(from), self.state(to));
        self.transitions.push((f, a, t));
        Ok(self)
    }

    pub fn initial(&mut self, state: &str) -> &mut Self {
        let s = self.state(state);
        self.initial.push(s);
        self
    }

    pub fn accepting(&mut self, state: &str) -> &mut Self {
        let s = self.state(state);
        self.accepting.push(s);
        self
    }

    /// Declares a nonterminal name, fixing its position in the order.
    pub fn nonterminal(&mut self, name: &str) -> &mut Self {
        if !self.nonterminals.iter().any(|n| n == name) {
            self.nonterminals.push(name.to_string());
        }
        self
    }

    pub fn start(&mut self, name: &str) -> &mut Self {
        self.nonterminal(name);
        self.start = Some(name.to_string());
        self
    }

    /// Adds `head → body`. Body entries that are not declared nonterminals
    /// are read as terminals (`#1`, `#2` or alphabet symbols).
    pub fn production<S: AsRef<str>>(&mut self, head: &str, body: &[S]) -> &mut Self {
        self.nonterminal(head);
        self.productions
            .push((head.to_string(), body.iter().map(|s| s.as_ref().to_string()).collect()));
        self
    }

    pub fn assign<S: AsRef<str>>(&mut self, letter: &str, word: &[S]) -> Result<&mut Self> {
        let a = self.letter(letter)?;
        self.assignment
            .push((a, word.iter().map(|s| s.as_ref().to_string()).collect()));
        Ok(self)
    }

    pub fn build(&self) -> Result<WhStructure> {
        let (reps, table, assignment) = self.parts()?;
        WhStructure::from_parts(
            self.symbols.clone(),
            self.alphabet.clone(),
            reps,
            self.states.clone(),
            table,
            self.nonterminals.clone(),
            assignment,
        )
    }

    /// Builds without language-level validation (for fixtures known to be
    /// valid and too large to validate cheaply).
    pub fn build_unchecked(&self) -> Result<WhStructure> {
        let (reps, table, assignment) = self.parts()?;
        Ok(WhStructure::assemble(
            self.symbols.clone(),
            self.alphabet.clone(),
            reps,
            self.states.clone(),
            table,
            self.nonterminals.clone(),
            assignment,
        ))
    }

    fn parts(&self) -> Result<(Nfa, Cfg, BTreeMap<Symbol, Word>)> {
        let mut reps = Nfa::new(self.alphabet.iter().copied());
        for _ in &self.states {
            reps.add_state();
        }
        for &(f, a, t) in &self.transitions {
            reps.add_transition(f, a, t);
        }
        for &s in &self.initial {
            reps.set_initial(s);
        }
        for &s in &self.accepting {
            reps.set_accepting(s);
        }

        let start = self
            .start
            .as_ref()
            .ok_or_else(|| Error::Parse("table has no start symbol".into()))?;
        let nt_index: HashMap<&str, u32> = self
            .nonterminals
            .iter()
            .enumerate()
            .map(|(i, n)| (n.as_str(), i as u32))
            .collect();
        for n in &self.nonterminals {
            if self.symbols.get(n).is_some() {
                return Err(Error::invariant("nonterminal name", format!("`{n}` clashes with a symbol")));
            }
        }
        let mut table = Cfg::new(
            self.nonterminals.len() as u32,
            nt_index[start.as_str()],
            self.alphabet.iter().copied().chain([Symbol::SEP1, Symbol::SEP2]),
        );
        for (head, body) in &self.productions {
            let body: Vec<GSym> = body
                .iter()
                .map(|s| match nt_index.get(s.as_str()) {
                    Some(&n) => Ok(GSym::N(n)),
                    None => self
                        .symbols
                        .get(s)
                        .map(GSym::T)
                        .ok_or_else(|| Error::from(LangError::UnknownSymbol(s.clone()))),
                })
                .collect::<Result<_>>()?;
            table.add_production(nt_index[head.as_str()], body);
        }

        let mut assignment = BTreeMap::new();
        for (a, w) in &self.assignment {
            let w = w.iter().map(|n| self.letter(n)).collect::<Result<Word>>()?;
            if assignment.insert(*a, w).is_some() {
                return Err(Error::Parse(format!(
                    "letter `{}` assigned twice",
                    self.symbols.name(*a)
                )));
            }
        }
        Ok((reps, table, assignment))
    }
}
