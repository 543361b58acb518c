use std::collections::HashMap;
use std::fmt;

use super::LangError;

/// An interned alphabet symbol.
///
/// Symbols compare by id. Ids are handed out in declaration order, so the
/// derived `Ord` is the total order used for every lexicographic tie-break.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Symbol(pub u32);

impl Symbol {
    /// The separator between the left and right factor of a product (`#1`).
    pub const SEP1: Symbol = Symbol(0);
    /// The separator before the reversed product (`#2`).
    pub const SEP2: Symbol = Symbol(1);

    pub fn is_separator(self) -> bool {
        self == Self::SEP1 || self == Self::SEP2
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Debug for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Symbol::SEP1 => write!(f, "#1"),
            Symbol::SEP2 => write!(f, "#2"),
            Symbol(n) => write!(f, "s{n}"),
        }
    }
}

/// A finite sequence of symbols. Possibly empty.
pub type Word = Vec<Symbol>;

pub fn reversed(w: &[Symbol]) -> Word {
    w.iter().rev().copied().collect()
}

/// Bidirectional map between symbol names and ids.
///
/// Every table starts with `#1` and `#2` at ids 0 and 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolTable {
    names: Vec<String>,
    index: HashMap<String, Symbol>,
}

impl Default for SymbolTable {
    fn default() -> Self {
        Self::new()
    }
}

impl SymbolTable {
    pub const SEP1_NAME: &'static str = "#1";
    pub const SEP2_NAME: &'static str = "#2";

    pub fn new() -> Self {
        let mut t = SymbolTable {
            names: Vec::new(),
            index: HashMap::new(),
        };
        t.push(Self::SEP1_NAME);
        t.push(Self::SEP2_NAME);
        t
    }

    fn push(&mut self, name: &str) -> Symbol {
        let s = Symbol(self.names.len() as u32);
        self.names.push(name.to_string());
        self.index.insert(name.to_string(), s);
        s
    }

    /// Declares a new user symbol. Reserved and duplicate names are rejected.
    pub fn declare(&mut self, name: &str) -> Result<Symbol, LangError> {
        if name == Self::SEP1_NAME || name == Self::SEP2_NAME {
            return Err(LangError::ReservedSymbol(name.to_string()));
        }
        if name.is_empty() || name.chars().any(|c| c.is_control()) {
            return Err(LangError::BadSymbolName(name.to_string()));
        }
        if self.index.contains_key(name) {
            return Err(LangError::DuplicateSymbol(name.to_string()));
        }
        Ok(self.push(name))
    }

    pub fn get(&self, name: &str) -> Option<Symbol> {
        self.index.get(name).copied()
    }

    pub fn name(&self, s: Symbol) -> &str {
        &self.names[s.index()]
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn render(&self, w: &[Symbol]) -> Vec<String> {
        w.iter().map(|&s| self.name(s).to_string()).collect()
    }

    /// Renders a word as a single string, inserting spaces only when some
    /// symbol name is longer than one character.
    pub fn display(&self, w: &[Symbol]) -> String {
        let parts = self.render(w);
        if parts.iter().all(|p| p.chars().count() == 1) {
            parts.concat()
        } else {
            parts.join(" ")
        }
    }

    pub fn lookup_all<S: AsRef<str>>(&self, names: &[S]) -> Result<Word, LangError> {
        names
            .iter()
            .map(|n| {
                self.get(n.as_ref())
                    .ok_or_else(|| LangError::UnknownSymbol(n.as_ref().to_string()))
            })
            .collect()
    }

    /// Parses a word written on a command line or in a test.
    ///
    /// Whitespace or commas separate symbols when present. Otherwise the text
    /// is tokenized greedily by longest matching symbol name.
    pub fn parse_word(&self, text: &str) -> Result<Word, LangError> {
        let text = text.trim();
        if text.contains(|c: char| c.is_whitespace() || c == ',') {
            let parts: Vec<&str> = text
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|p| !p.is_empty())
                .collect();
            return self.lookup_all(&parts);
        }
        let mut out = Vec::new();
        let mut rest = text;
        while !rest.is_empty() {
            let best = self
                .names
                .iter()
                .enumerate()
                .filter(|(_, n)| rest.starts_with(n.as_str()))
                .max_by_key(|(_, n)| n.len());
            match best {
                Some((i, n)) => {
                    out.push(Symbol(i as u32));
                    rest = &rest[n.len()..];
                }
                None => return Err(LangError::UnknownSymbol(rest.to_string())),
            }
        }
        Ok(out)
    }
}
