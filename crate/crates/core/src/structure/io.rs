use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use serde::Deserialize;

use super::{StructureBuilder, WhStructure};
use crate::error::{Error, Result};
use crate::lang::{Cfg, GSym, LangError, Symbol, SymbolTable};

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FileStructure {
    alphabet: Vec<String>,
    reps: FileReps,
    table: FileTable,
    #[serde(default)]
    assignment: Option<BTreeMap<String, Vec<String>>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FileReps {
    states: Vec<String>,
    initial: Vec<String>,
    accepting: Vec<String>,
    transitions: Vec<(String, String, String)>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FileTable {
    nonterminals: Vec<String>,
    start: String,
    productions: Vec<(String, Vec<String>)>,
}

pub fn load_structure(path: impl AsRef<Path>) -> Result<WhStructure> {
    let text = std::fs::read_to_string(path)?;
    parse_structure(&text)
}

pub fn parse_structure(text: &str) -> Result<WhStructure> {
    let f: FileStructure = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let mut b = StructureBuilder::new(&f.alphabet)?;
    let declared = |names: &[String], what: &str, list: &[String]| -> Result<()> {
        for n in list {
            if !names.contains(n) {
                return Err(Error::Parse(format!("undeclared {what} `{n}`")));
            }
        }
        Ok(())
    };
    let mut seen = std::collections::HashSet::new();
    for s in &f.reps.states {
        if !seen.insert(s) {
            return Err(Error::Parse(format!("duplicate state `{s}`")));
        }
        b.state(s);
    }
    declared(&f.reps.states, "state", &f.reps.initial)?;
    declared(&f.reps.states, "state", &f.reps.accepting)?;
    for s in &f.reps.initial {
        b.initial(s);
    }
    for s in &f.reps.accepting {
        b.accepting(s);
    }
    for (from, sym, to) in &f.reps.transitions {
        declared(&f.reps.states, "state", &[from.clone(), to.clone()])?;
        if b.symbols().get(sym).is_some_and(|s| s.is_separator()) {
            return Err(Error::invariant("reserved symbol", format!("`{sym}` used in reps")));
        }
        b.transition(from, sym, to)?;
    }
    let mut seen = std::collections::HashSet::new();
    for n in &f.table.nonterminals {
        if !seen.insert(n) {
            return Err(Error::Parse(format!("duplicate nonterminal `{n}`")));
        }
        b.nonterminal(n);
    }
    declared(&f.table.nonterminals, "nonterminal", std::slice::from_ref(&f.table.start))?;
    b.start(&f.table.start);
    for (head, body) in &f.table.productions {
        declared(&f.table.nonterminals, "nonterminal", std::slice::from_ref(head))?;
        b.production(head, body);
    }
    if let Some(assignment) = &f.assignment {
        for (letter, word) in assignment {
            b.assign(letter, word)?;
        }
    }
    b.build()
}

fn q(s: &str) -> String {
    serde_json::to_string(s).expect("string encodes")
}

fn list<S: AsRef<str>>(items: impl IntoIterator<Item = S>) -> String {
    let parts: Vec<String> = items.into_iter().map(|s| q(s.as_ref())).collect();
    format!("[{}]", parts.join(", "))
}

/// Canonical file text: keys in fixed order, one element per line, arrays
/// sorted by declaration order.
pub fn structure_to_json(s: &WhStructure) -> String {
    let sym = |a: Symbol| s.symbols().name(a).to_string();
    let mut out = String::new();
    out.push_str("{\n");
    let _ = writeln!(out, "  \"alphabet\": {},", list(s.alphabet().iter().map(|&a| sym(a))));

    out.push_str("  \"reps\": {\n");
    let _ = writeln!(out, "    \"states\": {},", list(s.state_names()));
    let names = |ids: &mut dyn Iterator<Item = u32>| -> String {
        list(ids.map(|i| s.state_names()[i as usize].clone()))
    };
    let _ = writeln!(out, "    \"initial\": {},", names(&mut s.reps().initial().iter().copied()));
    let _ = writeln!(out, "    \"accepting\": {},", names(&mut s.reps().accepting().iter().copied()));
    let transitions = s.reps().transitions();
    if transitions.is_empty() {
        out.push_str("    \"transitions\": []\n");
    } else {
        out.push_str("    \"transitions\": [\n");
        for (i, (f, a, t)) in transitions.iter().enumerate() {
            let sep = if i + 1 == transitions.len() { "" } else { "," };
            let _ = writeln!(
                out,
                "      {}{sep}",
                list([&s.state_names()[*f as usize], &sym(*a), &s.state_names()[*t as usize]])
            );
        }
        out.push_str("    ]\n");
    }
    out.push_str("  },\n");

    out.push_str("  \"table\": {\n");
    let nts = s.nt_names();
    let _ = writeln!(out, "    \"nonterminals\": {},", list(nts));
    let _ = writeln!(out, "    \"start\": {},", q(&nts[s.table().start() as usize]));
    let prods = s.table().productions();
    if prods.is_empty() {
        out.push_str("    \"productions\": []\n");
    } else {
        out.push_str("    \"productions\": [\n");
        for (i, p) in prods.iter().enumerate() {
            let body = list(p.body.iter().map(|x| match *x {
                GSym::T(a) => sym(a),
                GSym::N(n) => nts[n as usize].clone(),
            }));
            let sep = if i + 1 == prods.len() { "" } else { "," };
            let _ = writeln!(out, "      [{}, {body}]{sep}", q(&nts[p.head as usize]));
        }
        out.push_str("    ]\n");
    }
    out.push_str("  },\n");

    out.push_str("  \"assignment\": {\n");
    for (i, &a) in s.alphabet().iter().enumerate() {
        let sep = if i + 1 == s.alphabet().len() { "" } else { "," };
        let w = list(s.assignment(a).iter().map(|&b| sym(b)));
        let _ = writeln!(out, "    {}: {w}{sep}", q(&sym(a)));
    }
    out.push_str("  }\n");
    out.push_str("}\n");
    out
}

pub fn save_structure(s: &WhStructure, path: impl AsRef<Path>) -> Result<()> {
    std::fs::write(path, structure_to_json(s))?;
    Ok(())
}

/// Standalone grammar file, as used by the defect check.
#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GrammarFile {
    pub alphabet: Vec<String>,
    pub nonterminals: Vec<String>,
    pub start: String,
    pub productions: Vec<(String, Vec<String>)>,
}

/// Parses a grammar file. The symbol table declares the alphabet after the
/// two separators; `#2` (and `#1`) may appear in bodies.
pub fn grammar_from_json(text: &str) -> Result<(SymbolTable, Cfg)> {
    let f: GrammarFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let mut symbols = SymbolTable::new();
    let mut alphabet = Vec::new();
    for a in &f.alphabet {
        alphabet.push(symbols.declare(a)?);
    }
    let index: std::collections::HashMap<&str, u32> = f
        .nonterminals
        .iter()
        .enumerate()
        .map(|(i, n)| (n.as_str(), i as u32))
        .collect();
    if index.len() != f.nonterminals.len() {
        return Err(Error::Parse("duplicate nonterminal".into()));
    }
    for n in &f.nonterminals {
        if symbols.get(n).is_some() {
            return Err(Error::invariant("nonterminal name", format!("`{n}` clashes with a symbol")));
        }
    }
    let start = *index
        .get(f.start.as_str())
        .ok_or_else(|| Error::Parse(format!("undeclared start `{}`", f.start)))?;
    let mut g = Cfg::new(
        f.nonterminals.len() as u32,
        start,
        alphabet.iter().copied().chain([Symbol::SEP2]),
    );
    for (head, body) in &f.productions {
        let h = *index
            .get(head.as_str())
            .ok_or_else(|| Error::Parse(format!("undeclared nonterminal `{head}`")))?;
        let body = body
            .iter()
            .map(|s| match index.get(s.as_str()) {
                Some(&n) => Ok(GSym::N(n)),
                None => symbols
                    .get(s)
                    .map(GSym::T)
                    .ok_or_else(|| Error::from(LangError::UnknownSymbol(s.clone()))),
            })
            .collect::<Result<Vec<_>>>()?;
        g.add_production(h, body);
    }
    Ok((symbols, g))
}
