use std::collections::{BTreeSet, HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite semigroup given by its multiplication table, with a chosen
/// generating set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteSemigroup {
    names: Vec<String>,
    table: Vec<Vec<usize>>,
    generators: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TableFile {
    elements: Vec<String>,
    table: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    generators: Option<Vec<String>>,
}

impl FiniteSemigroup {
    /// Validates associativity and generation. `generators = None` picks
    /// the lexicographically first generating set of minimum size.
    pub fn new(names: Vec<String>, table: Vec<Vec<usize>>, generators: Option<Vec<usize>>) -> Result<Self> {
        let n = names.len();
        if n == 0 {
            return Err(Error::Table("no elements".into()));
        }
        let distinct: HashSet<&String> = names.iter().collect();
        if distinct.len() != n || names.iter().any(|x| x.is_empty()) {
            return Err(Error::Table("element names must be distinct and nonempty".into()));
        }
        if table.len() != n || table.iter().any(|row| row.len() != n || row.iter().any(|&x| x >= n)) {
            return Err(Error::Table("table must be square over the elements".into()));
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if table[table[x][y]][z] != table[x][table[y][z]] {
                        return Err(Error::Table(format!(
                            "not associative at ({}, {}, {})",
                            names[x], names[y], names[z]
                        )));
                    }
                }
            }
        }
        let mut t = FiniteSemigroup { names, table, generators: Vec::new() };
        match generators {
            Some(g) => {
                let set: BTreeSet<usize> = g.iter().copied().collect();
                if set.len() != g.len() || g.iter().any(|&x| x >= n) {
                    return Err(Error::Table("generators must be distinct elements".into()));
                }
                if t.closure(&g).len() != n {
                    return Err(Error::Table("generators do not generate the semigroup".into()));
                }
                t.generators = g;
            }
            None => t.generators = t.minimal_generators(),
        }
        Ok(t)
    }

    /// Name-based constructor; panics are avoided, errors are returned.
    pub fn from_names(elements: &[&str], table: &[&[&str]], generators: Option<&[&str]>) -> Result<Self> {
        let names: Vec<String> = elements.iter().map(|s| s.to_string()).collect();
        let idx = |s: &str| -> Result<usize> {
            names
                .iter()
                .position(|n| n == s)
                .ok_or_else(|| Error::Table(format!("unknown element `{s}`")))
        };
        let rows = table
            .iter()
            .map(|row| row.iter().map(|s| idx(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let gens = generators
            .map(|g| g.iter().map(|s| idx(s)).collect::<Result<Vec<_>>>())
            .transpose()?;
        FiniteSemigroup::new(names, rows, gens)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let f: TableFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let elements: Vec<&str> = f.elements.iter().map(String::as_str).collect();
        let rows: Vec<Vec<&str>> = f.table.iter().map(|r| r.iter().map(String::as_str).collect()).collect();
        let rows: Vec<&[&str]> = rows.iter().map(Vec::as_slice).collect();
        let gens: Option<Vec<&str>> = f.generators.as_ref().map(|g| g.iter().map(String::as_str).collect());
        FiniteSemigroup::from_names(&elements, &rows, gens.as_deref())
    }

    pub fn to_json(&self) -> String {
        let f = TableFile {
            elements: self.names.clone(),
            table: self
                .table
                .iter()
                .map(|r| r.iter().map(|&x| self.names[x].clone()).collect())
                .collect(),
            generators: Some(self.generators.iter().map(|&x| self.names[x].clone()).collect()),
        };
        serde_json::to_string_pretty(&f).expect("table encodes")
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, x: usize) -> &str {
        &self.names[x]
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.table[x][y]
    }

    /// Value of a nonempty product of elements.
    pub fn eval(&self, xs: &[usize]) -> usize {
        let (&first, rest) = xs.split_first().expect("nonempty product");
        rest.iter().fold(first, |acc, &y| self.mul(acc, y))
    }

    /// The subsemigroup generated by `gens`.
    pub fn closure(&self, gens: &[usize]) -> BTreeSet<usize> {
        let mut seen: BTreeSet<usize> = gens.iter().copied().collect();
        let mut queue: VecDeque<usize> = gens.iter().copied().collect();
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if seen.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        seen
    }

    /// Lexicographically first generating set of minimum size.
    pub fn minimal_generators(&self) -> Vec<usize> {
        let n = self.order();
        for k in 1..=n {
            let mut combo: Vec<usize> = (0..k).collect();
            loop {
                if self.closure(&combo).len() == n {
                    return combo;
                }
                // next k-combination in lex order
                let mut i = k;
                while i > 0 && combo[i - 1] == n - k + i - 1 {
                    i -= 1;
                }
                if i == 0 {
                    break;
                }
                combo[i - 1] += 1;
                for j in i..k {
                    combo[j] = combo[j - 1] + 1;
                }
            }
        }
        (0..n).collect()
    }

    pub fn is_idempotent(&self, x: usize) -> bool {
        self.mul(x, x) == x
    }

    pub fn identity(&self) -> Option<usize> {
        (0..self.order()).find(|&e| (0..self.order()).all(|x| self.mul(e, x) == x && self.mul(x, e) == x))
    }

    /// Elements of `S^1 x S^1`.
    pub fn ideal_of(&self, x: usize) -> BTreeSet<usize> {
        let n = self.order();
        let mut out = BTreeSet::from([x]);
        for s in 0..n {
            out.insert(self.mul(s, x));
            out.insert(self.mul(x, s));
            for t in 0..n {
                out.insert(self.mul(self.mul(s, x), t));
            }
        }
        out
    }

    /// `x S^1` (right ideal) and `S^1 x` (left ideal).
    pub fn right_ideal(&self, x: usize) -> BTreeSet<usize> {
        let mut out: BTreeSet<usize> = (0..self.order()).map(|s| self.mul(x, s)).collect();
        out.insert(x);
        out
    }

    pub fn left_ideal(&self, x: usize) -> BTreeSet<usize> {
        let mut out: BTreeSet<usize> = (0..self.order()).map(|s| self.mul(s, x)).collect();
        out.insert(x);
        out
    }

    /// Same table with elements renamed; order and generators unchanged.
    pub fn renamed(&self, names: Vec<String>) -> Result<Self> {
        FiniteSemigroup::new(names, self.table.clone(), Some(self.generators.clone()))
    }
}
