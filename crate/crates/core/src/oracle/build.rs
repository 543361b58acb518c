use std::collections::{BTreeMap, HashSet};

use super::FiniteSemigroup;
use crate::error::Result;
use crate::lang::{Cfg, GSym, Nfa, Symbol, SymbolTable, Word};
use crate::structure::{fresh_names, WhStructure};

/// A structure whose language of representatives is a finite word list.
///
/// `reps` pairs each representative (as letter indices) with the element
/// it names; the table holds every `u#1v#2w^rev` with `value(u)·value(v) =
/// value(w)`. `assignment` maps letter indices to representative indices;
/// letters left out are assigned themselves.
pub fn finite_structure(
    letters: &[&str],
    reps: &[(Vec<usize>, usize)],
    mul: impl Fn(usize, usize) -> usize,
    assignment: &[(usize, usize)],
) -> Result<WhStructure> {
    let mut symbols = SymbolTable::new();
    let alphabet: Vec<Symbol> = letters
        .iter()
        .map(|name| symbols.declare(name))
        .collect::<std::result::Result<_, _>>()?;
    let words: Vec<Word> = reps
        .iter()
        .map(|(w, _)| w.iter().map(|&i| alphabet[i]).collect())
        .collect();
    let nfa = Nfa::finite(words.iter()).with_alphabet(alphabet.iter().copied());
    let state_names = fresh_names("q", nfa.num_states(), &|_| false);

    let mut table = Cfg::new(1, 0, alphabet.iter().copied().chain([Symbol::SEP1, Symbol::SEP2]));
    for (u, (_, x)) in words.iter().zip(reps) {
        for (v, (_, y)) in words.iter().zip(reps) {
            let xy = mul(*x, *y);
            for (w, _) in words.iter().zip(reps).filter(|(_, (_, z))| *z == xy) {
                let mut body: Vec<GSym> = u.iter().map(|&a| GSym::T(a)).collect();
                body.push(GSym::T(Symbol::SEP1));
                body.extend(v.iter().map(|&a| GSym::T(a)));
                body.push(GSym::T(Symbol::SEP2));
                body.extend(w.iter().rev().map(|&a| GSym::T(a)));
                table.add_production(0, body);
            }
        }
    }
    let nt = fresh_names("O", 1, &|n| symbols.get(n).is_some());
    // A single nonterminal needs no numeric suffix unless "O" is taken.
    let nt_name = if symbols.get("O").is_none() { "O".to_string() } else { nt[0].clone() };

    let assignment: BTreeMap<Symbol, Word> = assignment
        .iter()
        .map(|&(letter, rep)| (alphabet[letter], words[rep].clone()))
        .collect();
    WhStructure::from_parts(symbols, alphabet, nfa, state_names, table, vec![nt_name], assignment)
}

/// Representatives of every element in generator letters: each generator
/// is its own letter, every other element gets its shortest-lex product.
pub fn table_representatives(t: &FiniteSemigroup) -> Vec<Option<Vec<usize>>> {
    let gens = t.generators();
    let mut rep: Vec<Option<Vec<usize>>> = vec![None; t.order()];
    let mut frontier: Vec<Vec<usize>> = Vec::new();
    for (k, &g) in gens.iter().enumerate() {
        rep[g] = Some(vec![k]);
        frontier.push(vec![k]);
    }
    // Breadth-first in shortlex order, only extending minimal words: a
    // minimal word's prefixes are themselves minimal.
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for w in &frontier {
            for (k, &g) in gens.iter().enumerate() {
                let value = t.mul(eval(t, w), g);
                if rep[value].is_none() {
                    let mut w2 = w.clone();
                    w2.push(k);
                    rep[value] = Some(w2.clone());
                    next.push(w2);
                }
            }
        }
        frontier = next;
    }
    rep
}

fn eval(t: &FiniteSemigroup, w: &[usize]) -> usize {
    let xs: Vec<usize> = w.iter().map(|&k| t.generators()[k]).collect();
    t.eval(&xs)
}

/// The structure of a finite semigroup: one letter per generator, one
/// representative per element and one table production per product.
pub fn structure_from_table(t: &FiniteSemigroup) -> Result<WhStructure> {
    let letters: Vec<&str> = t.generators().iter().map(|&g| t.name(g)).collect();
    let reps: Vec<(Vec<usize>, usize)> = table_representatives(t)
        .into_iter()
        .enumerate()
        .map(|(x, w)| (w.expect("generators generate"), x))
        .collect();
    debug_assert_eq!(reps.iter().map(|(w, _)| w).collect::<HashSet<_>>().len(), reps.len());
    finite_structure(&letters, &reps, |x, y| t.mul(x, y), &[])
}

/// Value in `t` of a word over the letters of `structure_from_table(t)`.
pub fn table_value(t: &FiniteSemigroup, s: &WhStructure, w: &[Symbol]) -> usize {
    let xs: Vec<usize> = w
        .iter()
        .map(|&a| {
            let k = s.alphabet().iter().position(|&b| b == a).expect("alphabet letter");
            t.generators()[k]
        })
        .collect();
    t.eval(&xs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z2() -> FiniteSemigroup {
        FiniteSemigroup::from_names(&["e", "g"], &[&["e", "g"], &["g", "e"]], Some(&["e", "g"])).unwrap()
    }

    #[test]
    fn z2_structure_has_four_triples() {
        let s = structure_from_table(&z2()).unwrap();
        assert_eq!(s.alphabet().len(), 2);
        assert_eq!(s.reps().enumerate(4, 100).len(), 2);
        assert_eq!(s.table().productions().len(), 4);
        assert_eq!(s.nt_names(), &["O".to_string()]);
    }

    #[test]
    fn non_generators_get_shortest_lex_words() {
        // Z/3 generated by g: e = ggg, h = gg
        let t = FiniteSemigroup::from_names(
            &["e", "g", "h"],
            &[&["e", "g", "h"], &["g", "h", "e"], &["h", "e", "g"]],
            Some(&["g"]),
        )
        .unwrap();
        let reps = table_representatives(&t);
        assert_eq!(reps, vec![Some(vec![0, 0, 0]), Some(vec![0]), Some(vec![0, 0])]);
    }

    #[test]
    fn nonterminal_name_avoids_letters() {
        let t = FiniteSemigroup::from_names(&["O"], &[&["O"]], None).unwrap();
        let s = structure_from_table(&t).unwrap();
        assert_ne!(s.nt_names()[0], "O");
    }
}
