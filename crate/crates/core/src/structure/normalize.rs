use std::borrow::Cow;
use std::collections::BTreeMap;

use super::{fresh_names, WhStructure};
use crate::lang::{reversed, Symbol, Transducer};

/// Rewrites the structure so that every letter lies in `L` and represents
/// itself.
///
/// `L` gains the letters. The table gains, for every way of replacing any
/// of the three factors of a member `u#1v#2w^rev` that equals some `α(a)`
/// by the letter `a`, the rewritten word. One transducer does all of this:
/// per factor it either copies or reads `α(a)` (reversed in the third
/// factor) and writes `a`.
pub fn normalize_generators(s: &WhStructure) -> WhStructure {
    let alphabet = s.alphabet().to_vec();

    // L ∪ A: one new accepting sink reached from each initial state.
    let missing: Vec<Symbol> = alphabet.iter().copied().filter(|&a| !s.in_reps(&[a])).collect();
    let mut reps = s.reps().clone();
    let mut state_names = s.state_names().to_vec();
    if !missing.is_empty() {
        let sink = reps.add_state();
        let initial: Vec<u32> = reps.initial().iter().copied().collect();
        for i in initial {
            for &a in &missing {
                reps.add_transition(i, a, sink);
            }
        }
        reps.set_accepting(sink);
        let taken = |n: &str| state_names.iter().any(|x| x == n);
        let name = fresh_names("gen", 1, &taken).remove(0);
        state_names.push(name);
    }

    let t = rewriter(s);
    let table = t.apply_cfg(s.table());
    let symbols = s.symbols().clone();
    let nt_names = fresh_names("N", table.num_nts() as usize, &|n| symbols.get(n).is_some());
    let assignment: BTreeMap<Symbol, Vec<Symbol>> = alphabet.iter().map(|&a| (a, vec![a])).collect();
    WhStructure::assemble(symbols, alphabet, reps, state_names, table, nt_names, assignment)
}

fn rewriter(s: &WhStructure) -> Transducer {
    let alphabet = s.alphabet();
    let mut t = Transducer::new().with_output_alphabet(
        alphabet.iter().copied().chain([Symbol::SEP1, Symbol::SEP2]),
    );
    let mut starts = vec![t.initial()];
    let mut ends = Vec::new();
    for seg in 0..3 {
        let start = starts[seg];
        let copy = t.add_state();
        let done = t.add_state();
        for &a in alphabet {
            t.add_edge(start, Some(a), vec![a], copy);
            t.add_edge(copy, Some(a), vec![a], copy);
            let image = if seg == 2 { reversed(s.assignment(a)) } else { s.assignment(a).clone() };
            let mut cur = start;
            for (k, &b) in image.iter().enumerate() {
                let next = if k + 1 == image.len() { done } else { t.add_state() };
                let out = if k == 0 { vec![a] } else { vec![] };
                t.add_edge(cur, Some(b), out, next);
                cur = next;
            }
        }
        ends.push((copy, done));
        if seg < 2 {
            let next = t.add_state();
            let sep = if seg == 0 { Symbol::SEP1 } else { Symbol::SEP2 };
            t.add_edge(copy, Some(sep), vec![sep], next);
            t.add_edge(done, Some(sep), vec![sep], next);
            starts.push(next);
        }
    }
    let (copy, done) = ends[2];
    t.set_accepting(copy);
    t.set_accepting(done);
    t
}

/// The structure itself when already normalized, otherwise its
/// normalization.
pub fn normalized(s: &WhStructure) -> Cow<'_, WhStructure> {
    if s.is_normalized() {
        Cow::Borrowed(s)
    } else {
        Cow::Owned(normalize_generators(s))
    }
}
