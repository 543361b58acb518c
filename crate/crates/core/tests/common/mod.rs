#![allow(dead_code)]

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use whsg::decide::{self, Limits};
use whsg::oracle::Property;
use std::collections::BTreeSet;

use whsg::lang::GSym;
use whsg::{Cfg, Symbol, Verdict, WhStructure, Word};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// Every nonempty word over `letters` of length at most `max_len`, shortest
/// first.
pub fn words_up_to(letters: &[Symbol], max_len: usize) -> Vec<Word> {
    let mut out: Vec<Word> = Vec::new();
    let mut layer: Vec<Word> = vec![Vec::new()];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w| {
                letters.iter().map(move |&a| {
                    let mut v = w.clone();
                    v.push(a);
                    v
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

pub fn random_word(rng: &mut StdRng, letters: &[Symbol], min_len: usize, max_len: usize) -> Word {
    let n = rng.random_range(min_len..=max_len);
    (0..n).map(|_| letters[rng.random_range(0..letters.len())]).collect()
}

/// Runs the structure procedure matching `p`.
pub fn decide(s: &WhStructure, p: Property) -> whsg::Result<Verdict> {
    let lim = Limits::default();
    match p {
        Property::Monoid => decide::is_monoid(s),
        Property::Group => decide::is_group(s),
        Property::Commutative => decide::is_commutative(s),
        Property::CompletelySimple => decide::is_completely_simple(s, lim.max_species),
        Property::Clifford => decide::is_clifford(s, lim.max_alphabet_clifford),
        Property::Free => decide::is_free(s, lim.defect_witness_length),
    }
}

/// Members of `g` of length at most `max`, by fixpoint over productions.
/// Independent of the library's own enumeration.
pub fn cfg_members(g: &Cfg, max: usize) -> BTreeSet<Word> {
    let mut derives: Vec<BTreeSet<Word>> = vec![BTreeSet::new(); g.num_nts() as usize];
    loop {
        let mut changed = false;
        for p in g.productions() {
            let mut partial: BTreeSet<Word> = [Vec::new()].into();
            for x in &p.body {
                let opts: Vec<Word> = match *x {
                    GSym::T(a) => vec![vec![a]],
                    GSym::N(n) => derives[n as usize].iter().cloned().collect(),
                };
                partial = partial
                    .iter()
                    .flat_map(|u| opts.iter().map(move |v| [u.as_slice(), v].concat()))
                    .filter(|w| w.len() <= max)
                    .collect();
            }
            for w in partial {
                changed |= derives[p.head as usize].insert(w);
            }
        }
        if !changed {
            return derives[g.start() as usize].clone();
        }
    }
}

/// Whether `x#2y` fails to have `y = x^rev`.
pub fn is_defective(w: &[Symbol]) -> bool {
    match w.iter().position(|&a| a == Symbol::SEP2) {
        Some(i) => w[..i].iter().ne(w[i + 1..].iter().rev()),
        None => true,
    }
}
