use std::collections::{BTreeSet, HashMap, VecDeque};

use super::cfg::Cfg;
use super::nfa::{EpsNfa, Nfa, StateId};
use super::product::{self, Machine};
use super::symbol::{Symbol, Word};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransducerEdge {
    pub from: StateId,
    /// `None` reads nothing.
    pub input: Option<Symbol>,
    pub output: Word,
    pub to: StateId,
}

/// Finite transducer realizing a rational relation between words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transducer {
    num_states: u32,
    initial: StateId,
    accepting: BTreeSet<StateId>,
    edges: Vec<TransducerEdge>,
    output_alphabet: BTreeSet<Symbol>,
}

impl Transducer {
    /// A transducer with one (initial) state.
    pub fn new() -> Self {
        Transducer {
            num_states: 1,
            initial: 0,
            accepting: BTreeSet::new(),
            edges: Vec::new(),
            output_alphabet: BTreeSet::new(),
        }
    }

    pub fn add_state(&mut self) -> StateId {
        self.num_states += 1;
        self.num_states - 1
    }

    pub fn initial(&self) -> StateId {
        self.initial
    }

    pub fn set_accepting(&mut self, s: StateId) {
        assert!(s < self.num_states);
        self.accepting.insert(s);
    }

    pub fn add_edge(&mut self, from: StateId, input: Option<Symbol>, output: Word, to: StateId) {
        assert!(from < self.num_states && to < self.num_states);
        self.output_alphabet.extend(output.iter().copied());
        self.edges.push(TransducerEdge { from, input, output, to });
    }

    pub fn edges(&self) -> &[TransducerEdge] {
        &self.edges
    }

    /// Declares symbols of the output context even if no edge writes them.
    pub fn with_output_alphabet(mut self, extra: impl IntoIterator<Item = Symbol>) -> Self {
        self.output_alphabet.extend(extra);
        self
    }

    /// The identity relation on words over `alphabet` (including ε).
    pub fn identity(alphabet: impl IntoIterator<Item = Symbol>) -> Self {
        let mut t = Transducer::new();
        t.set_accepting(0);
        for a in alphabet {
            t.add_edge(0, Some(a), vec![a], 0);
        }
        t
    }

    /// Letter-to-word substitution: each `(a, w)` rewrites `a` as `w`.
    pub fn substitution(map: impl IntoIterator<Item = (Symbol, Word)>) -> Self {
        let mut t = Transducer::new();
        t.set_accepting(0);
        for (a, w) in map {
            t.add_edge(0, Some(a), w, 0);
        }
        t
    }

    fn machine(&self) -> Machine {
        let mut m = Machine::new(self.num_states as usize);
        m.initial = vec![self.initial];
        for &f in &self.accepting {
            m.accepting[f as usize] = true;
        }
        for e in &self.edges {
            m.add_edge(e.from, e.input, e.output.clone(), e.to);
        }
        m
    }

    /// Image of a regular language.
    pub fn apply_nfa(&self, n: &Nfa) -> Nfa {
        let mut by_input: HashMap<(StateId, Option<Symbol>), Vec<&TransducerEdge>> = HashMap::new();
        for e in &self.edges {
            by_input.entry((e.from, e.input)).or_default().push(e);
        }
        let mut out = EpsNfa::default();
        let mut ids: HashMap<(StateId, StateId), StateId> = HashMap::new();
        let mut queue = VecDeque::new();
        let mut intern = |k: (StateId, StateId), out: &mut EpsNfa, queue: &mut VecDeque<_>| {
            *ids.entry(k).or_insert_with(|| {
                queue.push_back(k);
                out.add_state()
            })
        };
        for &i in n.initial() {
            let s = intern((self.initial, i), &mut out, &mut queue);
            out.initial.push(s);
        }
        while let Some((q, p)) = queue.pop_front() {
            let here = intern((q, p), &mut out, &mut queue);
            if self.accepting.contains(&q) && n.is_accepting(p) {
                out.accepting.push(here);
            }
            for e in by_input.get(&(q, None)).into_iter().flatten() {
                let there = intern((e.to, p), &mut out, &mut queue);
                out.add_path(here, &e.output, there);
            }
            for (a, p2) in n.edges_from(p) {
                for e in by_input.get(&(q, Some(a))).into_iter().flatten() {
                    let there = intern((e.to, p2), &mut out, &mut queue);
                    out.add_path(here, &e.output, there);
                }
            }
        }
        out.into_nfa(self.output_alphabet.iter().copied())
    }

    /// Image of a context-free language; the result is simplified.
    pub fn apply_cfg(&self, g: &Cfg) -> Cfg {
        product::apply(g, &self.machine(), self.output_alphabet.iter().copied())
    }

    /// Image of a single word, by direct simulation (for tests).
    pub fn image_of(&self, w: &[Symbol], max_len: usize) -> BTreeSet<Word> {
        self.apply_nfa(&Nfa::word(w)).enumerate(max_len, usize::MAX).into_iter().collect()
    }
}

impl Default for Transducer {
    fn default() -> Self {
        Self::new()
    }
}
