use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use super::symbol::{Symbol, Word};

pub type StateId = u32;

/// Nondeterministic finite automaton without ε-moves.
///
/// The alphabet is the declared symbol context of the automaton: it always
/// contains every transition label, and complement is taken relative to it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Nfa {
    alphabet: BTreeSet<Symbol>,
    transitions: Vec<BTreeMap<Symbol, Vec<StateId>>>,
    initial: BTreeSet<StateId>,
    accepting: BTreeSet<StateId>,
}

impl Nfa {
    pub fn new(alphabet: impl IntoIterator<Item = Symbol>) -> Self {
        Nfa {
            alphabet: alphabet.into_iter().collect(),
            transitions: Vec::new(),
            initial: BTreeSet::new(),
            accepting: BTreeSet::new(),
        }
    }

    pub fn add_state(&mut self) -> StateId {
        self.transitions.push(BTreeMap::new());
        (self.transitions.len() - 1) as StateId
    }

    pub fn add_transition(&mut self, from: StateId, sym: Symbol, to: StateId) {
        assert!((from as usize) < self.transitions.len() && (to as usize) < self.transitions.len());
        self.alphabet.insert(sym);
        let targets = self.transitions[from as usize].entry(sym).or_default();
        if let Err(pos) = targets.binary_search(&to) {
            targets.insert(pos, to);
        }
    }

    pub fn set_initial(&mut self, s: StateId) {
        assert!((s as usize) < self.transitions.len());
        self.initial.insert(s);
    }

    pub fn set_accepting(&mut self, s: StateId) {
        assert!((s as usize) < self.transitions.len());
        self.accepting.insert(s);
    }

    pub fn num_states(&self) -> usize {
        self.transitions.len()
    }

    pub fn alphabet(&self) -> &BTreeSet<Symbol> {
        &self.alphabet
    }

    pub fn initial(&self) -> &BTreeSet<StateId> {
        &self.initial
    }

    pub fn accepting(&self) -> &BTreeSet<StateId> {
        &self.accepting
    }

    pub fn is_accepting(&self, s: StateId) -> bool {
        self.accepting.contains(&s)
    }

    pub fn step(&self, s: StateId, sym: Symbol) -> &[StateId] {
        self.transitions[s as usize]
            .get(&sym)
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }

    /// Outgoing transitions of `s`, ordered by symbol then target.
    pub fn edges_from(&self, s: StateId) -> impl Iterator<Item = (Symbol, StateId)> + '_ {
        self.transitions[s as usize]
            .iter()
            .flat_map(|(&a, ts)| ts.iter().map(move |&t| (a, t)))
    }

    /// All transitions as `(from, symbol, to)`, ordered.
    pub fn transitions(&self) -> Vec<(StateId, Symbol, StateId)> {
        (0..self.num_states() as StateId)
            .flat_map(|s| self.edges_from(s).map(move |(a, t)| (s, a, t)))
            .collect()
    }

    pub fn with_alphabet(mut self, extra: impl IntoIterator<Item = Symbol>) -> Self {
        self.alphabet.extend(extra);
        self
    }

    // ---- constructors ----------------------------------------------------

    /// The empty language.
    pub fn empty(alphabet: impl IntoIterator<Item = Symbol>) -> Self {
        let mut n = Nfa::new(alphabet);
        n.add_state();
        n.set_initial(0);
        n
    }

    /// The language `{w}`.
    pub fn word(w: &[Symbol]) -> Self {
        let mut n = Nfa::new(w.iter().copied());
        let mut cur = n.add_state();
        n.set_initial(cur);
        for &a in w {
            let next = n.add_state();
            n.add_transition(cur, a, next);
            cur = next;
        }
        n.set_accepting(cur);
        n
    }

    /// A finite language, built as a trie.
    pub fn finite<'a>(words: impl IntoIterator<Item = &'a Word>) -> Self {
        let mut n = Nfa::new([]);
        let root = n.add_state();
        n.set_initial(root);
        let mut children: HashMap<(StateId, Symbol), StateId> = HashMap::new();
        for w in words {
            let mut cur = root;
            for &a in w {
                cur = match children.get(&(cur, a)) {
                    Some(&c) => c,
                    None => {
                        let c = n.add_state();
                        n.add_transition(cur, a, c);
                        children.insert((cur, a), c);
                        c
                    }
                };
            }
            n.set_accepting(cur);
        }
        n
    }

    /// `A+` over the given symbols.
    pub fn plus(alphabet: impl IntoIterator<Item = Symbol>) -> Self {
        let alphabet: Vec<Symbol> = alphabet.into_iter().collect();
        let mut n = Nfa::new(alphabet.iter().copied());
        let s0 = n.add_state();
        let s1 = n.add_state();
        n.set_initial(s0);
        n.set_accepting(s1);
        for &a in &alphabet {
            n.add_transition(s0, a, s1);
            n.add_transition(s1, a, s1);
        }
        n
    }

    /// `A*` over the given symbols.
    pub fn star(alphabet: impl IntoIterator<Item = Symbol>) -> Self {
        let alphabet: Vec<Symbol> = alphabet.into_iter().collect();
        let mut n = Nfa::new(alphabet.iter().copied());
        let s0 = n.add_state();
        n.set_initial(s0);
        n.set_accepting(s0);
        for &a in &alphabet {
            n.add_transition(s0, a, s0);
        }
        n
    }

    /// Concatenation of several languages in order.
    pub fn concat_all(parts: &[&Nfa]) -> Nfa {
        let mut it = parts.iter();
        let first = match it.next() {
            Some(n) => (*n).clone(),
            None => {
                let mut n = Nfa::new([]);
                let s = n.add_state();
                n.set_initial(s);
                n.set_accepting(s);
                return n;
            }
        };
        it.fold(first, |acc, n| acc.concat(n))
    }

    // ---- queries ---------------------------------------------------------

    pub fn accepts(&self, w: &[Symbol]) -> bool {
        let mut cur: BTreeSet<StateId> = self.initial.clone();
        for &a in w {
            if cur.is_empty() {
                return false;
            }
            cur = cur.iter().flat_map(|&s| self.step(s, a).iter().copied()).collect();
        }
        cur.iter().any(|s| self.accepting.contains(s))
    }

    pub fn is_empty(&self) -> bool {
        self.shortest_word().is_none()
    }

    /// The shortest accepted word; among those of minimal length, the
    /// lexicographically least one.
    pub fn shortest_word(&self) -> Option<Word> {
        let start: Vec<StateId> = self.initial.iter().copied().collect();
        let accepts = |set: &[StateId]| set.iter().any(|s| self.accepting.contains(s));
        if accepts(&start) {
            return Some(Vec::new());
        }
        let mut seen: HashMap<Vec<StateId>, usize> = HashMap::new();
        // (parent and letter, subset)
        type Node = (Option<(usize, Symbol)>, Vec<StateId>);
        let mut nodes: Vec<Node> = vec![(None, start.clone())];
        seen.insert(start, 0);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for &a in &self.alphabet {
                let next = self.step_set(&nodes[i].1, a);
                if next.is_empty() || seen.contains_key(&next) {
                    continue;
                }
                let j = nodes.len();
                seen.insert(next.clone(), j);
                let hit = accepts(&next);
                nodes.push((Some((i, a)), next));
                if hit {
                    let mut w = Vec::new();
                    let mut k = j;
                    while let Some((p, s)) = nodes[k].0 {
                        w.push(s);
                        k = p;
                    }
                    w.reverse();
                    return Some(w);
                }
                queue.push_back(j);
            }
        }
        None
    }

    fn step_set(&self, set: &[StateId], a: Symbol) -> Vec<StateId> {
        let mut out: Vec<StateId> = set.iter().flat_map(|&s| self.step(s, a).iter().copied()).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Accepted words of length at most `max_len`, in shortest-lex order,
    /// stopping after `limit` words.
    pub fn enumerate(&self, max_len: usize, limit: usize) -> Vec<Word> {
        let mut out = Vec::new();
        let start: Vec<StateId> = self.initial.iter().copied().collect();
        let mut layer: Vec<(Word, Vec<StateId>)> = vec![(Vec::new(), start)];
        for len in 0..=max_len {
            for (w, set) in &layer {
                if set.iter().any(|s| self.accepting.contains(s)) {
                    out.push(w.clone());
                    if out.len() >= limit {
                        return out;
                    }
                }
            }
            if len == max_len {
                break;
            }
            let mut next = Vec::new();
            for (w, set) in &layer {
                for &a in &self.alphabet {
                    let t = self.step_set(set, a);
                    if !t.is_empty() {
                        let mut w2 = w.clone();
                        w2.push(a);
                        next.push((w2, t));
                    }
                }
            }
            layer = next;
        }
        out
    }

    /// Language equality, decided on the fly over pairs of subset states.
    pub fn equivalent(&self, other: &Nfa) -> bool {
        let alphabet: BTreeSet<Symbol> = self.alphabet.union(&other.alphabet).copied().collect();
        let acc = |n: &Nfa, set: &[StateId]| set.iter().any(|s| n.accepting.contains(s));
        let start = (
            self.initial.iter().copied().collect::<Vec<_>>(),
            other.initial.iter().copied().collect::<Vec<_>>(),
        );
        let mut seen = std::collections::HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(start.clone());
        queue.push_back(start);
        while let Some((x, y)) = queue.pop_front() {
            if acc(self, &x) != acc(other, &y) {
                return false;
            }
            for &a in &alphabet {
                let nx = self.step_set(&x, a);
                let ny = other.step_set(&y, a);
                if nx.is_empty() && ny.is_empty() {
                    continue;
                }
                let key = (nx, ny);
                if seen.insert(key.clone()) {
                    queue.push_back(key);
                }
            }
        }
        true
    }

    /// `L(self) ⊆ L(other)`.
    pub fn is_subset_of(&self, other: &Nfa) -> bool {
        self.intersection(&other.complement_over(self.alphabet.iter().copied()))
            .is_empty()
    }

    // ---- constructions ---------------------------------------------------

    /// Product automaton over reachable state pairs.
    pub fn intersection(&self, other: &Nfa) -> Nfa {
        let alphabet: BTreeSet<Symbol> = self.alphabet.union(&other.alphabet).copied().collect();
        let mut out = Nfa::new(alphabet);
        let mut ids: HashMap<(StateId, StateId), StateId> = HashMap::new();
        let mut queue = VecDeque::new();
        for &p in &self.initial {
            for &q in &other.initial {
                let s = out.add_state();
                out.set_initial(s);
                ids.insert((p, q), s);
                queue.push_back((p, q));
            }
        }
        while let Some((p, q)) = queue.pop_front() {
            let s = ids[&(p, q)];
            if self.is_accepting(p) && other.is_accepting(q) {
                out.set_accepting(s);
            }
            for (a, p2) in self.edges_from(p) {
                for &q2 in other.step(q, a) {
                    let t = *ids.entry((p2, q2)).or_insert_with(|| {
                        queue.push_back((p2, q2));
                        out.add_state()
                    });
                    out.add_transition(s, a, t);
                }
            }
        }
        out.trim()
    }

    pub fn union(&self, other: &Nfa) -> Nfa {
        let mut out = self.clone();
        out.alphabet.extend(other.alphabet.iter().copied());
        let offset = out.num_states() as StateId;
        for _ in 0..other.num_states() {
            out.add_state();
        }
        for (s, a, t) in other.transitions() {
            out.add_transition(s + offset, a, t + offset);
        }
        for &s in &other.initial {
            out.set_initial(s + offset);
        }
        for &s in &other.accepting {
            out.set_accepting(s + offset);
        }
        out
    }

    pub fn concat(&self, other: &Nfa) -> Nfa {
        let mut e = EpsNfa::default();
        let off1 = e.import(self);
        let off2 = e.import(other);
        e.initial = self.initial.iter().map(|s| s + off1).collect();
        e.accepting = other.accepting.iter().map(|s| s + off2).collect();
        for &f in &self.accepting {
            for &i in &other.initial {
                e.add_eps(f + off1, i + off2);
            }
        }
        let alphabet = self.alphabet.union(&other.alphabet).copied();
        e.into_nfa(alphabet)
    }

    pub fn reverse(&self) -> Nfa {
        let mut out = Nfa::new(self.alphabet.iter().copied());
        for _ in 0..self.num_states() {
            out.add_state();
        }
        for (s, a, t) in self.transitions() {
            out.add_transition(t, a, s);
        }
        out.initial = self.accepting.clone();
        out.accepting = self.initial.clone();
        out
    }

    /// Complement relative to the automaton's own alphabet.
    pub fn complement(&self) -> Nfa {
        self.complement_over(self.alphabet.iter().copied())
    }

    /// Complement relative to `alphabet ∪ self.alphabet`.
    pub fn complement_over(&self, alphabet: impl IntoIterator<Item = Symbol>) -> Nfa {
        let mut dfa = self.determinize_over(alphabet.into_iter().chain(self.alphabet.iter().copied()));
        let all: BTreeSet<StateId> = (0..dfa.num_states() as StateId).collect();
        dfa.accepting = all.difference(&dfa.accepting).copied().collect();
        dfa
    }

    /// Complete deterministic automaton (with a sink when needed) over the
    /// given alphabet.
    fn determinize_over(&self, alphabet: impl IntoIterator<Item = Symbol>) -> Nfa {
        let alphabet: BTreeSet<Symbol> = alphabet.into_iter().collect();
        let mut out = Nfa::new(alphabet.iter().copied());
        let start: Vec<StateId> = self.initial.iter().copied().collect();
        let mut ids: HashMap<Vec<StateId>, StateId> = HashMap::new();
        let s0 = out.add_state();
        out.set_initial(s0);
        ids.insert(start.clone(), s0);
        let mut queue = VecDeque::from([start]);
        while let Some(set) = queue.pop_front() {
            let s = ids[&set];
            if set.iter().any(|q| self.accepting.contains(q)) {
                out.set_accepting(s);
            }
            for &a in &alphabet {
                let next = self.step_set(&set, a);
                let t = match ids.get(&next) {
                    Some(&t) => t,
                    None => {
                        let t = out.add_state();
                        ids.insert(next.clone(), t);
                        queue.push_back(next);
                        t
                    }
                };
                out.add_transition(s, a, t);
            }
        }
        out
    }

    /// Relabels transitions through `f`; the alphabet is mapped likewise.
    pub fn map_symbols(&self, f: impl Fn(Symbol) -> Symbol) -> Nfa {
        let mut out = Nfa::new(self.alphabet.iter().map(|&a| f(a)));
        for _ in 0..self.num_states() {
            out.add_state();
        }
        for (s, a, t) in self.transitions() {
            out.add_transition(s, f(a), t);
        }
        out.initial = self.initial.clone();
        out.accepting = self.accepting.clone();
        out
    }

    /// Keeps only states that are reachable and co-reachable, renumbered in
    /// discovery order. Always keeps at least one (initial) state.
    pub fn trim(&self) -> Nfa {
        let n = self.num_states();
        let mut fwd = vec![false; n];
        let mut stack: Vec<StateId> = self.initial.iter().copied().collect();
        for &s in &stack {
            fwd[s as usize] = true;
        }
        while let Some(s) = stack.pop() {
            for (_, t) in self.edges_from(s) {
                if !fwd[t as usize] {
                    fwd[t as usize] = true;
                    stack.push(t);
                }
            }
        }
        let mut back_edges: Vec<Vec<StateId>> = vec![Vec::new(); n];
        for (s, _, t) in self.transitions() {
            back_edges[t as usize].push(s);
        }
        let mut bwd = vec![false; n];
        let mut stack: Vec<StateId> = self.accepting.iter().copied().collect();
        for &s in &stack {
            bwd[s as usize] = true;
        }
        while let Some(s) = stack.pop() {
            for &p in &back_edges[s as usize] {
                if !bwd[p as usize] {
                    bwd[p as usize] = true;
                    stack.push(p);
                }
            }
        }
        let live: Vec<bool> = (0..n).map(|i| fwd[i] && bwd[i]).collect();
        if !live.iter().any(|&x| x) {
            return Nfa::empty(self.alphabet.iter().copied());
        }
        // BFS renumbering from initial states keeps output deterministic.
        let mut ids: Vec<Option<StateId>> = vec![None; n];
        let mut out = Nfa::new(self.alphabet.iter().copied());
        let mut queue = VecDeque::new();
        for &s in &self.initial {
            if live[s as usize] && ids[s as usize].is_none() {
                ids[s as usize] = Some(out.add_state());
                queue.push_back(s);
            }
        }
        while let Some(s) = queue.pop_front() {
            for (_, t) in self.edges_from(s) {
                if live[t as usize] && ids[t as usize].is_none() {
                    ids[t as usize] = Some(out.add_state());
                    queue.push_back(t);
                }
            }
        }
        for (s, a, t) in self.transitions() {
            if let (Some(x), Some(y)) = (ids[s as usize], ids[t as usize]) {
                out.add_transition(x, a, y);
            }
        }
        for &s in &self.initial {
            if let Some(x) = ids[s as usize] {
                out.set_initial(x);
            }
        }
        for &s in &self.accepting {
            if let Some(x) = ids[s as usize] {
                out.set_accepting(x);
            }
        }
        out
    }
}

/// Automaton with ε-moves, used while assembling constructions.
#[derive(Default, Debug, Clone)]
pub(crate) struct EpsNfa {
    pub edges: Vec<Vec<(Option<Symbol>, StateId)>>,
    pub initial: Vec<StateId>,
    pub accepting: Vec<StateId>,
}

impl EpsNfa {
    pub fn add_state(&mut self) -> StateId {
        self.edges.push(Vec::new());
        (self.edges.len() - 1) as StateId
    }

    pub fn add_edge(&mut self, from: StateId, sym: Symbol, to: StateId) {
        self.edges[from as usize].push((Some(sym), to));
    }

    pub fn add_eps(&mut self, from: StateId, to: StateId) {
        self.edges[from as usize].push((None, to));
    }

    /// Adds a path from `from` to `to` spelling `w` (ε-move when empty).
    pub fn add_path(&mut self, from: StateId, w: &[Symbol], to: StateId) {
        match w.len() {
            0 => self.add_eps(from, to),
            _ => {
                let mut cur = from;
                for (i, &a) in w.iter().enumerate() {
                    let next = if i + 1 == w.len() { to } else { self.add_state() };
                    self.add_edge(cur, a, next);
                    cur = next;
                }
            }
        }
    }

    fn import(&mut self, n: &Nfa) -> StateId {
        let off = self.edges.len() as StateId;
        for _ in 0..n.num_states() {
            self.add_state();
        }
        for (s, a, t) in n.transitions() {
            self.add_edge(s + off, a, t + off);
        }
        off
    }

    fn closure(&self, s: StateId) -> Vec<StateId> {
        let mut seen = vec![s];
        let mut stack = vec![s];
        while let Some(x) = stack.pop() {
            for &(lab, t) in &self.edges[x as usize] {
                if lab.is_none() && !seen.contains(&t) {
                    seen.push(t);
                    stack.push(t);
                }
            }
        }
        seen
    }

    pub fn into_nfa(self, alphabet: impl IntoIterator<Item = Symbol>) -> Nfa {
        let mut out = Nfa::new(alphabet);
        for _ in 0..self.edges.len() {
            out.add_state();
        }
        let accepting: BTreeSet<StateId> = self.accepting.iter().copied().collect();
        for s in 0..self.edges.len() as StateId {
            for t in self.closure(s) {
                if accepting.contains(&t) {
                    out.set_accepting(s);
                }
                for &(lab, u) in &self.edges[t as usize] {
                    if let Some(a) = lab {
                        out.add_transition(s, a, u);
                    }
                }
            }
        }
        for &s in &self.initial {
            out.set_initial(s);
        }
        out.trim()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const A: Symbol = Symbol(2);
    const B: Symbol = Symbol(3);

    fn all_words(alpha: &[Symbol], max: usize) -> Vec<Word> {
        let mut out = vec![vec![]];
        let mut layer = vec![vec![]];
        for _ in 0..max {
            let mut next = Vec::new();
            for w in &layer {
                for &a in alpha {
                    let mut w2: Word = w.clone();
                    w2.push(a);
                    next.push(w2);
                }
            }
            out.extend(next.iter().cloned());
            layer = next;
        }
        out
    }

    #[test]
    fn plus_membership() {
        let n = Nfa::plus([A, B]);
        assert!(n.accepts(&[A, B]));
        assert!(!n.accepts(&[]));
    }

    #[test]
    fn reversal_of_single_word() {
        let r = Nfa::word(&[A, B]).reverse();
        assert!(r.accepts(&[B, A]));
        assert!(!r.accepts(&[A, B]));
        assert_eq!(r.enumerate(4, 10), vec![vec![B, A]]);
    }

    #[test]
    fn shortest_witness_of_intersection() {
        let ends_b = Nfa::plus([A, B]).concat(&Nfa::word(&[B]));
        let starts_a = Nfa::word(&[A]).concat(&Nfa::star([A, B]));
        let both = ends_b.intersection(&starts_a);
        // brute force: first accepted word by length, then lex
        let expected = all_words(&[A, B], 2)
            .into_iter()
            .find(|w| ends_b.accepts(w) && starts_a.accepts(w));
        assert_eq!(expected, Some(vec![A, B]));
        assert_eq!(both.shortest_word(), expected);
    }

    #[test]
    fn complement_and_equivalence() {
        let n = Nfa::plus([A, B]);
        let c = n.complement();
        assert!(c.accepts(&[]));
        assert!(!c.accepts(&[A]));
        assert!(c.equivalent(&Nfa::star([A, B]).intersection(&Nfa::word(&[]).with_alphabet([A, B]))));
        assert!(n.equivalent(&Nfa::star([A, B]).concat(&Nfa::plus([A, B]))));
        assert!(!n.equivalent(&Nfa::star([A, B])));
    }

    #[test]
    fn empty_language_has_no_witness() {
        let n = Nfa::word(&[A]).intersection(&Nfa::word(&[B]));
        assert!(n.is_empty());
        assert_eq!(n.shortest_word(), None);
    }

    #[test]
    fn set_operations_agree_with_enumeration() {
        let x = Nfa::finite(&[vec![A], vec![A, B], vec![B, B, A]]);
        let y = Nfa::plus([A]).concat(&Nfa::star([B]));
        for w in all_words(&[A, B], 6) {
            let (inx, iny) = (x.accepts(&w), y.accepts(&w));
            assert_eq!(x.intersection(&y).accepts(&w), inx && iny);
            assert_eq!(x.union(&y).accepts(&w), inx || iny);
            assert_eq!(x.complement_over([A, B]).accepts(&w), !inx);
            assert_eq!(x.reverse().accepts(&w), x.accepts(&crate::lang::reversed(&w)));
            let in_concat = (0..=w.len()).any(|k| x.accepts(&w[..k]) && y.accepts(&w[k..]));
            assert_eq!(x.concat(&y).accepts(&w), in_concat);
        }
    }
}
