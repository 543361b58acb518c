//! Product of a grammar with a finite machine that reads the grammar's words
//! and writes output words.
//!
//! Intersection with an automaton is the special case where every edge
//! writes its own input symbol. Only triples reachable top-down from the
//! machine's initial states are ever built, in the manner of an Earley
//! chart, which keeps the output small for the long, thin automata that
//! arithmetic produces.

use std::collections::{HashMap, HashSet, VecDeque};

use super::cfg::{Cfg, GSym, NtId};
use super::nfa::Nfa;
use super::symbol::{Symbol, Word};

type State = u32;

/// Finite machine with output. Edges either consume one input symbol or
/// none; each writes a (possibly empty) output word.
#[derive(Clone, Debug, Default)]
pub(crate) struct Machine {
    pub num_states: usize,
    pub initial: Vec<State>,
    pub accepting: Vec<bool>,
    pub edges: HashMap<(State, Symbol), Vec<(State, Word)>>,
    pub eps: Vec<Vec<(State, Word)>>,
}

impl Machine {
    pub fn new(num_states: usize) -> Self {
        Machine {
            num_states,
            initial: Vec::new(),
            accepting: vec![false; num_states],
            edges: HashMap::new(),
            eps: vec![Vec::new(); num_states],
        }
    }

    pub fn add_edge(&mut self, from: State, input: Option<Symbol>, output: Word, to: State) {
        match input {
            Some(a) => self.edges.entry((from, a)).or_default().push((to, output)),
            None => self.eps[from as usize].push((to, output)),
        }
    }

    pub fn from_nfa(n: &Nfa) -> Self {
        let mut m = Machine::new(n.num_states());
        m.initial = n.initial().iter().copied().collect();
        for &f in n.accepting() {
            m.accepting[f as usize] = true;
        }
        for (s, a, t) in n.transitions() {
            m.add_edge(s, Some(a), vec![a], t);
        }
        m
    }

    fn closures(&self) -> Vec<Vec<State>> {
        (0..self.num_states as State)
            .map(|s| {
                let mut seen = vec![s];
                let mut stack = vec![s];
                while let Some(x) = stack.pop() {
                    for &(t, _) in &self.eps[x as usize] {
                        if !seen.contains(&t) {
                            seen.push(t);
                            stack.push(t);
                        }
                    }
                }
                seen.sort_unstable();
                seen
            })
            .collect()
    }
}

#[derive(Copy, Clone, PartialEq, Eq, Hash)]
struct ItemKey {
    origin: State,
    prod: u32,
    dot: u32,
    cur: State,
}

#[derive(Copy, Clone, PartialEq, Eq, Hash)]
enum Key {
    Start,
    Item(u32),
    Nt(NtId, State, State),
    Term(State, Symbol, State),
    Eps(State, State),
}

/// Grammar for `{ out : in ∈ L(g), m transforms in to out }`, simplified.
pub(crate) fn apply(g: &Cfg, m: &Machine, out_terminals: impl IntoIterator<Item = Symbol>) -> Cfg {
    let src = g.simplified();
    let prods = src.productions();
    let mut by_head: Vec<Vec<u32>> = vec![Vec::new(); src.num_nts() as usize];
    for (i, p) in prods.iter().enumerate() {
        by_head[p.head as usize].push(i as u32);
    }
    let closure = m.closures();

    // ---- chart ----
    let mut item_ids: HashMap<ItemKey, u32> = HashMap::new();
    let mut items: Vec<ItemKey> = Vec::new();
    let mut preds: Vec<Vec<State>> = Vec::new();
    let mut agenda: Vec<u32> = Vec::new();
    let mut predicted: HashSet<(NtId, State)> = HashSet::new();
    let mut waiting: HashMap<(NtId, State), Vec<u32>> = HashMap::new();
    let mut ends: HashMap<(NtId, State), Vec<State>> = HashMap::new();
    let mut completed_by: HashMap<(NtId, State, State), Vec<u32>> = HashMap::new();
    
    let mut starts: Vec<State> = Vec::new();
    for &i in &m.initial {
        for &s in &closure[i as usize] {
            if !starts.contains(&s) {
                starts.push(s);
            }
        }
    }
    if !prods.is_empty() {
        for &s in &starts {
            if predicted.insert((src.start(), s)) {
                for &p in &by_head[src.start() as usize] {
                    let k = ItemKey { origin: s, prod: p, dot: 0, cur: s };
                    add_item(k, None, &mut item_ids, &mut items, &mut preds, &mut agenda);
                }
            }
        }
    }

    while let Some(id) = agenda.pop() {
        let it = items[id as usize];
        let body = &prods[it.prod as usize].body;
        if it.dot as usize == body.len() {
            let head = prods[it.prod as usize].head;
            let fresh = !completed_by.contains_key(&(head, it.origin, it.cur));
            completed_by.entry((head, it.origin, it.cur)).or_default().push(id);
            if fresh {
                ends.entry((head, it.origin)).or_default().push(it.cur);
                for &w in waiting.get(&(head, it.origin)).cloned().unwrap_or_default().iter() {
                    let wk = items[w as usize];
                    let k = ItemKey { dot: wk.dot + 1, cur: it.cur, ..wk };
                    add_item(k, Some(it.origin), &mut item_ids, &mut items, &mut preds, &mut agenda);
                }
            }
            continue;
        }
        match body[it.dot as usize] {
            GSym::T(a) => {
                if let Some(es) = m.edges.get(&(it.cur, a)) {
                    for (r, _) in es {
                        for &s in &closure[*r as usize] {
                            let k = ItemKey { dot: it.dot + 1, cur: s, ..it };
                            add_item(k, Some(it.cur), &mut item_ids, &mut items, &mut preds, &mut agenda);
                        }
                    }
                }
            }
            GSym::N(y) => {
                waiting.entry((y, it.cur)).or_default().push(id);
                if predicted.insert((y, it.cur)) {
                    for &p in &by_head[y as usize] {
                        let k = ItemKey { origin: it.cur, prod: p, dot: 0, cur: it.cur };
                        add_item(k, None, &mut item_ids, &mut items, &mut preds, &mut agenda);
                    }
                }
                for &e in ends.get(&(y, it.cur)).cloned().unwrap_or_default().iter() {
                    let k = ItemKey { dot: it.dot + 1, cur: e, ..it };
                    add_item(k, Some(it.cur), &mut item_ids, &mut items, &mut preds, &mut agenda);
                }
            }
        }
    }

    // ---- emission ----
    let mut out = Cfg::new(1, 0, out_terminals);
    let mut ids: HashMap<Key, NtId> = HashMap::new();
    ids.insert(Key::Start, 0);
    let mut queue: VecDeque<Key> = VecDeque::from([Key::Start]);
    let term_sym = |a: Symbol| GSym::T(a);

    while let Some(key) = queue.pop_front() {
        let head = ids[&key];
        match key {
            Key::Start => {
                for &i in &m.initial {
                    for &s in &closure[i as usize] {
                        for f in 0..m.num_states as State {
                            if !m.accepting[f as usize] {
                                continue;
                            }
                            if completed_by.contains_key(&(src.start(), s, f)) {
                                let e = nt(&mut ids, Key::Eps(i, s), &mut out, &mut queue);
                                let n = nt(&mut ids, Key::Nt(src.start(), s, f), &mut out, &mut queue);
                                out.add_production(head, vec![GSym::N(e), GSym::N(n)]);
                            }
                        }
                        if g.contains_empty() && m.accepting[s as usize] {
                            let e = nt(&mut ids, Key::Eps(i, s), &mut out, &mut queue);
                            out.add_production(head, vec![GSym::N(e)]);
                        }
                    }
                }
            }
            Key::Nt(x, o, q) => {
                for &item in &completed_by[&(x, o, q)] {
                    let n = nt(&mut ids, Key::Item(item), &mut out, &mut queue);
                    out.add_production(head, vec![GSym::N(n)]);
                }
            }
            Key::Item(item) => {
                let it = items[item as usize];
                if it.dot == 0 {
                    out.add_production(head, vec![]);
                    continue;
                }
                let sym = prods[it.prod as usize].body[it.dot as usize - 1];
                for &r in &preds[item as usize] {
                    let prev = ItemKey { dot: it.dot - 1, cur: r, ..it };
                    let last = match sym {
                        GSym::T(a) => nt(&mut ids, Key::Term(r, a, it.cur), &mut out, &mut queue),
                        GSym::N(y) => nt(&mut ids, Key::Nt(y, r, it.cur), &mut out, &mut queue),
                    };
                    if it.dot == 1 {
                        out.add_production(head, vec![GSym::N(last)]);
                    } else {
                        let p = nt(&mut ids, Key::Item(item_ids[&prev]), &mut out, &mut queue);
                        out.add_production(head, vec![GSym::N(p), GSym::N(last)]);
                    }
                }
            }
            Key::Term(q, a, s) => {
                for (t, w) in &m.edges[&(q, a)] {
                    if closure[*t as usize].contains(&s) {
                        let e = nt(&mut ids, Key::Eps(*t, s), &mut out, &mut queue);
                        let mut body: Vec<GSym> = w.iter().map(|&b| term_sym(b)).collect();
                        body.push(GSym::N(e));
                        out.add_production(head, body);
                    }
                }
            }
            Key::Eps(r, s) => {
                if r == s {
                    out.add_production(head, vec![]);
                }
                for (t, w) in &m.eps[r as usize] {
                    if closure[*t as usize].contains(&s) {
                        let e = nt(&mut ids, Key::Eps(*t, s), &mut out, &mut queue);
                        let mut body: Vec<GSym> = w.iter().map(|&b| term_sym(b)).collect();
                        body.push(GSym::N(e));
                        out.add_production(head, body);
                    }
                }
            }
        }
    }
    let simplified = out.simplified().clone();
    let mut result = simplified;
    if out.contains_empty() {
        // Keep the empty word, which simplification sets aside.
        let s = result.add_nt();
        let old = result.start();
        let mut r = Cfg::new(result.num_nts(), s, result.terminals().iter().copied());
        for p in result.productions() {
            r.add_production(p.head, p.body.clone());
        }
        r.add_production(s, vec![GSym::N(old)]);
        r.add_production(s, vec![]);
        result = r;
    }
    result
}

fn add_item(
    key: ItemKey,
    pred: Option<State>,
    item_ids: &mut HashMap<ItemKey, u32>,
    items: &mut Vec<ItemKey>,
    preds: &mut Vec<Vec<State>>,
    agenda: &mut Vec<u32>,
) {
    let id = match item_ids.get(&key) {
        Some(&id) => id,
        None => {
            let id = items.len() as u32;
            item_ids.insert(key, id);
            items.push(key);
            preds.push(Vec::new());
            agenda.push(id);
            id
        }
    };
    if let Some(r) = pred {
        let ps = &mut preds[id as usize];
        if !ps.contains(&r) {
            ps.push(r);
        }
    }
}

fn nt(ids: &mut HashMap<Key, NtId>, k: Key, out: &mut Cfg, queue: &mut VecDeque<Key>) -> NtId {
    *ids.entry(k).or_insert_with(|| {
        queue.push_back(k);
        out.add_nt()
    })
}
