use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::sync::{Arc, OnceLock};

use super::nfa::Nfa;
use super::product::{self, Machine};
use super::symbol::{Symbol, Word};
use super::LangError;

pub type NtId = u32;

#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GSym {
    T(Symbol),
    N(NtId),
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Production {
    pub head: NtId,
    pub body: Vec<GSym>,
}

/// Context-free grammar. Nonterminals are dense ids `0..num_nts`.
///
/// The simplified form (ε-free, unit-free, no useless symbols) and the
/// binarized form used by membership are computed once on demand and cached.
#[derive(Clone, Debug)]
pub struct Cfg {
    num_nts: u32,
    start: NtId,
    productions: Vec<Production>,
    terminals: BTreeSet<Symbol>,
    simplified: OnceLock<Arc<Simplified>>,
    binarized: OnceLock<Arc<Binarized>>,
}

#[derive(Debug)]
struct Simplified {
    grammar: Cfg,
    has_empty: bool,
}

impl PartialEq for Cfg {
    fn eq(&self, other: &Self) -> bool {
        self.num_nts == other.num_nts
            && self.start == other.start
            && self.productions == other.productions
            && self.terminals == other.terminals
    }
}

impl Eq for Cfg {}

impl Cfg {
    /// A grammar with `num_nts` nonterminals and no productions.
    pub fn new(num_nts: u32, start: NtId, terminals: impl IntoIterator<Item = Symbol>) -> Self {
        assert!(start < num_nts, "start symbol out of range");
        Cfg {
            num_nts,
            start,
            productions: Vec::new(),
            terminals: terminals.into_iter().collect(),
            simplified: OnceLock::new(),
            binarized: OnceLock::new(),
        }
    }

    pub fn empty(terminals: impl IntoIterator<Item = Symbol>) -> Self {
        Cfg::new(1, 0, terminals)
    }

    /// The finite language given by `words`.
    pub fn from_words<'a>(words: impl IntoIterator<Item = &'a Word>) -> Self {
        let mut g = Cfg::new(1, 0, []);
        for w in words {
            g.add_production(0, w.iter().map(|&a| GSym::T(a)).collect());
        }
        g
    }

    /// Right-linear grammar for the language of an automaton.
    pub fn from_nfa(n: &Nfa) -> Self {
        let k = n.num_states() as u32;
        let mut g = Cfg::new(k + 1, k, n.alphabet().iter().copied());
        for &i in n.initial() {
            g.add_production(k, vec![GSym::N(i)]);
        }
        for (s, a, t) in n.transitions() {
            g.add_production(s, vec![GSym::T(a), GSym::N(t)]);
        }
        for &f in n.accepting() {
            g.add_production(f, vec![]);
        }
        g
    }

    fn invalidate(&mut self) {
        self.simplified = OnceLock::new();
        self.binarized = OnceLock::new();
    }

    pub fn add_nt(&mut self) -> NtId {
        self.invalidate();
        self.num_nts += 1;
        self.num_nts - 1
    }

    pub fn add_production(&mut self, head: NtId, body: Vec<GSym>) {
        assert!(head < self.num_nts);
        for s in &body {
            match *s {
                GSym::N(n) => assert!(n < self.num_nts, "nonterminal out of range"),
                GSym::T(a) => {
                    self.terminals.insert(a);
                }
            }
        }
        self.invalidate();
        self.productions.push(Production { head, body });
    }

    pub fn num_nts(&self) -> u32 {
        self.num_nts
    }

    pub fn start(&self) -> NtId {
        self.start
    }

    /// Same productions, derivations rooted at `start`.
    pub fn with_start(&self, start: NtId) -> Cfg {
        assert!(start < self.num_nts, "start symbol out of range");
        Cfg {
            num_nts: self.num_nts,
            start,
            productions: self.productions.clone(),
            terminals: self.terminals.clone(),
            simplified: OnceLock::new(),
            binarized: OnceLock::new(),
        }
    }

    pub fn productions(&self) -> &[Production] {
        &self.productions
    }

    pub fn terminals(&self) -> &BTreeSet<Symbol> {
        &self.terminals
    }

    pub fn with_terminals(mut self, extra: impl IntoIterator<Item = Symbol>) -> Self {
        self.terminals.extend(extra);
        self
    }

    // ---- normal forms ----------------------------------------------------

    fn simplified_form(&self) -> &Simplified {
        self.simplified.get_or_init(|| Arc::new(simplify(self)))
    }

    /// Equivalent grammar without ε-productions, unit productions or useless
    /// nonterminals. The empty word, if present, is dropped; see
    /// [`Cfg::contains_empty`].
    pub fn simplified(&self) -> &Cfg {
        &self.simplified_form().grammar
    }

    pub fn contains_empty(&self) -> bool {
        self.simplified_form().has_empty
    }

    /// Strict normalization: the language must be nonempty and ε-free.
    pub fn normalize(&self) -> Result<Cfg, LangError> {
        let s = self.simplified_form();
        if s.has_empty {
            return Err(LangError::EpsilonInLanguage);
        }
        if s.grammar.productions.is_empty() {
            return Err(LangError::EmptyLanguage);
        }
        Ok(s.grammar.clone())
    }

    // ---- queries ---------------------------------------------------------

    pub fn is_empty(&self) -> bool {
        !self.contains_empty() && self.simplified().productions.is_empty()
    }

    /// Membership by CYK over a cached binarized form.
    pub fn accepts(&self, w: &[Symbol]) -> bool {
        if w.is_empty() {
            return self.contains_empty();
        }
        let b = self
            .binarized
            .get_or_init(|| Arc::new(Binarized::build(self.simplified())));
        b.accepts(w)
    }

    /// Shortest member; among those, the lexicographically least.
    pub fn shortest_word(&self) -> Option<Word> {
        if self.contains_empty() {
            return Some(Vec::new());
        }
        let g = self.simplified();
        if g.productions.is_empty() {
            return None;
        }
        let min = g.min_lengths();
        let mut memo: Vec<Option<Arc<Word>>> = vec![None; g.num_nts as usize];
        let by_head = g.by_head();
        Some((*g.lex_least(g.start, &min, &by_head, &mut memo)).clone())
    }

    fn by_head(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.num_nts as usize];
        for (i, p) in self.productions.iter().enumerate() {
            out[p.head as usize].push(i);
        }
        out
    }

    /// Length of the shortest terminal word derivable from each nonterminal
    /// (`usize::MAX` when nonproductive).
    fn min_lengths(&self) -> Vec<usize> {
        let n = self.num_nts as usize;
        let mut min = vec![usize::MAX; n];
        let mut changed = true;
        while changed {
            changed = false;
            for p in &self.productions {
                let mut total = 0usize;
                let mut ok = true;
                for s in &p.body {
                    match *s {
                        GSym::T(_) => total += 1,
                        GSym::N(m) => {
                            let l = min[m as usize];
                            if l == usize::MAX {
                                ok = false;
                                break;
                            }
                            total += l;
                        }
                    }
                }
                if ok && total < min[p.head as usize] {
                    min[p.head as usize] = total;
                    changed = true;
                }
            }
        }
        min
    }

    // Valid only on ε-free, unit-free grammars: every nonterminal inside a
    // minimal production then has a strictly smaller minimum length.
    fn lex_least(
        &self,
        x: NtId,
        min: &[usize],
        by_head: &[Vec<usize>],
        memo: &mut Vec<Option<Arc<Word>>>,
    ) -> Arc<Word> {
        if let Some(w) = &memo[x as usize] {
            return w.clone();
        }
        let target = min[x as usize];
        let mut best: Option<Word> = None;
        for &pi in &by_head[x as usize] {
            let body = &self.productions[pi].body;
            let len: Option<usize> = body.iter().try_fold(0usize, |acc, s| match *s {
                GSym::T(_) => Some(acc + 1),
                GSym::N(m) => (min[m as usize] != usize::MAX).then(|| acc + min[m as usize]),
            });
            if len != Some(target) {
                continue;
            }
            let mut w = Vec::with_capacity(target);
            for s in body {
                match *s {
                    GSym::T(a) => w.push(a),
                    GSym::N(m) => w.extend_from_slice(&self.lex_least(m, min, by_head, memo)),
                }
            }
            if best.as_ref().is_none_or(|b| w < *b) {
                best = Some(w);
            }
        }
        let w = Arc::new(best.expect("productive nonterminal has a minimal production"));
        memo[x as usize] = Some(w.clone());
        w
    }

    /// All members of length at most `max_len`.
    pub fn words_up_to(&self, max_len: usize) -> BTreeSet<Word> {
        let g = self.simplified();
        let n = g.num_nts as usize;
        let mut sets: Vec<BTreeSet<Word>> = vec![BTreeSet::new(); n];
        let mut changed = true;
        while changed {
            changed = false;
            for p in &g.productions {
                let mut partial: Vec<Word> = vec![Vec::new()];
                for s in &p.body {
                    let mut next = Vec::new();
                    match *s {
                        GSym::T(a) => {
                            for mut w in partial {
                                if w.len() < max_len {
                                    w.push(a);
                                    next.push(w);
                                }
                            }
                        }
                        GSym::N(m) => {
                            for w in &partial {
                                for v in &sets[m as usize] {
                                    if w.len() + v.len() <= max_len {
                                        let mut x = w.clone();
                                        x.extend_from_slice(v);
                                        next.push(x);
                                    }
                                }
                            }
                        }
                    }
                    partial = next;
                    if partial.is_empty() {
                        break;
                    }
                }
                for w in partial {
                    if sets[p.head as usize].insert(w) {
                        changed = true;
                    }
                }
            }
        }
        let mut out = std::mem::take(&mut sets[g.start as usize]);
        if self.contains_empty() {
            out.insert(Vec::new());
        }
        out
    }

    // ---- constructions ---------------------------------------------------

    /// Grammar for the reversed language.
    pub fn reverse(&self) -> Cfg {
        let mut g = Cfg::new(self.num_nts, self.start, self.terminals.iter().copied());
        for p in &self.productions {
            g.productions.push(Production {
                head: p.head,
                body: p.body.iter().rev().copied().collect(),
            });
        }
        g
    }

    pub fn union(&self, other: &Cfg) -> Cfg {
        let off = self.num_nts;
        let start = off + other.num_nts;
        let mut g = Cfg::new(start + 1, start, self.terminals.union(&other.terminals).copied());
        g.productions = self.productions.clone();
        for p in &other.productions {
            g.productions.push(Production {
                head: p.head + off,
                body: shift(&p.body, off),
            });
        }
        g.productions.push(Production { head: start, body: vec![GSym::N(self.start)] });
        g.productions.push(Production { head: start, body: vec![GSym::N(other.start + off)] });
        g
    }

    /// Relabels terminals through `f`.
    pub fn map_terminals(&self, f: impl Fn(Symbol) -> Symbol) -> Cfg {
        let mut g = Cfg::new(self.num_nts, self.start, self.terminals.iter().map(|&a| f(a)));
        for p in &self.productions {
            g.productions.push(Production {
                head: p.head,
                body: p
                    .body
                    .iter()
                    .map(|s| match *s {
                        GSym::T(a) => GSym::T(f(a)),
                        n => n,
                    })
                    .collect(),
            });
        }
        g
    }

    /// Bar-Hillel intersection with a regular language; the result is
    /// simplified.
    pub fn intersect_nfa(&self, n: &Nfa) -> Cfg {
        product::apply(self, &Machine::from_nfa(n), n.alphabet().iter().copied())
    }
}

fn shift(body: &[GSym], off: u32) -> Vec<GSym> {
    body.iter()
        .map(|s| match *s {
            GSym::N(n) => GSym::N(n + off),
            t => t,
        })
        .collect()
}

// ---- simplification -------------------------------------------------------

fn productive_set(num_nts: usize, prods: &[Production]) -> Vec<bool> {
    let mut productive = vec![false; num_nts];
    // Count of not-yet-productive nonterminal occurrences per production.
    let mut pending: Vec<usize> = Vec::with_capacity(prods.len());
    let mut occurs: Vec<Vec<usize>> = vec![Vec::new(); num_nts];
    let mut queue = VecDeque::new();
    for (i, p) in prods.iter().enumerate() {
        let mut c = 0;
        for s in &p.body {
            if let GSym::N(m) = *s {
                occurs[m as usize].push(i);
                c += 1;
            }
        }
        pending.push(c);
        if c == 0 && !productive[p.head as usize] {
            productive[p.head as usize] = true;
            queue.push_back(p.head);
        }
    }
    while let Some(x) = queue.pop_front() {
        for &i in &occurs[x as usize] {
            pending[i] -= 1;
            let h = prods[i].head as usize;
            if pending[i] == 0 && !productive[h] {
                productive[h] = true;
                queue.push_back(h as NtId);
            }
        }
    }
    productive
}

fn nullable_set(num_nts: usize, prods: &[Production]) -> Vec<bool> {
    let mut nullable = vec![false; num_nts];
    let mut pending: Vec<usize> = Vec::with_capacity(prods.len());
    let mut occurs: Vec<Vec<usize>> = vec![Vec::new(); num_nts];
    let mut queue = VecDeque::new();
    for (i, p) in prods.iter().enumerate() {
        let has_t = p.body.iter().any(|s| matches!(s, GSym::T(_)));
        let c = if has_t {
            usize::MAX
        } else {
            for s in &p.body {
                if let GSym::N(m) = *s {
                    occurs[m as usize].push(i);
                }
            }
            p.body.len()
        };
        pending.push(c);
        if c == 0 && !nullable[p.head as usize] {
            nullable[p.head as usize] = true;
            queue.push_back(p.head);
        }
    }
    while let Some(x) = queue.pop_front() {
        for &i in &occurs[x as usize] {
            pending[i] -= 1;
            let h = prods[i].head as usize;
            if pending[i] == 0 && !nullable[h] {
                nullable[h] = true;
                queue.push_back(h as NtId);
            }
        }
    }
    nullable
}

/// Keeps productive, reachable nonterminals, renumbered in breadth-first
/// order from the start symbol. Productions are deduplicated and sorted.
fn prune(num_nts: usize, start: NtId, prods: Vec<Production>) -> (u32, Vec<Production>) {
    let productive = productive_set(num_nts, &prods);
    let prods: Vec<Production> = prods
        .into_iter()
        .filter(|p| {
            productive[p.head as usize]
                && p.body.iter().all(|s| match *s {
                    GSym::N(m) => productive[m as usize],
                    GSym::T(_) => true,
                })
        })
        .collect();
    let mut by_head: Vec<Vec<usize>> = vec![Vec::new(); num_nts];
    for (i, p) in prods.iter().enumerate() {
        by_head[p.head as usize].push(i);
    }
    let mut ids: Vec<Option<NtId>> = vec![None; num_nts];
    let mut next = 0u32;
    ids[start as usize] = Some(0);
    next += 1;
    let mut queue = VecDeque::from([start]);
    while let Some(x) = queue.pop_front() {
        for &i in &by_head[x as usize] {
            for s in &prods[i].body {
                if let GSym::N(m) = *s {
                    if ids[m as usize].is_none() {
                        ids[m as usize] = Some(next);
                        next += 1;
                        queue.push_back(m);
                    }
                }
            }
        }
    }
    let mut out: Vec<Production> = prods
        .into_iter()
        .filter_map(|p| {
            let head = ids[p.head as usize]?;
            let body = p
                .body
                .iter()
                .map(|s| match *s {
                    GSym::N(m) => GSym::N(ids[m as usize].expect("reachable")),
                    t => t,
                })
                .collect();
            Some(Production { head, body })
        })
        .collect();
    out.sort();
    out.dedup();
    (next, out)
}

fn simplify(g: &Cfg) -> Simplified {
    let n = g.num_nts as usize;
    let (n1, prods) = prune(n, g.start, g.productions.clone());
    let nullable = nullable_set(n1 as usize, &prods);
    let has_empty = !prods.is_empty() && nullable[0];

    // ε-removal: every way of dropping nullable occurrences.
    let mut eps_free: HashSet<Production> = HashSet::new();
    for p in &prods {
        let mut variants: Vec<Vec<GSym>> = vec![Vec::new()];
        for s in &p.body {
            let drop = matches!(*s, GSym::N(m) if nullable[m as usize]);
            let mut next = Vec::with_capacity(variants.len() * 2);
            for v in variants {
                if drop {
                    next.push(v.clone());
                }
                let mut v = v;
                v.push(*s);
                next.push(v);
            }
            variants = next;
        }
        for body in variants {
            if !body.is_empty() && !(body.len() == 1 && body[0] == GSym::N(p.head)) {
                eps_free.insert(Production { head: p.head, body });
            }
        }
    }

    // Unit removal: each nonterminal inherits the non-unit productions of
    // everything it reaches through unit chains.
    let mut unit: Vec<Vec<NtId>> = vec![Vec::new(); n1 as usize];
    let mut proper: Vec<Vec<Vec<GSym>>> = vec![Vec::new(); n1 as usize];
    let mut sorted: Vec<Production> = eps_free.into_iter().collect();
    sorted.sort();
    for p in sorted {
        match p.body.as_slice() {
            [GSym::N(m)] => unit[p.head as usize].push(*m),
            _ => proper[p.head as usize].push(p.body),
        }
    }
    let mut out = Vec::new();
    for x in 0..n1 {
        let mut seen = vec![x];
        let mut stack = vec![x];
        while let Some(y) = stack.pop() {
            for &z in &unit[y as usize] {
                if !seen.contains(&z) {
                    seen.push(z);
                    stack.push(z);
                }
            }
        }
        for y in seen {
            for body in &proper[y as usize] {
                out.push(Production { head: x, body: body.clone() });
            }
        }
    }
    let (n2, out) = prune(n1 as usize, 0, out);
    let mut grammar = Cfg::new(n2.max(1), 0, g.terminals.iter().copied());
    grammar.productions = out;
    Simplified { grammar, has_empty }
}

// ---- membership -----------------------------------------------------------

/// Binary normal form: rules `X → a` and `X → Y Z`.
#[derive(Debug)]
struct Binarized {
    by_terminal: HashMap<Symbol, Vec<NtId>>,
    by_left: HashMap<NtId, Vec<(NtId, NtId)>>,
    by_right: HashMap<NtId, Vec<(NtId, NtId)>>,
    start: NtId,
}

impl Binarized {
    fn build(g: &Cfg) -> Self {
        let mut next = g.num_nts;
        let mut term_nt: HashMap<Symbol, NtId> = HashMap::new();
        let mut by_terminal: HashMap<Symbol, Vec<NtId>> = HashMap::new();
        let mut pairs: Vec<(NtId, NtId, NtId)> = Vec::new();
        for p in &g.productions {
            if let [GSym::T(a)] = p.body.as_slice() {
                by_terminal.entry(*a).or_default().push(p.head);
                continue;
            }
            let syms: Vec<NtId> = p
                .body
                .iter()
                .map(|s| match *s {
                    GSym::N(m) => m,
                    GSym::T(a) => *term_nt.entry(a).or_insert_with(|| {
                        let t = next;
                        next += 1;
                        by_terminal.entry(a).or_default().push(t);
                        t
                    }),
                })
                .collect();
            // X → s0 s1 ... sk  becomes  X → s0 R1, R1 → s1 R2, ...
            let mut head = p.head;
            for &x in &syms[..syms.len() - 2] {
                let r = next;
                next += 1;
                pairs.push((head, x, r));
                head = r;
            }
            pairs.push((head, syms[syms.len() - 2], syms[syms.len() - 1]));
        }
        let mut by_left: HashMap<NtId, Vec<(NtId, NtId)>> = HashMap::new();
        let mut by_right: HashMap<NtId, Vec<(NtId, NtId)>> = HashMap::new();
        for (x, y, z) in pairs {
            by_left.entry(y).or_default().push((x, z));
            by_right.entry(z).or_default().push((x, y));
        }
        Binarized { by_terminal, by_left, by_right, start: g.start }
    }

    /// Agenda-driven sparse CYK; each item `(i, X, j)` says X derives
    /// `w[i..j]`.
    fn accepts(&self, w: &[Symbol]) -> bool {
        let n = w.len();
        let mut chart: HashSet<(usize, NtId, usize)> = HashSet::new();
        let mut ends_from: HashMap<(usize, NtId), Vec<usize>> = HashMap::new();
        let mut starts_to: HashMap<(usize, NtId), Vec<usize>> = HashMap::new();
        let mut agenda: Vec<(usize, NtId, usize)> = Vec::new();
        for (i, a) in w.iter().enumerate() {
            for &x in self.by_terminal.get(a).map(Vec::as_slice).unwrap_or(&[]) {
                if chart.insert((i, x, i + 1)) {
                    agenda.push((i, x, i + 1));
                }
            }
        }
        while let Some((i, y, j)) = agenda.pop() {
            if i == 0 && j == n && y == self.start {
                return true;
            }
            ends_from.entry((i, y)).or_default().push(j);
            starts_to.entry((j, y)).or_default().push(i);
            let mut found = Vec::new();
            if let Some(rules) = self.by_left.get(&y) {
                for &(x, z) in rules {
                    if let Some(ks) = ends_from.get(&(j, z)) {
                        found.extend(ks.iter().map(|&k| (i, x, k)));
                    }
                }
            }
            if let Some(rules) = self.by_right.get(&y) {
                for &(x, z) in rules {
                    if let Some(hs) = starts_to.get(&(i, z)) {
                        found.extend(hs.iter().map(|&h| (h, x, j)));
                    }
                }
            }
            for item in found {
                if chart.insert(item) {
                    agenda.push(item);
                }
            }
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const A: Symbol = Symbol(2);
    const B: Symbol = Symbol(3);

    fn t(a: Symbol) -> GSym {
        GSym::T(a)
    }

    fn all_words(alpha: &[Symbol], max: usize) -> Vec<Word> {
        let mut out = vec![vec![]];
        let mut layer: Vec<Word> = vec![vec![]];
        for _ in 0..max {
            layer = layer
                .iter()
                .flat_map(|w| {
                    alpha.iter().map(move |&a| {
                        let mut w2 = w.clone();
                        w2.push(a);
                        w2
                    })
                })
                .collect();
            out.extend(layer.iter().cloned());
        }
        out
    }

    /// O → a O b | a b
    fn anbn() -> Cfg {
        let mut g = Cfg::new(1, 0, [A, B]);
        g.add_production(0, vec![t(A), GSym::N(0), t(B)]);
        g.add_production(0, vec![t(A), t(B)]);
        g
    }

    #[test]
    fn removes_unreachable_nonterminal() {
        let mut g = Cfg::new(2, 0, [A, B]);
        g.add_production(0, vec![t(A), GSym::N(0)]);
        g.add_production(0, vec![t(A)]);
        g.add_production(1, vec![t(B)]);
        let n = g.normalize().unwrap();
        assert_eq!(n.num_nts(), 1);
        for w in all_words(&[A, B], 6) {
            assert_eq!(n.accepts(&w), g.accepts(&w));
        }
    }

    #[test]
    fn collapses_unit_productions() {
        let mut g = Cfg::new(2, 0, [A]);
        g.add_production(0, vec![GSym::N(1)]);
        g.add_production(1, vec![t(A)]);
        let n = g.normalize().unwrap();
        assert_eq!(n.productions(), &[Production { head: 0, body: vec![t(A)] }]);
    }

    #[test]
    fn strict_normalize_errors() {
        let mut g = Cfg::new(1, 0, [A]);
        g.add_production(0, vec![t(A), GSym::N(0)]);
        assert_eq!(g.normalize(), Err(LangError::EmptyLanguage));
        let mut h = Cfg::new(1, 0, [A]);
        h.add_production(0, vec![]);
        h.add_production(0, vec![t(A)]);
        assert_eq!(h.normalize(), Err(LangError::EpsilonInLanguage));
    }

    #[test]
    fn shortest_word_of_anbn() {
        assert_eq!(anbn().shortest_word(), Some(vec![A, B]));
        let mut g = Cfg::new(1, 0, [A]);
        g.add_production(0, vec![t(A), GSym::N(0)]);
        assert_eq!(g.shortest_word(), None);
    }

    #[test]
    fn shortest_prefers_lex_least() {
        // O → X Y ; X → b | a ; Y → b a | a a | b
        let mut g = Cfg::new(3, 0, [A, B]);
        g.add_production(0, vec![GSym::N(1), GSym::N(2)]);
        g.add_production(1, vec![t(B)]);
        g.add_production(1, vec![t(A)]);
        g.add_production(2, vec![t(B), t(A)]);
        g.add_production(2, vec![t(A), t(A)]);
        g.add_production(2, vec![t(B)]);
        assert_eq!(g.shortest_word(), Some(vec![A, B]));
    }

    #[test]
    fn membership_with_epsilon_and_cycles() {
        // O → O O | a | ε  (language a*)
        let mut g = Cfg::new(1, 0, [A, B]);
        g.add_production(0, vec![GSym::N(0), GSym::N(0)]);
        g.add_production(0, vec![t(A)]);
        g.add_production(0, vec![]);
        assert!(g.accepts(&[]));
        assert!(g.accepts(&[A, A, A]));
        assert!(!g.accepts(&[A, B]));
        assert_eq!(g.shortest_word(), Some(vec![]));
    }

    #[test]
    fn enumeration_matches_membership() {
        let g = anbn();
        let listed = g.words_up_to(6);
        for w in all_words(&[A, B], 6) {
            assert_eq!(listed.contains(&w), g.accepts(&w), "{w:?}");
        }
        assert_eq!(listed.len(), 3);
    }

    #[test]
    fn reverse_and_union() {
        let g = anbn();
        let r = g.reverse();
        assert!(r.accepts(&[B, B, A, A]));
        let u = g.union(&Cfg::from_words(&[vec![B]]));
        assert!(u.accepts(&[B]) && u.accepts(&[A, B]) && !u.accepts(&[A]));
    }

    #[test]
    fn from_nfa_roundtrip() {
        let n = Nfa::plus([A]).concat(&Nfa::word(&[B]));
        let g = Cfg::from_nfa(&n);
        for w in all_words(&[A, B], 5) {
            assert_eq!(g.accepts(&w), n.accepts(&w));
        }
    }
}
