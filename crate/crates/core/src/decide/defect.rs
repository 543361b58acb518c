use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::lang::{reversed, Cfg, FreeGroupWord, GSym, Nfa, NtId, Sign, Symbol, Word};

/// Evidence that a language inside `A*#2A*` has a member `x#2w^rev` with
/// `x ≠ w`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Defect {
    /// A member with `x ≠ w`, when one of bounded length was built.
    pub witness: Option<Word>,
    /// Which structural check fired.
    pub certificate: String,
}

/// Whether `w = x#2y` with `x ≠ y^rev`.
fn is_defective(w: &[Symbol]) -> bool {
    match w.iter().position(|&a| a == Symbol::SEP2) {
        Some(k) => w[..k].iter().ne(w[k + 1..].iter().rev()),
        None => false,
    }
}

/// Decides whether `g` has a member `x#2w^rev` with `x ≠ w`.
///
/// `g` must generate a subset of `A*#2A*`. Witness words longer than
/// `witness_len` are withheld; the certificate is always reported.
pub fn palindromic_defect(g: &Cfg, witness_len: usize) -> Result<Option<Defect>> {
    let letters: Vec<Symbol> = g.terminals().iter().copied().filter(|&a| a != Symbol::SEP2).collect();
    let shape = Nfa::concat_all(&[
        &Nfa::star(letters.iter().copied()),
        &Nfa::word(&[Symbol::SEP2]),
        &Nfa::star(letters.iter().copied()),
    ]);
    let outside = shape.complement_over(letters.iter().copied().chain([Symbol::SEP2]));
    if g.intersect_nfa(&outside).shortest_word().is_some() {
        return Err(Error::Precondition("grammar has members outside A*#2A*".into()));
    }
    let g = g.simplified();
    if g.productions().is_empty() {
        return Ok(None);
    }
    let analysis = Analysis::new(g);
    let found = analysis.self_embedding().or_else(|| analysis.spine_inconsistency());
    Ok(found.map(|(certificate, candidates)| {
        let witness = shortest_defective_member(g, witness_len).or_else(|| {
            candidates
                .into_iter()
                .find(|w| is_defective(w) && g.accepts(w))
                .filter(|w| w.len() <= witness_len)
        });
        Defect { witness, certificate }
    }))
}

/// Members enumerated per length before the search gives up.
const SEARCH_BUDGET: usize = 20_000;

/// The shortest-lex defective member of length at most `max_len`, by
/// enumeration. `None` when there is none or the language is too large to
/// enumerate.
fn shortest_defective_member(g: &Cfg, max_len: usize) -> Option<Word> {
    for len in 1..=max_len {
        let words = g.words_up_to(len);
        if let Some(w) = words.iter().filter(|w| w.len() == len).find(|w| is_defective(w)) {
            return Some(w.clone());
        }
        if words.len() > SEARCH_BUDGET {
            return None;
        }
    }
    None
}

struct Analysis<'a> {
    g: &'a Cfg,
    /// Nonterminals deriving words that contain `#2`.
    spine: Vec<bool>,
    shortest: Vec<Word>,
    /// `(x, y)` with `start ⇒* x X y`, short.
    context: Vec<(Word, Word)>,
    by_head: Vec<Vec<&'a [GSym]>>,
}

impl<'a> Analysis<'a> {
    fn new(g: &'a Cfg) -> Self {
        let n = g.num_nts() as usize;
        let mut by_head: Vec<Vec<&[GSym]>> = vec![Vec::new(); n];
        for p in g.productions() {
            by_head[p.head as usize].push(&p.body);
        }
        let mut spine = vec![false; n];
        loop {
            let mut grew = false;
            for p in g.productions() {
                if !spine[p.head as usize]
                    && p.body.iter().any(|s| match *s {
                        GSym::T(a) => a == Symbol::SEP2,
                        GSym::N(x) => spine[x as usize],
                    })
                {
                    spine[p.head as usize] = true;
                    grew = true;
                }
            }
            if !grew {
                break;
            }
        }
        let shortest: Vec<Word> = (0..n as NtId)
            .map(|x| g.with_start(x).shortest_word().expect("no useless nonterminals"))
            .collect();
        let mut a = Analysis { g, spine, shortest, context: Vec::new(), by_head };
        a.context = a.contexts();
        a
    }

    fn expand(&self, part: &[GSym]) -> Word {
        let mut out = Vec::new();
        for s in part {
            match *s {
                GSym::T(a) => out.push(a),
                GSym::N(x) => out.extend_from_slice(&self.shortest[x as usize]),
            }
        }
        out
    }

    fn contexts(&self) -> Vec<(Word, Word)> {
        let n = self.g.num_nts() as usize;
        let mut ctx: Vec<Option<(Word, Word)>> = vec![None; n];
        let start = self.g.start() as usize;
        ctx[start] = Some((Vec::new(), Vec::new()));
        let mut queue = VecDeque::from([start]);
        while let Some(x) = queue.pop_front() {
            let (left, right) = ctx[x].clone().expect("queued with context");
            for body in &self.by_head[x] {
                for (j, s) in body.iter().enumerate() {
                    if let GSym::N(y) = *s {
                        if ctx[y as usize].is_none() {
                            let mut l = left.clone();
                            l.extend(self.expand(&body[..j]));
                            let mut r = self.expand(&body[j + 1..]);
                            r.extend_from_slice(&right);
                            ctx[y as usize] = Some((l, r));
                            queue.push_back(y as usize);
                        }
                    }
                }
            }
        }
        ctx.into_iter().map(|c| c.expect("every nonterminal is reachable")).collect()
    }

    /// A nonterminal off the spine that derives a sentential form
    /// containing itself; pumping it once changes exactly one side.
    fn self_embedding(&self) -> Option<(String, Vec<Word>)> {
        let n = self.g.num_nts() as usize;
        // parent edge: (previous nonterminal, production body, position)
        for root in (0..n).filter(|&x| !self.spine[x]) {
            let mut parent: Vec<Option<(usize, &[GSym], usize)>> = vec![None; n];
            let mut seen = vec![false; n];
            let mut queue = VecDeque::from([root]);
            seen[root] = true;
            let mut closing: Option<(usize, &[GSym], usize)> = None;
            'bfs: while let Some(x) = queue.pop_front() {
                for body in &self.by_head[x] {
                    for (j, s) in body.iter().enumerate() {
                        if let GSym::N(y) = *s {
                            let y = y as usize;
                            if y == root {
                                closing = Some((x, body, j));
                                break 'bfs;
                            }
                            if !seen[y] {
                                seen[y] = true;
                                parent[y] = Some((x, body, j));
                                queue.push_back(y);
                            }
                        }
                    }
                }
            }
            let Some(mut step) = closing else { continue };
            // Walk back from the closing edge to the root, wrapping the
            // pumped context around the inner one.
            let (mut u, mut v) = (Vec::new(), Vec::new());
            loop {
                let (x, body, j) = step;
                let mut u2 = self.expand(&body[..j]);
                u2.extend(u);
                u = u2;
                v.extend(self.expand(&body[j + 1..]));
                match parent[x] {
                    Some(p) => step = p,
                    None => break,
                }
            }
            let (x, y) = &self.context[root];
            let t = &self.shortest[root];
            let plain = [x.as_slice(), t, y].concat();
            let pumped = [x.as_slice(), &u, t, &v, y].concat();
            return Some((
                format!("nonterminal {root} off the #2 spine embeds itself"),
                vec![plain, pumped],
            ));
        }
        None
    }

    /// Finite word set of a nonterminal off the spine.
    fn finite_words(&self, x: usize, memo: &mut HashMap<usize, BTreeSet<Word>>) -> BTreeSet<Word> {
        if let Some(ws) = memo.get(&x) {
            return ws.clone();
        }
        let mut out = BTreeSet::new();
        for body in &self.by_head[x] {
            out.extend(self.part_words(body, memo));
        }
        memo.insert(x, out.clone());
        out
    }

    fn part_words(&self, part: &[GSym], memo: &mut HashMap<usize, BTreeSet<Word>>) -> BTreeSet<Word> {
        let mut acc: BTreeSet<Word> = BTreeSet::from([Vec::new()]);
        for s in part {
            let options = match *s {
                GSym::T(a) => BTreeSet::from([vec![a]]),
                GSym::N(y) => self.finite_words(y as usize, memo),
            };
            acc = acc
                .iter()
                .flat_map(|w| options.iter().map(move |o| [w.as_slice(), o].concat()))
                .collect();
        }
        acc
    }

    /// Assigns each spine nonterminal the free-group value `x⁻¹w` forced by
    /// the context `x … w^rev` it was reached through, and reports the
    /// first production that forces a different value or, at `#2`, a
    /// nontrivial one.
    fn spine_inconsistency(&self) -> Option<(String, Vec<Word>)> {
        let n = self.g.num_nts() as usize;
        let mut memo = HashMap::new();
        let mut value: Vec<Option<FreeGroupWord>> = vec![None; n];
        let mut ctx: Vec<(Word, Word)> = vec![(Vec::new(), Vec::new()); n];
        let start = self.g.start() as usize;
        value[start] = Some(FreeGroupWord::identity());
        let mut queue = VecDeque::from([start]);
        let mut terminal: Vec<(usize, BTreeSet<Word>, BTreeSet<Word>)> = Vec::new();
        while let Some(x) = queue.pop_front() {
            let phi = value[x].clone().expect("queued with a value");
            for body in &self.by_head[x] {
                let k = body
                    .iter()
                    .position(|s| match *s {
                        GSym::T(a) => a == Symbol::SEP2,
                        GSym::N(y) => self.spine[y as usize],
                    })
                    .expect("spine production has a spine symbol");
                let pre = self.part_words(&body[..k], &mut memo);
                let post = self.part_words(&body[k + 1..], &mut memo);
                let GSym::N(y) = body[k] else {
                    terminal.push((x, pre, post));
                    continue;
                };
                let y = y as usize;
                for p in &pre {
                    for s in &post {
                        let z = FreeGroupWord::embed(p, Sign::Negative)
                            .mul(&phi)
                            .mul(&FreeGroupWord::embed(&reversed(s), Sign::Positive));
                        match &value[y] {
                            None => {
                                value[y] = Some(z);
                                ctx[y] = ([ctx[x].0.as_slice(), p].concat(), [s.as_slice(), &ctx[x].1].concat());
                                queue.push_back(y);
                            }
                            Some(old) if *old != z => {
                                let t = &self.shortest[y];
                                let first = [ctx[y].0.as_slice(), t, &ctx[y].1].concat();
                                let second = [ctx[x].0.as_slice(), p, t, s, &ctx[x].1].concat();
                                return Some((
                                    format!("nonterminal {y} is reached with two different free-group values"),
                                    vec![first, second],
                                ));
                            }
                            Some(_) => {}
                        }
                    }
                }
            }
        }
        for (x, pre, post) in terminal {
            let phi = value[x].clone().expect("spine nonterminals are reached");
            for p in &pre {
                for s in &post {
                    let z = FreeGroupWord::embed(p, Sign::Negative)
                        .mul(&phi)
                        .mul(&FreeGroupWord::embed(&reversed(s), Sign::Positive));
                    if !z.is_identity() {
                        let w = [ctx[x].0.as_slice(), p, &[Symbol::SEP2], s, &ctx[x].1].concat();
                        return Some((format!("nonterminal {x} closes the #2 spine off-centre"), vec![w]));
                    }
                }
            }
        }
        None
    }
}
