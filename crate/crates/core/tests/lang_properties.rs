//! Language-kernel invariants checked against direct enumeration.

mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;
use whsg::lang::{GSym, Sign};
use whsg::{Cfg, FreeGroupWord, Nfa, Symbol, Transducer, Word};

const A: Symbol = Symbol(2);
const B: Symbol = Symbol(3);
const AB: [Symbol; 2] = [A, B];
const MAX: usize = 6;

fn all_words() -> Vec<Word> {
    let mut w = vec![Vec::new()];
    w.extend(common::words_up_to(&AB, MAX));
    w
}

fn sym(k: u8) -> Symbol {
    if k == 0 { A } else { B }
}

prop_compose! {
    fn arb_nfa()(
        states in 1u32..5,
        edges in prop::collection::vec((0u32..5, 0u8..2, 0u32..5), 0..10),
        accepting in prop::collection::vec(0u32..5, 1..3),
    ) -> Nfa {
        let mut n = Nfa::new(AB);
        for _ in 0..states {
            n.add_state();
        }
        n.set_initial(0);
        for (f, a, t) in edges {
            n.add_transition(f % states, sym(a), t % states);
        }
        for q in accepting {
            n.set_accepting(q % states);
        }
        n
    }
}

// Grammar symbols: terminals 0..2, nonterminals 2..5.
prop_compose! {
    fn arb_cfg()(
        nts in 1u32..4,
        prods in prop::collection::vec((0u32..4, prop::collection::vec(0u8..5, 0..4)), 1..8),
    ) -> Cfg {
        let mut g = Cfg::new(nts, 0, AB);
        for (h, body) in prods {
            let body = body
                .into_iter()
                .map(|x| if x < 2 { GSym::T(sym(x)) } else { GSym::N((x as u32 - 2) % nts) })
                .collect();
            g.add_production(h % nts, body);
        }
        g
    }
}

// Non-erasing transducers: every edge writes at least one symbol, so
// images of short words are short and enumeration is exhaustive.
prop_compose! {
    fn arb_transducer()(
        states in 1u32..4,
        edges in prop::collection::vec(
            (0u32..4, prop::option::of(0u8..2), prop::collection::vec(0u8..2, 1..3), 0u32..4),
            1..8,
        ),
        accepting in prop::collection::vec(0u32..4, 1..3),
    ) -> (Transducer, BTreeSet<u32>) {
        let mut t = Transducer::new();
        for _ in 1..states {
            t.add_state();
        }
        for (f, i, o, to) in edges {
            t.add_edge(f % states, i.map(sym), o.into_iter().map(sym).collect(), to % states);
        }
        let accepting: BTreeSet<u32> = accepting.into_iter().map(|q| q % states).collect();
        for &q in &accepting {
            t.set_accepting(q);
        }
        (t.with_output_alphabet(AB), accepting)
    }
}

/// Outputs of length at most `MAX` on input `u`.
fn transducer_image(t: &Transducer, accepting: &BTreeSet<u32>, u: &[Symbol]) -> BTreeSet<Word> {
    let mut out = BTreeSet::new();
    let mut stack = vec![(t.initial(), 0usize, Vec::new())];
    while let Some((q, i, w)) = stack.pop() {
        if i == u.len() && accepting.contains(&q) {
            out.insert(w.clone());
        }
        for e in t.edges().iter().filter(|e| e.from == q) {
            let next = match e.input {
                None => i,
                Some(a) if i < u.len() && u[i] == a => i + 1,
                Some(_) => continue,
            };
            let v = [w.as_slice(), &e.output].concat();
            if v.len() <= MAX {
                stack.push((e.to, next, v));
            }
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn nfa_algebra_matches_sets(x in arb_nfa(), y in arb_nfa()) {
        let inter = x.intersection(&y);
        let union = x.union(&y);
        let cat = x.concat(&y);
        let rev = x.reverse();
        let comp = x.complement_over(AB);
        for w in all_words() {
            let (in_x, in_y) = (x.accepts(&w), y.accepts(&w));
            prop_assert_eq!(inter.accepts(&w), in_x && in_y);
            prop_assert_eq!(union.accepts(&w), in_x || in_y);
            prop_assert_eq!(comp.accepts(&w), !in_x);
            prop_assert_eq!(rev.accepts(&w), x.accepts(&whsg::lang::reversed(&w)));
            let split = (0..=w.len()).any(|k| x.accepts(&w[..k]) && y.accepts(&w[k..]));
            prop_assert_eq!(cat.accepts(&w), split);
        }
    }

    #[test]
    fn nfa_shortest_word_is_least(x in arb_nfa()) {
        let first = all_words().into_iter().find(|w| x.accepts(w));
        match x.shortest_word() {
            Some(w) if w.len() <= MAX => prop_assert_eq!(Some(w), first),
            Some(_) => prop_assert!(first.is_none()),
            None => {
                prop_assert!(first.is_none());
                prop_assert!(x.is_empty());
            }
        }
    }

    #[test]
    fn cfg_membership_matches_derivations(g in arb_cfg()) {
        let members = common::cfg_members(&g, MAX);
        for w in all_words() {
            prop_assert_eq!(g.accepts(&w), members.contains(&w), "{:?}", w);
        }
    }

    #[test]
    fn normalization_preserves_language(g in arb_cfg()) {
        let members = common::cfg_members(&g, MAX);
        let nonempty: BTreeSet<Word> = members.iter().filter(|w| !w.is_empty()).cloned().collect();
        let n = g.simplified();
        for p in n.productions() {
            prop_assert!(!p.body.is_empty());
            prop_assert!(!matches!(p.body.as_slice(), [GSym::N(_)]));
        }
        for w in all_words().into_iter().filter(|w| !w.is_empty()) {
            prop_assert_eq!(n.accepts(&w), nonempty.contains(&w));
        }
        // strict mode rejects ε and the empty language
        let strict_ok = g.normalize().is_ok();
        prop_assert_eq!(strict_ok, !members.contains(&Vec::new()) && !g.is_empty());
    }

    #[test]
    fn cfg_shortest_word_is_least(g in arb_cfg()) {
        let members = common::cfg_members(&g, MAX);
        let least = members.iter().min_by(|u, v| u.len().cmp(&v.len()).then(u.cmp(v))).cloned();
        match g.shortest_word() {
            Some(w) => {
                prop_assert!(g.accepts(&w));
                if w.len() <= MAX {
                    prop_assert_eq!(Some(w), least);
                } else {
                    prop_assert!(least.is_none());
                }
            }
            None => prop_assert!(members.is_empty()),
        }
    }

    #[test]
    fn bar_hillel_matches_sets(g in arb_cfg(), n in arb_nfa()) {
        let members = common::cfg_members(&g, MAX);
        let both = g.intersect_nfa(&n);
        for w in all_words() {
            prop_assert_eq!(both.accepts(&w), members.contains(&w) && n.accepts(&w), "{:?}", w);
        }
    }

    #[test]
    fn transduction_matches_sets(
        (t, accepting) in arb_transducer(),
        g in arb_cfg(),
        n in arb_nfa(),
    ) {
        let from_cfg = t.apply_cfg(&g);
        let from_nfa = t.apply_nfa(&n);
        let mut want_cfg = BTreeSet::new();
        let mut want_nfa = BTreeSet::new();
        let members = common::cfg_members(&g, MAX);
        for u in all_words() {
            let image = transducer_image(&t, &accepting, &u);
            if members.contains(&u) {
                want_cfg.extend(image.iter().cloned());
            }
            if n.accepts(&u) {
                want_nfa.extend(image);
            }
        }
        for w in all_words() {
            prop_assert_eq!(from_cfg.accepts(&w), want_cfg.contains(&w), "cfg {:?}", w);
            prop_assert_eq!(from_nfa.accepts(&w), want_nfa.contains(&w), "nfa {:?}", w);
        }
    }

    #[test]
    fn free_group_reduction_is_confluent(
        letters in prop::collection::vec((0u8..2, any::<bool>()), 0..12),
        order in prop::collection::vec(any::<prop::sample::Index>(), 0..24),
    ) {
        let raw: Vec<(Symbol, Sign)> = letters
            .into_iter()
            .map(|(a, pos)| (sym(a), if pos { Sign::Positive } else { Sign::Negative }))
            .collect();
        let reduced = FreeGroupWord::from_letters(raw.clone());
        // cancel adjacent inverse pairs in an arbitrary order
        let mut w = raw;
        for ix in order {
            let pairs: Vec<usize> = (0..w.len().saturating_sub(1))
                .filter(|&i| w[i].0 == w[i + 1].0 && w[i].1 != w[i + 1].1)
                .collect();
            if pairs.is_empty() {
                break;
            }
            let i = pairs[ix.index(pairs.len())];
            w.drain(i..i + 2);
        }
        while let Some(i) = (0..w.len().saturating_sub(1)).find(|&i| w[i].0 == w[i + 1].0 && w[i].1 != w[i + 1].1) {
            w.drain(i..i + 2);
        }
        prop_assert_eq!(reduced.letters(), w.as_slice());
    }

    #[test]
    fn free_group_axioms(
        x in prop::collection::vec((0u8..2, any::<bool>()), 0..8),
        y in prop::collection::vec((0u8..2, any::<bool>()), 0..8),
        z in prop::collection::vec((0u8..2, any::<bool>()), 0..8),
    ) {
        let mk = |v: Vec<(u8, bool)>| FreeGroupWord::from_letters(
            v.into_iter().map(|(a, p)| (sym(a), if p { Sign::Positive } else { Sign::Negative })),
        );
        let (x, y, z) = (mk(x), mk(y), mk(z));
        prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
        prop_assert!(x.mul(&x.inverse()).is_identity());
        prop_assert!(x.inverse().mul(&x).is_identity());
    }
}

#[test]
fn free_group_examples() {
    let ab = FreeGroupWord::embed(&[A, B], Sign::Positive);
    assert!(ab.mul(&ab.inverse()).is_identity());
    let a_inv = FreeGroupWord::embed(&[A], Sign::Negative);
    assert_eq!(a_inv.mul(&ab).as_positive(), Some(vec![B]));
    // p^-1 · m · q with p = a, m = ab, q = b
    let z = a_inv.mul(&ab).mul(&FreeGroupWord::embed(&[B], Sign::Positive));
    assert_eq!(z.as_positive(), Some(vec![B, B]));
}
