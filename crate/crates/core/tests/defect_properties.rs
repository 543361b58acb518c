//! The palindromic-defect analysis against enumeration of small grammars.

mod common;

use proptest::prelude::*;
use whsg::decide::palindromic_defect;
use whsg::lang::GSym;
use whsg::{Cfg, Symbol};

const A: Symbol = Symbol(2);
const B: Symbol = Symbol(3);
const MAX: usize = 12;

/// `head -> left (spine | #2) right`
type SpineProd = (u32, Vec<u8>, Option<u32>, Vec<u8>);

/// Spine nonterminals `0..spines` derive `x#2y`; the rest derive plain
/// words. Every production of a spine nonterminal has exactly one spine
/// nonterminal or `#2` in its body, so members lie in `A*#2A*`.
fn grammar(spines: u32, spine_prods: &[SpineProd], plain: &[(Vec<u8>, bool)]) -> Cfg {
    let plain_nt = spines;
    let mut g = Cfg::new(spines + 1, 0, [A, B, Symbol::SEP2]);
    let side = |xs: &[u8]| -> Vec<GSym> {
        xs.iter()
            .map(|&x| match x {
                0 => GSym::T(A),
                1 => GSym::T(B),
                _ => GSym::N(plain_nt),
            })
            .collect()
    };
    for (head, left, next, right) in spine_prods {
        let mut body = side(left);
        body.push(match next {
            Some(n) => GSym::N(n % spines),
            None => GSym::T(Symbol::SEP2),
        });
        body.extend(side(right));
        g.add_production(head % spines, body);
    }
    for (w, recurse) in plain {
        let mut body: Vec<GSym> = w.iter().map(|&x| GSym::T(if x == 0 { A } else { B })).collect();
        if *recurse {
            body.push(GSym::N(plain_nt));
        }
        g.add_production(plain_nt, body);
    }
    g
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn defect_verdict_matches_enumeration(
        spines in 1u32..3,
        spine_prods in prop::collection::vec(
            (0u32..3, prop::collection::vec(0u8..3, 0..3), prop::option::of(0u32..3), prop::collection::vec(0u8..3, 0..3)),
            1..6,
        ),
        plain in prop::collection::vec((prop::collection::vec(0u8..2, 1..3), any::<bool>()), 1..3),
    ) {
        let g = grammar(spines, &spine_prods, &plain);
        let members = common::cfg_members(&g, MAX);
        // shortlex order: the first defective member found by length
        let bad = members
            .iter()
            .filter(|w| common::is_defective(w))
            .min_by(|u, v| u.len().cmp(&v.len()).then(u.cmp(v)));
        match palindromic_defect(&g, MAX).unwrap() {
            None => prop_assert!(bad.is_none(), "missed defect {:?}", bad),
            Some(d) => {
                if let Some(w) = &d.witness {
                    prop_assert!(g.accepts(w));
                    prop_assert!(common::is_defective(w));
                }
                prop_assert_eq!(d.witness.as_ref(), bad, "{}", d.certificate);
            }
        }
    }
}
