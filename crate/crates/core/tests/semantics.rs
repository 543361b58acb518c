//! Structure, arithmetic and decision-procedure invariants, checked against
//! multiplication tables.

mod common;

use proptest::prelude::*;
use serde_json::Value;
use whsg::decide::{self, GreenRel};
use whsg::oracle::{
    small_tables, structure_from_table, table_decide, table_green, table_representatives, table_value, Property,
};
use whsg::structure::{normalize_generators, parse_structure, structure_to_json, validate_necessary};
use whsg::{fixtures, multiply, represent, word_eq, check_multiply, FiniteSemigroup, WhStructure, Word};

fn corpus() -> Vec<FiniteSemigroup> {
    let mut t = small_tables();
    t.extend(fixtures::named_tables().into_iter().map(|(_, t)| t));
    t
}

/// Representative words of every element of `t` in its generated structure.
fn element_words(t: &FiniteSemigroup, s: &WhStructure) -> Vec<Word> {
    table_representatives(t)
        .into_iter()
        .map(|w| w.expect("generated").into_iter().map(|k| s.alphabet()[k]).collect())
        .collect()
}

#[test]
fn word_eq_matches_table_values() {
    for t in corpus() {
        let s = structure_from_table(&t).unwrap();
        let elems = element_words(&t, &s);
        let max = if s.alphabet().len() <= 2 { 5 } else { 4 };
        for w in common::words_up_to(s.alphabet(), max) {
            let value = table_value(&t, &s, &w);
            let r = represent(&s, &w).unwrap();
            assert!(s.in_reps(&r));
            assert_eq!(table_value(&t, &s, &r), value);
            for (x, e) in elems.iter().enumerate() {
                assert_eq!(word_eq(&s, &w, e).unwrap(), x == value, "{}", s.display(&w));
            }
        }
    }
}

#[test]
fn word_eq_is_an_equivalence() {
    for s in [fixtures::null3(), fixtures::z2(), fixtures::sl2(), fixtures::free2(), fixtures::rb22()] {
        let words = common::words_up_to(s.alphabet(), 3);
        let eq: Vec<Vec<bool>> = words
            .iter()
            .map(|u| words.iter().map(|v| word_eq(&s, u, v).unwrap()).collect())
            .collect();
        let n = words.len();
        for i in 0..n {
            assert!(eq[i][i]);
            for j in 0..n {
                assert_eq!(eq[i][j], eq[j][i]);
                if eq[i][j] {
                    assert_eq!(eq[i], eq[j], "transitivity at {} {}", s.display(&words[i]), s.display(&words[j]));
                }
            }
        }
    }
}

#[test]
fn word_eq_on_the_seven_letter_monoid() {
    // letter names double as element names of the table
    let s = fixtures::rees();
    let t = fixtures::rees_table();
    let value = |w: &Word| {
        let xs: Vec<usize> = w.iter().map(|&a| t.index(s.symbols().name(a)).unwrap()).collect();
        t.eval(&xs)
    };
    let words = common::words_up_to(s.alphabet(), 2);
    for u in &words {
        for v in &words {
            assert_eq!(word_eq(&s, u, v).unwrap(), value(u) == value(v), "{} {}", s.display(u), s.display(v));
        }
    }
}

#[test]
fn green_relations_match_tables() {
    for t in corpus() {
        let s = structure_from_table(&t).unwrap();
        let elems = element_words(&t, &s);
        for (x, u) in elems.iter().enumerate() {
            for (y, v) in elems.iter().enumerate() {
                let r = decide::green_related(&s, u, v, GreenRel::R).unwrap();
                let l = decide::green_related(&s, u, v, GreenRel::L).unwrap();
                let h = decide::green_related(&s, u, v, GreenRel::H).unwrap();
                assert_eq!(h, r && l);
                assert_eq!(r, table_green(&t, x, y, GreenRel::R));
                assert_eq!(l, table_green(&t, x, y, GreenRel::L));
            }
        }
    }
}

#[test]
fn groups_are_monoids_with_the_same_identity() {
    for t in corpus() {
        let s = structure_from_table(&t).unwrap();
        let g = decide::is_group(&s).unwrap();
        if g.answer {
            let m = decide::is_monoid(&s).unwrap();
            assert!(m.answer);
            let (a, b) = (g.word("identity").unwrap(), m.word("identity").unwrap());
            assert!(word_eq(&s, a, b).unwrap());
        }
    }
}

#[test]
fn species_checks_never_accept_a_non_member() {
    for t in corpus() {
        let s = structure_from_table(&t).unwrap();
        let names: Vec<String> = s.alphabet().iter().map(|&a| s.symbols().name(a).to_string()).collect();
        if !table_decide(&t, Property::CompletelySimple).answer {
            for sp in decide::cs_species(names.len(), 10_000).unwrap() {
                assert!(!decide::cs_species_check(&s, &sp).unwrap().answer);
            }
        }
        if !table_decide(&t, Property::Clifford).answer && names.len() <= 4 {
            for sp in decide::clifford_species(&names) {
                assert!(!decide::clifford_species_check(&s, &sp).unwrap().answer);
            }
        }
    }
}

#[test]
fn cs_species_count_matches_direct_enumeration() {
    use std::collections::BTreeSet;
    // canonical form of a map A -> {0..n}: relabel by first occurrence
    fn canon(m: &[usize]) -> Vec<usize> {
        let mut seen = Vec::new();
        m.iter()
            .map(|x| match seen.iter().position(|y| y == x) {
                Some(i) => i,
                None => {
                    seen.push(*x);
                    seen.len() - 1
                }
            })
            .collect()
    }
    for n in 1..=3usize {
        let maps: Vec<Vec<usize>> = (0..n.pow(n as u32))
            .map(|mut k| {
                (0..n)
                    .map(|_| {
                        let d = k % n;
                        k /= n;
                        d
                    })
                    .collect()
            })
            .collect();
        let mut pairs = BTreeSet::new();
        for r in &maps {
            for c in &maps {
                pairs.insert((canon(r), canon(c)));
            }
        }
        let species = decide::cs_species(n, usize::MAX).unwrap();
        assert_eq!(species.len(), pairs.len());
        let listed: BTreeSet<_> = species.into_iter().map(|sp| (sp.rows, sp.cols)).collect();
        assert_eq!(listed, pairs);
    }
}

#[test]
fn table_structures_pass_validation() {
    for t in corpus() {
        let s = structure_from_table(&t).unwrap();
        let v = validate_necessary(&s, 6).unwrap();
        assert!(v.answer, "{}", v.reason);
    }
}

#[test]
fn normalization_preserves_word_eq() {
    for (name, s) in fixtures::named_structures().unwrap() {
        let n = normalize_generators(&s);
        assert!(n.is_normalized(), "{name}");
        let max = if s.alphabet().len() <= 3 { 4 } else { 2 };
        let words = common::words_up_to(s.alphabet(), max);
        for u in &words {
            for v in &words {
                assert_eq!(word_eq(&s, u, v).unwrap(), word_eq(&n, u, v).unwrap(), "{name}");
            }
        }
    }
}

/// A structure with the same semigroup, letters renamed and declared in
/// reverse order.
fn renamed(s: &WhStructure) -> WhStructure {
    let mut v: Value = serde_json::from_str(&structure_to_json(s)).unwrap();
    let old: Vec<String> = s.alphabet().iter().map(|&a| s.symbols().name(a).to_string()).collect();
    let map = |x: &str| match old.iter().position(|o| o == x) {
        Some(i) => format!("x{i}"),
        None => x.to_string(),
    };
    fn rename(v: &mut Value, map: &dyn Fn(&str) -> String) {
        match v {
            Value::String(x) => *x = map(x),
            Value::Array(xs) => xs.iter_mut().for_each(|x| rename(x, map)),
            Value::Object(o) => {
                let entries: Vec<(String, Value)> = std::mem::take(o).into_iter().collect();
                for (k, mut x) in entries {
                    rename(&mut x, map);
                    o.insert(map(&k), x);
                }
            }
            _ => {}
        }
    }
    // state and nonterminal names are left alone by the map unless they
    // clash with a letter name, which the fixtures avoid
    rename(&mut v["alphabet"], &map);
    rename(&mut v["reps"]["transitions"], &map);
    rename(&mut v["table"]["productions"], &map);
    rename(&mut v["assignment"], &map);
    v["alphabet"].as_array_mut().unwrap().reverse();
    parse_structure(&v.to_string()).unwrap()
}

#[test]
fn free_verdict_ignores_letter_names() {
    for (name, s) in fixtures::named_structures().unwrap() {
        let r = renamed(&s);
        let before = decide::is_free(&s, 12).unwrap();
        let after = decide::is_free(&r, 12).unwrap();
        assert_eq!(before.answer, after.answer, "{name}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn multiply_gives_a_checked_product(k in 0usize..35, i in any::<prop::sample::Index>(), j in any::<prop::sample::Index>()) {
        let tables = corpus();
        let t = &tables[k % tables.len()];
        let s = structure_from_table(t).unwrap();
        let elems = element_words(t, &s);
        let (p, q) = (&elems[i.index(elems.len())], &elems[j.index(elems.len())]);
        let r = multiply(&s, p, q).unwrap();
        prop_assert!(check_multiply(&s, p, q, &r).unwrap());
        prop_assert_eq!(table_value(t, &s, &r), t.mul(table_value(t, &s, p), table_value(t, &s, q)));
    }

    #[test]
    fn free_products_concatenate(p in prop::collection::vec(0usize..2, 1..6), q in prop::collection::vec(0usize..2, 1..6)) {
        let s = fixtures::free2();
        let p: Word = p.into_iter().map(|k| s.alphabet()[k]).collect();
        let q: Word = q.into_iter().map(|k| s.alphabet()[k]).collect();
        let r = multiply(&s, &p, &q).unwrap();
        prop_assert!(check_multiply(&s, &p, &q, &r).unwrap());
        prop_assert_eq!(r, [p, q].concat());
    }

    #[test]
    fn represent_is_equal_to_its_input(w in prop::collection::vec(0usize..3, 1..12)) {
        let s = fixtures::null3();
        let w: Word = w.into_iter().map(|k| s.alphabet()[k]).collect();
        let r = represent(&s, &w).unwrap();
        prop_assert!(word_eq(&s, &w, &r).unwrap());
    }
}
