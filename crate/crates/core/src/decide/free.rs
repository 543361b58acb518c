use super::{letter_name, palindromic_defect};
use crate::error::Result;
use crate::lang::{reversed, Nfa, Symbol, Transducer, Word};
use crate::structure::{normalized, Verdict, WhStructure};

/// Rewrites `a` as `d` before `#2` and as `d^rev` after it, copying every
/// other letter of `u#1v#2x`.
fn segment_substitution(letters: &[Symbol], a: Symbol, d: &[Symbol]) -> Transducer {
    let mut t = Transducer::new();
    let segs = [t.initial(), t.add_state(), t.add_state()];
    t.set_accepting(segs[2]);
    for (k, &q) in segs.iter().enumerate() {
        for &b in letters {
            let out = match (b == a, k == 2) {
                (false, _) => vec![b],
                (true, false) => d.to_vec(),
                (true, true) => reversed(d),
            };
            t.add_edge(q, Some(b), out, q);
        }
    }
    t.add_edge(segs[0], Some(Symbol::SEP1), vec![Symbol::SEP1], segs[1]);
    t.add_edge(segs[1], Some(Symbol::SEP2), vec![Symbol::SEP2], segs[2]);
    t
}

/// Maps `u#1v#2a` to `uv`.
fn factor_concatenation(letters: &[Symbol], a: Symbol) -> Transducer {
    let mut t = Transducer::new();
    let (body, done) = (t.initial(), t.add_state());
    let tail = t.add_state();
    t.set_accepting(done);
    for &b in letters {
        t.add_edge(body, Some(b), vec![b], body);
    }
    t.add_edge(body, Some(Symbol::SEP1), Vec::new(), body);
    t.add_edge(body, Some(Symbol::SEP2), Vec::new(), tail);
    t.add_edge(tail, Some(a), Vec::new(), done);
    t.with_output_alphabet(letters.iter().copied())
}

/// Whether the semigroup is free.
///
/// Letters that are products of others are substituted away; what remains
/// must have every nonempty word as a representative and a table of the
/// form `uv#2(uv)^rev`. Positive verdicts carry `d_<letter>` for every
/// eliminated letter.
pub fn is_free(s: &WhStructure, witness_len: usize) -> Result<Verdict> {
    let s = normalized(s);
    let s = s.as_ref();
    let mut letters: Vec<Symbol> = s.alphabet().to_vec();
    let mut reps = s.reps().clone();
    let mut table = s.table().clone();
    let mut eliminated: Vec<(Symbol, Word)> = Vec::new();

    // Step 1: eliminate letters that factor.
    for &a in s.alphabet() {
        let shape = Nfa::concat_all(&[&reps, &Nfa::word(&[Symbol::SEP1]), &reps, &Nfa::word(&[Symbol::SEP2, a])]);
        let factors = factor_concatenation(&letters, a).apply_cfg(&table.intersect_nfa(&shape));
        let Some(d) = factors.shortest_word() else { continue };
        if d.contains(&a) {
            return Ok(Verdict::failed(1, format!("`{}` factors through a word containing itself", letter_name(s, a)))
                .with_word(format!("d_{}", letter_name(s, a)), d));
        }
        let subst = letters.iter().map(|&b| (b, if b == a { d.clone() } else { vec![b] }));
        reps = Transducer::substitution(subst).apply_nfa(&reps);
        table = segment_substitution(&letters, a, &d).apply_cfg(&table);
        letters.retain(|&b| b != a);
        eliminated.push((a, d));
    }

    // Step 2: every nonempty word is a representative.
    let all = Nfa::plus(letters.iter().copied());
    if !reps.equivalent(&all) {
        let mut v = Verdict::failed(2, "representatives are not all nonempty words");
        if let Some(w) = all.intersection(&reps.complement_over(letters.iter().copied())).shortest_word() {
            v = v.with_word("missing", w);
        }
        return Ok(v);
    }

    // Step 3: dropping #1 leaves a palindromic table.
    let mut join = Transducer::identity(letters.iter().copied());
    join.add_edge(0, Some(Symbol::SEP1), Vec::new(), 0);
    join.add_edge(0, Some(Symbol::SEP2), vec![Symbol::SEP2], 0);
    let joined = join.apply_cfg(&table);
    if let Some(defect) = palindromic_defect(&joined, witness_len)? {
        let mut v = Verdict::failed(3, format!("table is not free: {}", defect.certificate));
        if let Some(w) = defect.witness {
            v = v.with_word("defect", w);
        }
        return Ok(v);
    }
    let mut v = Verdict::yes(format!("free on {} generator(s)", letters.len()));
    for (a, d) in eliminated {
        v = v.with_word(format!("d_{}", letter_name(s, a)), d);
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn free_fixtures() {
        assert!(is_free(&fixtures::free2(), 12).unwrap().answer);
        let v = is_free(&fixtures::free2_redundant(), 12).unwrap();
        assert!(v.answer, "{}", v.reason);
        let s = fixtures::free2_redundant();
        assert_eq!(v.word("d_c"), Some(&s.parse_word("ab").unwrap()));
    }

    #[test]
    fn finite_fixtures_are_not_free() {
        for s in [fixtures::null3(), fixtures::z2(), fixtures::sl2(), fixtures::rb22(), fixtures::rees()] {
            assert!(!is_free(&s, 12).unwrap().answer);
        }
    }
}
