use super::{letter_name, shortest_left, shortest_middle, GreenRel};
use crate::arithmetic::{check_multiply, word_eq};
use crate::error::{Error, Result};
use crate::lang::{reversed, Symbol, Word};
use crate::structure::{normalized, Verdict, WhStructure};

/// Whether the semigroup has a two-sided identity; the witness
/// `identity` is a representative of it.
pub fn is_monoid(s: &WhStructure) -> Result<Verdict> {
    let s = normalized(s);
    let s = s.as_ref();
    // I_a = { i ∈ L : a#1i#2a ∈ M }, and its shortest-lex member i_a
    let mut candidates: Vec<Word> = Vec::with_capacity(s.alphabet().len());
    for &a in s.alphabet() {
        match shortest_middle(s, &[a], s.reps(), &[a]) {
            Some(i) => candidates.push(i),
            None => {
                return Ok(Verdict::failed(1, format!("no right identity for `{}`", letter_name(s, a)))
                    .with_word("letter", vec![a]));
            }
        }
    }
    for i in &candidates {
        let mut ok = true;
        for &b in s.alphabet() {
            if !check_multiply(s, i, &[b], &[b])? || !check_multiply(s, &[b], i, &[b])? {
                ok = false;
                break;
            }
        }
        if ok {
            return Ok(Verdict::yes("identity found").with_word("identity", i.clone()));
        }
    }
    Ok(Verdict::failed(4, "no candidate acts as an identity on every letter"))
}

/// Whether `w` and `w2` (both in `L`) are related by `rel`.
pub fn green_related(s: &WhStructure, w: &[Symbol], w2: &[Symbol], rel: GreenRel) -> Result<bool> {
    for x in [w, w2] {
        if !s.in_reps(x) {
            return Err(Error::NotRepresentative(s.display(x)));
        }
    }
    match rel {
        GreenRel::H => Ok(green_related(s, w, w2, GreenRel::R)? && green_related(s, w, w2, GreenRel::L)?),
        _ if word_eq(s, w, w2)? => Ok(true),
        GreenRel::R => {
            // w·v = w2 and w2·v = w for some v
            Ok(shortest_middle(s, w, s.reps(), &reversed(w2)).is_some()
                && shortest_middle(s, w2, s.reps(), &reversed(w)).is_some())
        }
        GreenRel::L => {
            // v·w = w2 and v·w2 = w for some v
            Ok(shortest_left(s, s.reps(), w, &reversed(w2)).is_some()
                && shortest_left(s, s.reps(), w2, &reversed(w)).is_some())
        }
    }
}

/// Whether the semigroup is a group: a monoid whose generators are all
/// `R`- and `L`-related to the identity.
pub fn is_group(s: &WhStructure) -> Result<Verdict> {
    let s = normalized(s);
    let s = s.as_ref();
    let monoid = is_monoid(s)?;
    let Some(i) = monoid.word("identity").cloned() else {
        return Ok(Verdict::no(format!("not a monoid ({})", monoid.reason)));
    };
    for &a in s.alphabet() {
        for (rel, side) in [(GreenRel::R, "right"), (GreenRel::L, "left")] {
            if !green_related(s, &[a], &i, rel)? {
                return Ok(Verdict::no(format!("`{}` is not {side}-invertible", letter_name(s, a)))
                    .with_word("letter", vec![a])
                    .with_word("identity", i));
            }
        }
    }
    Ok(Verdict::yes("every generator is invertible").with_word("identity", i))
}

/// Whether all generators commute.
pub fn is_commutative(s: &WhStructure) -> Result<Verdict> {
    let s = normalized(s);
    let s = s.as_ref();
    let letters = s.alphabet();
    for (k, &a) in letters.iter().enumerate() {
        for &b in &letters[k + 1..] {
            if !word_eq(s, &[a, b], &[b, a])? {
                return Ok(Verdict::no("generators do not commute")
                    .with_word("left", vec![a])
                    .with_word("right", vec![b]));
            }
        }
    }
    Ok(Verdict::yes("all generators commute"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn monoid_examples() {
        let rees = fixtures::rees();
        let v = is_monoid(&rees).unwrap();
        assert!(v.answer);
        let i = rees.parse_word("i").unwrap();
        assert!(word_eq(&rees, v.word("identity").unwrap(), &i).unwrap());
        assert!(!is_monoid(&fixtures::free2()).unwrap().answer);
        let sl2 = fixtures::sl2();
        assert_eq!(is_monoid(&sl2).unwrap().word("identity"), Some(&sl2.parse_word("1").unwrap()));
    }

    #[test]
    fn green_examples() {
        let z2 = fixtures::z2();
        let (g, e) = (z2.parse_word("g").unwrap(), z2.parse_word("e").unwrap());
        for rel in [GreenRel::R, GreenRel::L, GreenRel::H] {
            assert!(green_related(&z2, &g, &e, rel).unwrap());
        }
        let f = fixtures::free2();
        assert!(!green_related(&f, &f.parse_word("a").unwrap(), &f.parse_word("ab").unwrap(), GreenRel::R).unwrap());
        let rees = fixtures::rees();
        assert!(green_related(&rees, &rees.parse_word("b").unwrap(), &rees.parse_word("c").unwrap(), GreenRel::R).unwrap());
    }

    #[test]
    fn group_and_commutativity() {
        assert!(is_group(&fixtures::z2()).unwrap().answer);
        assert!(!is_group(&fixtures::rees()).unwrap().answer);
        assert!(!is_group(&fixtures::sl2()).unwrap().answer);
        assert!(is_commutative(&fixtures::null3()).unwrap().answer);
        assert!(is_commutative(&fixtures::z2()).unwrap().answer);
        let v = is_commutative(&fixtures::free2()).unwrap();
        assert!(!v.answer);
        assert_eq!(v.witnesses.len(), 2);
    }
}
