//! Element arithmetic over a structure: product checks, product
//! representatives, representatives of arbitrary words and the word problem.

use crate::error::{Error, Result};
use crate::lang::{reversed, Nfa, Symbol, Word};
use crate::structure::WhStructure;

/// Operands whose combined length is at most this are memoized.
const CACHE_LIMIT: usize = 64;

fn require_rep(s: &WhStructure, w: &[Symbol]) -> Result<()> {
    if s.in_reps(w) {
        Ok(())
    } else {
        Err(Error::NotRepresentative(s.display(w)))
    }
}

/// Whether `p · q = r`, by membership of `p#1q#2r^rev` in the table.
pub fn check_multiply(s: &WhStructure, p: &[Symbol], q: &[Symbol], r: &[Symbol]) -> Result<bool> {
    require_rep(s, p)?;
    require_rep(s, q)?;
    require_rep(s, r)?;
    let small = p.len() + q.len() + r.len() <= CACHE_LIMIT;
    let key = (p.to_vec(), q.to_vec(), r.to_vec());
    if small {
        if let Some(&b) = s.cache.lock().expect("cache lock").checks.get(&key) {
            return Ok(b);
        }
    }
    let b = s.table().accepts(&membership_string(p, q, r));
    if small {
        s.cache.lock().expect("cache lock").checks.insert(key, b);
    }
    Ok(b)
}

/// The shortest-lex `r ∈ L` with `p · q = r`.
pub fn multiply(s: &WhStructure, p: &[Symbol], q: &[Symbol]) -> Result<Word> {
    require_rep(s, p)?;
    require_rep(s, q)?;
    let small = p.len() + q.len() <= CACHE_LIMIT;
    let key = (p.to_vec(), q.to_vec());
    if small {
        if let Some(r) = s.cache.lock().expect("cache lock").products.get(&key) {
            return Ok(r.clone());
        }
    }
    // Members of the reversed table that end in  #2 q^rev #1 p^rev  are
    // exactly  r #2 q^rev #1 p^rev; their shortest-lex order is that of r.
    let mut tail = vec![Symbol::SEP2];
    tail.extend(q.iter().rev());
    tail.push(Symbol::SEP1);
    tail.extend(p.iter().rev());
    let shape = Nfa::star(s.alphabet().iter().copied()).concat(&Nfa::word(&tail));
    let g = s.reversed_table().intersect_nfa(&shape);
    let w = g
        .shortest_word()
        .ok_or_else(|| Error::MissingProduct(s.display(p), s.display(q)))?;
    let r = w[..w.len() - tail.len()].to_vec();
    if small {
        s.cache.lock().expect("cache lock").products.insert(key, r.clone());
    }
    Ok(r)
}

/// A representative in `L` of an arbitrary nonempty word over the alphabet,
/// by rounds of pairwise products.
pub fn represent(s: &WhStructure, w: &[Symbol]) -> Result<Word> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let mut level: Vec<Word> = w
        .iter()
        .map(|&a| {
            if s.alphabet().contains(&a) {
                Ok(s.assignment(a).clone())
            } else {
                Err(Error::Lang(crate::lang::LangError::UnknownSymbol(
                    s.symbols().name(a).to_string(),
                )))
            }
        })
        .collect::<Result<_>>()?;
    while level.len() > 1 {
        let mut next = Vec::with_capacity(level.len().div_ceil(2));
        let mut it = level.chunks(2);
        for pair in &mut it {
            match pair {
                [x, y] => next.push(multiply(s, x, y)?),
                [x] => next.push(x.clone()),
                _ => unreachable!(),
            }
        }
        level = next;
    }
    Ok(level.pop().expect("nonempty"))
}

/// Whether two nonempty words over the alphabet represent the same element.
pub fn word_eq(s: &WhStructure, w: &[Symbol], w2: &[Symbol]) -> Result<bool> {
    if w.is_empty() || w2.is_empty() {
        return Err(Error::EmptyWord);
    }
    for &a in w.iter().chain(w2) {
        if !s.alphabet().contains(&a) {
            return Err(Error::Lang(crate::lang::LangError::UnknownSymbol(
                s.symbols().name(a).to_string(),
            )));
        }
    }
    let (long, short) = if w.len() >= w2.len() { (w, w2) } else { (w2, w) };
    if long.len() == 1 {
        // Distinct letters name distinct elements.
        return Ok(long == short);
    }
    let (left, right) = long.split_at(long.len() / 2);
    let u1 = represent(s, left)?;
    let u2 = represent(s, right)?;
    let u = represent(s, short)?;
    check_multiply(s, &u1, &u2, &u)
}

/// The table word `p#1q#2r^rev`.
pub fn membership_string(p: &[Symbol], q: &[Symbol], r: &[Symbol]) -> Word {
    let mut w = p.to_vec();
    w.push(Symbol::SEP1);
    w.extend_from_slice(q);
    w.push(Symbol::SEP2);
    w.extend(reversed(r));
    w
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn w(s: &WhStructure, text: &str) -> Word {
        s.parse_word(text).unwrap()
    }

    #[test]
    fn free_products_concatenate() {
        let s = fixtures::free2();
        assert!(check_multiply(&s, &w(&s, "a"), &w(&s, "b"), &w(&s, "ab")).unwrap());
        assert!(!check_multiply(&s, &w(&s, "a"), &w(&s, "b"), &w(&s, "ba")).unwrap());
        assert_eq!(multiply(&s, &w(&s, "ab"), &w(&s, "a")).unwrap(), w(&s, "aba"));
        assert_eq!(represent(&s, &w(&s, "abab")).unwrap(), w(&s, "abab"));
    }

    #[test]
    fn null_products_collapse() {
        let s = fixtures::null3();
        assert!(check_multiply(&s, &w(&s, "b"), &w(&s, "b"), &w(&s, "a")).unwrap());
        assert_eq!(multiply(&s, &w(&s, "c"), &w(&s, "b")).unwrap(), w(&s, "a"));
        assert_eq!(represent(&s, &w(&s, "bcb")).unwrap(), w(&s, "a"));
        assert!(word_eq(&s, &w(&s, "bc"), &w(&s, "cb")).unwrap());
        assert!(!word_eq(&s, &w(&s, "b"), &w(&s, "c")).unwrap());
    }

    #[test]
    fn cyclic_group_parity() {
        let s = fixtures::z2();
        assert_eq!(multiply(&s, &w(&s, "g"), &w(&s, "g")).unwrap(), w(&s, "e"));
        assert_eq!(represent(&s, &w(&s, "ggg")).unwrap(), w(&s, "g"));
    }

    #[test]
    fn operands_must_be_representatives() {
        let s = fixtures::rees();
        let e = w(&s, "e");
        assert!(matches!(multiply(&s, &e, &e), Err(Error::NotRepresentative(_))));
        assert!(matches!(word_eq(&s, &[], &e), Err(Error::EmptyWord)));
    }
}
