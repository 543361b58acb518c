use super::{Verdict, WhStructure};
use crate::arithmetic::{check_multiply, multiply, word_eq};
use crate::error::{Error, Result};
use crate::lang::Word;

/// Sampling budgets keep validation bounded on large languages.
const MAX_REPS: usize = 200;
const MAX_PAIRS: usize = 2000;
const MAX_TRIPLES: usize = 1000;

/// Checks decidable necessary conditions for the structure to admit an
/// interpretation, sampling representatives up to total length `depth`.
pub fn validate_necessary(s: &WhStructure, depth: usize) -> Result<Verdict> {
    if depth == 0 {
        return Err(Error::Precondition("depth must be at least 1".into()));
    }
    if let Some(w) = s.table_outside_reps() {
        return Ok(Verdict::no("table not inside L#1L#2L^rev").with_word("offending", w));
    }
    for &a in s.alphabet() {
        if !s.in_reps(s.assignment(a)) {
            return Ok(Verdict::no("assignment word not in L").with_word("letter", vec![a]));
        }
    }

    let reps: Vec<Word> = s.reps().enumerate(depth.saturating_sub(1).max(1), MAX_REPS);
    let mut pairs = 0usize;
    'outer: for u in &reps {
        for v in &reps {
            if u.len() + v.len() > depth {
                continue;
            }
            if pairs == MAX_PAIRS {
                break 'outer;
            }
            pairs += 1;
            let r = match multiply(s, u, v) {
                Ok(r) => r,
                Err(Error::MissingProduct(..)) => {
                    return Ok(Verdict::no("missing product witness")
                        .with_word("left", u.clone())
                        .with_word("right", v.clone()));
                }
                Err(e) => return Err(e),
            };
            // Every other listed product must be the same element.
            for w in reps.iter().filter(|w| w.len() <= r.len() + 1 && **w != r) {
                if check_multiply(s, u, v, w)? && !word_eq(s, w, &r)? {
                    return Ok(Verdict::no("inconsistent product representatives")
                        .with_word("left", u.clone())
                        .with_word("right", v.clone())
                        .with_word("product", r)
                        .with_word("other", w.clone()));
                }
            }
        }
    }

    let mut triples = 0usize;
    'triples: for u in &reps {
        for v in &reps {
            for x in &reps {
                if u.len() + v.len() + x.len() > depth {
                    continue;
                }
                if triples == MAX_TRIPLES {
                    break 'triples;
                }
                triples += 1;
                let left = multiply(s, &multiply(s, u, v)?, x)?;
                let vx = multiply(s, v, x)?;
                if !check_multiply(s, u, &vx, &left)? {
                    return Ok(Verdict::no("associativity fails")
                        .with_word("first", u.clone())
                        .with_word("second", v.clone())
                        .with_word("third", x.clone()));
                }
            }
        }
    }
    Ok(Verdict::yes(format!(
        "necessary conditions hold ({pairs} products, {triples} triples sampled)"
    )))
}
