use super::WhStructure;
use crate::arithmetic::{check_multiply, multiply};
use crate::error::{Error, Result};
use crate::lang::Symbol;

/// Identifies letter `b` with letter `a`: every `b` in `L`, in the table and
/// in assigned words becomes `a`, and `b` leaves the alphabet.
///
/// The caller asserts that both letters name the same element.
pub fn merge_letters(s: &WhStructure, a: Symbol, b: Symbol) -> Result<WhStructure> {
    for x in [a, b] {
        if !s.alphabet().contains(&x) {
            return Err(crate::lang::LangError::UnknownSymbol(s.symbols().name(x).to_string()).into());
        }
    }
    if a == b {
        return Err(Error::Precondition("cannot merge a letter with itself".into()));
    }
    let relabel = |x: Symbol| if x == b { a } else { x };
    let alphabet: Vec<Symbol> = s.alphabet().iter().copied().filter(|&x| x != b).collect();
    let mut reps = crate::lang::Nfa::new(alphabet.iter().copied());
    for _ in 0..s.reps().num_states() {
        reps.add_state();
    }
    for (f, x, t) in s.reps().transitions() {
        reps.add_transition(f, relabel(x), t);
    }
    for &i in s.reps().initial() {
        reps.set_initial(i);
    }
    for &f in s.reps().accepting() {
        reps.set_accepting(f);
    }
    let table = s.table().map_terminals(relabel);
    let assignment = s
        .assignments()
        .iter()
        .filter(|(&x, _)| x != b)
        .map(|(&x, w)| (x, w.iter().map(|&y| relabel(y)).collect()))
        .collect();
    Ok(WhStructure::assemble(
        s.symbols().clone(),
        alphabet,
        reps,
        s.state_names().to_vec(),
        table,
        s.nt_names().to_vec(),
        assignment,
    ))
}

/// Necessary condition for two letters of `L` to name the same element:
/// they multiply every letter on either side to the same element.
pub fn letters_agree(s: &WhStructure, a: Symbol, b: Symbol) -> Result<bool> {
    if !s.in_reps(&[a]) || !s.in_reps(&[b]) {
        return Err(Error::Precondition("both letters must lie in L".into()));
    }
    let same = |l1: &[Symbol], r1: &[Symbol], l2: &[Symbol], r2: &[Symbol]| -> Result<bool> {
        let p = multiply(s, l1, r1)?;
        check_multiply(s, l2, r2, &p)
    };
    for &x in s.alphabet() {
        let xs = s.assignment(x);
        if !same(&[a], xs, &[b], xs)? || !same(xs, &[a], xs, &[b])? {
            return Ok(false);
        }
    }
    Ok(true)
}
