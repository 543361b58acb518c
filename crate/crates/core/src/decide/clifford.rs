use super::{letter_name, shortest_middle};
use crate::arithmetic::{check_multiply, multiply};
use crate::error::{Error, Result};
use crate::lang::{reversed, Nfa, Symbol, Word};
use crate::structure::{normalized, Verdict, WhStructure};

/// Placement of each generator in a finite meet-semilattice of groups.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliffordSpecies {
    /// Display names of the semilattice elements.
    pub names: Vec<String>,
    /// `meet[x][y]` is the meet of `x` and `y`.
    pub meet: Vec<Vec<usize>>,
    /// Semilattice element of each letter, by alphabet position.
    pub xi: Vec<usize>,
}

impl CliffordSpecies {
    fn len(&self) -> usize {
        self.meet.len()
    }

    fn geq(&self, x: usize, y: usize) -> bool {
        self.meet[x][y] == y
    }

    fn check(&self, letters: usize) -> Result<()> {
        let n = self.len();
        let bad = |m: &str| Err(Error::Precondition(format!("semilattice {m}")));
        if n == 0 || self.names.len() != n || self.meet.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return bad("table is malformed");
        }
        if self.xi.len() != letters || self.xi.iter().any(|&x| x >= n) {
            return bad("placement must map every letter into the semilattice");
        }
        for x in 0..n {
            if self.meet[x][x] != x {
                return bad("meet is not idempotent");
            }
            for y in 0..n {
                if self.meet[x][y] != self.meet[y][x] {
                    return bad("meet is not commutative");
                }
                for z in 0..n {
                    if self.meet[self.meet[x][y]][z] != self.meet[x][self.meet[y][z]] {
                        return bad("meet is not associative");
                    }
                }
            }
        }
        let mut reached: Vec<bool> = vec![false; n];
        for &x in &self.xi {
            reached[x] = true;
        }
        loop {
            let mut grew = false;
            for x in 0..n {
                for y in 0..n {
                    if reached[x] && reached[y] && !reached[self.meet[x][y]] {
                        reached[self.meet[x][y]] = true;
                        grew = true;
                    }
                }
            }
            if !grew {
                break;
            }
        }
        if reached.contains(&false) {
            return bad("is not generated by the letters");
        }
        Ok(())
    }
}

/// Every species on `n` letters up to isomorphism, ordered by semilattice
/// size and then by canonical form.
///
/// A species is a quotient of the free semilattice on the letters. Each
/// element is identified with the set of letters lying above it; these
/// sets contain the full set and are closed under nonempty intersection,
/// and every such family arises exactly once.
pub fn clifford_species(letters: &[String]) -> Vec<CliffordSpecies> {
    let n = letters.len();
    if n == 0 {
        return Vec::new();
    }
    let full: u32 = (1u32 << n) - 1;
    let mut masks: Vec<u32> = (1..full).collect();
    masks.sort_by(|a, b| b.count_ones().cmp(&a.count_ones()).then(a.cmp(b)));
    let mut families: Vec<Vec<u32>> = Vec::new();
    let mut chosen = vec![full];
    let mut forced = std::collections::BTreeSet::new();
    let mut excluded = std::collections::BTreeSet::new();
    closed_families(&masks, 0, &mut chosen, &mut forced, &mut excluded, &mut families);

    for f in &mut families {
        f.sort_unstable();
    }
    families.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    families
        .into_iter()
        .map(|family| {
            let closure = |m: u32| -> usize {
                family
                    .iter()
                    .enumerate()
                    .filter(|(_, &f)| f & m == m)
                    .min_by_key(|(_, &f)| f.count_ones())
                    .map(|(k, _)| k)
                    .expect("full set is a member")
            };
            let names = family
                .iter()
                .map(|&m| {
                    let parts: Vec<&str> = (0..n).filter(|&k| m >> k & 1 == 1).map(|k| letters[k].as_str()).collect();
                    format!("{{{}}}", parts.join(","))
                })
                .collect();
            let meet = family
                .iter()
                .map(|&x| family.iter().map(|&y| closure(x | y)).collect())
                .collect();
            let xi = (0..n).map(|k| closure(1 << k)).collect();
            CliffordSpecies { names, meet, xi }
        })
        .collect()
}

/// Backtracking over masks in decreasing size. Intersections of chosen
/// masks are smaller, so they are decided later and can be forced.
fn closed_families(
    masks: &[u32],
    at: usize,
    chosen: &mut Vec<u32>,
    forced: &mut std::collections::BTreeSet<u32>,
    excluded: &mut std::collections::BTreeSet<u32>,
    out: &mut Vec<Vec<u32>>,
) {
    if at == masks.len() {
        out.push(chosen.clone());
        return;
    }
    let m = masks[at];
    // include m
    let new: Vec<u32> = chosen
        .iter()
        .map(|&c| c & m)
        .filter(|&x| x != 0 && x != m && !chosen.contains(&x) && !forced.contains(&x))
        .collect();
    if new.iter().all(|x| !excluded.contains(x)) {
        let mut added: Vec<u32> = Vec::new();
        for x in new {
            if forced.insert(x) {
                added.push(x);
            }
        }
        let was_forced = forced.remove(&m);
        chosen.push(m);
        closed_families(masks, at + 1, chosen, forced, excluded, out);
        chosen.pop();
        if was_forced {
            forced.insert(m);
        }
        for x in added {
            forced.remove(&x);
        }
    }
    // exclude m
    if !forced.contains(&m) {
        excluded.insert(m);
        closed_families(masks, at + 1, chosen, forced, excluded, out);
        excluded.remove(&m);
    }
}

/// Automaton over the alphabet tracking the running meet of the letters
/// read; state `1 + y` means the meet so far is `y`.
fn meet_automaton(s: &WhStructure, sp: &CliffordSpecies) -> Nfa {
    let mut n = Nfa::new(s.alphabet().iter().copied());
    let start = n.add_state();
    n.set_initial(start);
    for _ in 0..sp.len() {
        n.add_state();
    }
    for (k, &a) in s.alphabet().iter().enumerate() {
        let x = sp.xi[k];
        n.add_transition(start, a, 1 + x as u32);
        for y in 0..sp.len() {
            n.add_transition(1 + y as u32, a, 1 + sp.meet[y][x] as u32);
        }
    }
    n
}

/// Table words `u#1v#2w^rev` where `w` is not in the meet of the
/// components of `u` and `v`.
fn misplaced_products(s: &WhStructure, sp: &CliffordSpecies) -> Nfa {
    let k = sp.len() as u32;
    let mut alphabet: Vec<Symbol> = s.alphabet().to_vec();
    alphabet.extend([Symbol::SEP1, Symbol::SEP2]);
    let mut n = Nfa::new(alphabet);
    // start, u(y), v0(y), v(y, y2), w0(t), w(t, y3)
    let start = n.add_state();
    n.set_initial(start);
    let block = |n: &mut Nfa, count: u32| -> u32 {
        let first = n.num_states() as u32;
        for _ in 0..count {
            n.add_state();
        }
        first
    };
    let u = block(&mut n, k);
    let v0 = block(&mut n, k);
    let v = block(&mut n, k * k);
    let w0 = block(&mut n, k);
    let w = block(&mut n, k * k);
    for y in 0..k {
        n.add_transition(u + y, Symbol::SEP1, v0 + y);
        for y2 in 0..k {
            let t = sp.meet[y as usize][y2 as usize] as u32;
            n.add_transition(v + y * k + y2, Symbol::SEP2, w0 + t);
        }
    }
    for (pos, &a) in s.alphabet().iter().enumerate() {
        let x = sp.xi[pos];
        n.add_transition(start, a, u + x as u32);
        for y in 0..k {
            let m = sp.meet[y as usize][x] as u32;
            n.add_transition(u + y, a, u + m);
            n.add_transition(v0 + y, a, v + y * k + x as u32);
            n.add_transition(w0 + y, a, w + y * k + x as u32);
            for y2 in 0..k {
                let m2 = sp.meet[y2 as usize][x] as u32;
                n.add_transition(v + y * k + y2, a, v + y * k + m2);
                n.add_transition(w + y * k + y2, a, w + y * k + m2);
            }
        }
    }
    for t in 0..k {
        for y3 in 0..k {
            if t != y3 {
                n.set_accepting(w + t * k + y3);
            }
        }
    }
    n
}

/// Whether the semigroup is a Clifford semigroup with generators placed as
/// in `sp`. A positive verdict carries the idempotent `i{…}` of every
/// component.
pub fn clifford_species_check(s: &WhStructure, sp: &CliffordSpecies) -> Result<Verdict> {
    let s = normalized(s);
    let s = s.as_ref();
    sp.check(s.alphabet().len())?;
    let ny = sp.len();
    let running = meet_automaton(s, sp);

    // Step 1: every component has representatives.
    let mut langs: Vec<Nfa> = Vec::with_capacity(ny);
    for y in 0..ny {
        let mut target = running.clone();
        target.set_accepting(1 + y as u32);
        let lang = s.reps().intersection(&target);
        if lang.is_empty() {
            return Ok(Verdict::failed(1, format!("component {} has no representatives", sp.names[y])));
        }
        langs.push(lang);
    }

    // Step 2: products land in the meet of their factors' components.
    if let Some(w) = s.table().intersect_nfa(&misplaced_products(s, sp)).shortest_word() {
        return Ok(Verdict::failed(2, "a product leaves the meet of its factors' components").with_word("product", w));
    }

    // Steps 3 and 4: component idempotents, multiplying as the semilattice.
    let mut units: Vec<Word> = Vec::with_capacity(ny);
    for (y, lang) in langs.iter().enumerate() {
        let w = lang.shortest_word().expect("checked nonempty");
        match shortest_middle(s, &w, lang, &reversed(&w)) {
            Some(i) => units.push(i),
            None => {
                return Ok(Verdict::failed(3, format!("component {} has no idempotent fixing its least word", sp.names[y]))
                    .with_word("word", w));
            }
        }
    }
    for x in 0..ny {
        for y in 0..ny {
            if !check_multiply(s, &units[x], &units[y], &units[sp.meet[x][y]])? {
                return Ok(Verdict::failed(4, format!(
                    "idempotents of {} and {} do not multiply to that of their meet",
                    sp.names[x], sp.names[y]
                )));
            }
        }
    }

    // Step 5: component identities and central idempotents.
    for (k, &a) in s.alphabet().iter().enumerate() {
        let own = &units[sp.xi[k]];
        if !check_multiply(s, own, &[a], &[a])? || !check_multiply(s, &[a], own, &[a])? {
            return Ok(Verdict::failed(5, format!("`{}` is not fixed by its component identity", letter_name(s, a)))
                .with_word("letter", vec![a]));
        }
        for (y, e) in units.iter().enumerate() {
            let ae = multiply(s, &[a], e)?;
            if !check_multiply(s, e, &[a], &ae)? {
                return Ok(Verdict::failed(5, format!(
                    "`{}` does not commute with the idempotent of {}",
                    letter_name(s, a),
                    sp.names[y]
                ))
                .with_word("letter", vec![a]));
            }
        }
    }

    // Steps 6 and 7: generators have inverses in every component below them.
    for (k, &a) in s.alphabet().iter().enumerate() {
        for (y, e) in units.iter().enumerate() {
            if !sp.geq(sp.xi[k], y) {
                continue;
            }
            let Some(v) = shortest_middle(s, &[a], &langs[y], &reversed(e)) else {
                return Ok(Verdict::failed(6, format!(
                    "`{}` has no right inverse in {}",
                    letter_name(s, a),
                    sp.names[y]
                ))
                .with_word("letter", vec![a]));
            };
            if !check_multiply(s, &v, &[a], e)? {
                return Ok(Verdict::failed(7, format!(
                    "right inverse of `{}` in {} is not a left inverse",
                    letter_name(s, a),
                    sp.names[y]
                ))
                .with_word("letter", vec![a])
                .with_word("inverse", v));
            }
        }
    }

    let placement = s
        .alphabet()
        .iter()
        .enumerate()
        .map(|(k, &a)| format!("{}:{}", letter_name(s, a), sp.names[sp.xi[k]]))
        .collect::<Vec<_>>()
        .join(" ");
    let mut v = Verdict::yes(format!("Clifford over a semilattice of {ny} element(s)")).with_text("species", placement);
    for (y, e) in units.into_iter().enumerate() {
        v = v.with_word(format!("i{}", sp.names[y]), e);
    }
    Ok(v)
}

/// Whether the semigroup is a Clifford semigroup, trying every species.
pub fn is_clifford(s: &WhStructure, max_alphabet: usize) -> Result<Verdict> {
    let s = normalized(s);
    let s = s.as_ref();
    let n = s.alphabet().len();
    if n > max_alphabet {
        return Err(Error::CapExceeded(format!(
            "{n} letters exceed the Clifford species cap of {max_alphabet}"
        )));
    }
    let names: Vec<String> = s.alphabet().iter().map(|&a| letter_name(s, a)).collect();
    let species = clifford_species(&names);
    let tried = species.len();
    for sp in &species {
        let v = clifford_species_check(s, sp)?;
        if v.answer {
            return Ok(v);
        }
    }
    Ok(Verdict::no(format!("no species accepted ({tried} tried)")))
}
