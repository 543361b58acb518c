//! Named example structures and tables used by tests, benches and the
//! command-line examples.

use crate::error::Result;
use crate::oracle::{finite_structure, structure_from_table, FiniteSemigroup};
use crate::structure::{StructureBuilder, WhStructure};

/// The free semigroup on `{a, b}`: `L = {a,b}+`, table `u#1v#2(uv)^rev`.
pub fn free2() -> WhStructure {
    free2_builder(&["a", "b"]).build().expect("valid fixture")
}

fn free2_builder(alphabet: &[&str]) -> StructureBuilder {
    let mut b = StructureBuilder::new(alphabet).expect("fresh alphabet");
    for x in ["a", "b"] {
        b.transition("q0", x, "q1").unwrap();
        b.transition("q1", x, "q1").unwrap();
    }
    b.initial("q0").accepting("q1");
    b.nonterminal("O").nonterminal("V").start("O");
    for x in ["a", "b"] {
        b.production("O", &[x, "O", x]);
        b.production("O", &[x, "#1", "V", x]);
        b.production("V", &[x, "V", x]);
        b.production("V", &[x, "#2", x]);
    }
    b
}

/// The free semigroup on `{a, b}` with a redundant third letter `c = ab`:
/// `L = {a,b}+ ∪ {c}` and the table lists every product among those.
pub fn free2_redundant() -> WhStructure {
    let mut b = StructureBuilder::new(&["a", "b", "c"]).expect("fresh alphabet");
    for x in ["a", "b"] {
        b.transition("q0", x, "q1").unwrap();
        b.transition("q1", x, "q1").unwrap();
    }
    b.transition("q0", "c", "q2").unwrap();
    b.initial("q0").accepting("q1").accepting("q2");
    b.nonterminal("O").nonterminal("F").nonterminal("V").nonterminal("P").start("O");
    // u, v, w all over {a, b}
    b.production("O", &["F"]);
    for x in ["a", "b"] {
        b.production("F", &[x, "F", x]);
        b.production("F", &[x, "#1", "V", x]);
        b.production("V", &[x, "V", x]);
        b.production("V", &[x, "#2", x]);
    }
    // c·v = abv
    b.production("O", &["c", "#1", "V", "b", "a"]);
    // c·c = abab
    b.production("O", &["c", "#1", "c", "#2", "b", "a", "b", "a"]);
    // u·c = uab
    b.production("O", &["P"]);
    for x in ["a", "b"] {
        b.production("P", &[x, "P", x]);
        b.production("P", &[x, "#1", "c", "#2", "b", "a", x]);
    }
    // a·b = c
    b.production("O", &["a", "#1", "b", "#2", "c"]);
    b.assign("c", &["a", "b"]).unwrap();
    b.build().expect("valid fixture")
}

/// The null semigroup of order 3 presented with `A = L = {a, b, c}` and
/// every product equal to `a`.
pub fn null3() -> WhStructure {
    let mut b = StructureBuilder::new(&["a", "b", "c"]).expect("fresh alphabet");
    for x in ["a", "b", "c"] {
        b.transition("q0", x, "q1").unwrap();
    }
    b.initial("q0").accepting("q1");
    b.nonterminal("O").nonterminal("U").start("O");
    b.production("O", &["U", "#1", "U", "#2", "a"]);
    for x in ["a", "b", "c"] {
        b.production("U", &[x]);
    }
    b.build().expect("valid fixture")
}

// Elements of the monoid of the two-interpretation example: cells (row,
// column) of a 2×3 grid numbered row-major, then zero and identity.
const ZERO: usize = 6;
const ONE: usize = 7;

fn rees_mul(x: usize, y: usize) -> usize {
    match (x, y) {
        (ONE, y) => y,
        (x, ONE) => x,
        (ZERO, _) | (_, ZERO) => ZERO,
        (x, y) => {
            let (row, col) = (x / 3, x % 3);
            let (row2, col2) = (y / 3, y % 3);
            if col == 0 && row2 == 0 {
                ZERO
            } else {
                row * 3 + col2
            }
        }
    }
}

/// The two-interpretation monoid: `L = {a,b,c,d,bed,deb,i,z,da}` with `e`
/// assigned `deb`.
pub fn rees() -> WhStructure {
    let letters = ["a", "b", "c", "d", "e", "i", "z"];
    let (a, b, c, d, e, i, z) = (0, 1, 2, 3, 4, 5, 6);
    let reps = [
        (vec![a], 0),
        (vec![b], 1),
        (vec![c], 2),
        (vec![d], 5),
        (vec![b, e, d], 2),
        (vec![d, e, b], 4),
        (vec![i], ONE),
        (vec![z], ZERO),
        (vec![d, a], 3),
    ];
    finite_structure(&letters, &reps, rees_mul, &[(e, 5)]).expect("valid fixture")
}

/// Multiplication table of [`rees`], one named element per cell.
pub fn rees_table() -> FiniteSemigroup {
    let names = ["a", "b", "c", "f", "e", "d", "z", "i"];
    let rows: Vec<Vec<usize>> = (0..8).map(|x| (0..8).map(|y| rees_mul(x, y)).collect()).collect();
    FiniteSemigroup::new(names.iter().map(|s| s.to_string()).collect(), rows, None).expect("associative")
}

/// Cyclic group of order 2 generated by both elements.
pub fn z2_table() -> FiniteSemigroup {
    FiniteSemigroup::from_names(&["e", "g"], &[&["e", "g"], &["g", "e"]], Some(&["e", "g"])).expect("valid table")
}

/// Two-element chain `1 > e` under meet.
pub fn sl2_table() -> FiniteSemigroup {
    FiniteSemigroup::from_names(&["1", "e"], &[&["1", "e"], &["e", "e"]], Some(&["1", "e"])).expect("valid table")
}

/// 2×2 rectangular band, `a = (1,1)`, `b = (1,2)`, `c = (2,1)`,
/// `d = (2,2)`, generated by the diagonal.
pub fn rb22_table() -> FiniteSemigroup {
    FiniteSemigroup::from_names(
        &["a", "b", "c", "d"],
        &[&["a", "b", "a", "b"], &["a", "b", "a", "b"], &["c", "d", "c", "d"], &["c", "d", "c", "d"]],
        Some(&["a", "d"]),
    )
    .expect("valid table")
}

/// Null semigroup of order 3 with zero `a`, generated by everything.
pub fn null3_table() -> FiniteSemigroup {
    FiniteSemigroup::from_names(
        &["a", "b", "c"],
        &[&["a", "a", "a"], &["a", "a", "a"], &["a", "a", "a"]],
        Some(&["a", "b", "c"]),
    )
    .expect("valid table")
}

pub fn z2() -> WhStructure {
    structure_from_table(&z2_table()).expect("valid fixture")
}

pub fn sl2() -> WhStructure {
    structure_from_table(&sl2_table()).expect("valid fixture")
}

pub fn rb22() -> WhStructure {
    structure_from_table(&rb22_table()).expect("valid fixture")
}

/// Named tables, in a fixed order.
pub fn named_tables() -> Vec<(&'static str, FiniteSemigroup)> {
    vec![
        ("z2", z2_table()),
        ("sl2", sl2_table()),
        ("rb22", rb22_table()),
        ("null3", null3_table()),
        ("rees", rees_table()),
    ]
}

/// Every named structure, in a fixed order. File names under `fixtures/`
/// are `<name>.whs`.
pub fn named_structures() -> Result<Vec<(&'static str, WhStructure)>> {
    Ok(vec![
        ("free2", free2()),
        ("free2c", free2_redundant()),
        ("null3", null3()),
        ("rees", rees()),
        ("z2", z2()),
        ("sl2", sl2()),
        ("rb22", rb22()),
        ("rees-table", structure_from_table(&rees_table())?),
    ])
}
