use std::fmt;

use super::FiniteSemigroup;
use crate::decide::GreenRel;
use crate::structure::Verdict;

/// Properties decided both by brute force here and by the structure
/// procedures.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Property {
    Monoid,
    Group,
    Commutative,
    CompletelySimple,
    Clifford,
    Free,
}

impl Property {
    pub const ALL: [Property; 6] = [
        Property::Monoid,
        Property::Group,
        Property::Commutative,
        Property::CompletelySimple,
        Property::Clifford,
        Property::Free,
    ];
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Property::Monoid => "monoid",
            Property::Group => "group",
            Property::Commutative => "commutative",
            Property::CompletelySimple => "completely-simple",
            Property::Clifford => "clifford",
            Property::Free => "free",
        })
    }
}

/// Brute-force verdict of `p` on the table.
pub fn table_decide(t: &FiniteSemigroup, p: Property) -> Verdict {
    let n = t.order();
    let all = || 0..n;
    match p {
        Property::Monoid => match t.identity() {
            Some(e) => Verdict::yes("identity found").with_text("identity", t.name(e)),
            None => Verdict::no("no identity element"),
        },
        Property::Group => {
            let Some(e) = t.identity() else {
                return Verdict::no("no identity element");
            };
            match all().find(|&x| !all().any(|y| t.mul(x, y) == e && t.mul(y, x) == e)) {
                Some(x) => Verdict::no("element without inverse").with_text("element", t.name(x)),
                None => Verdict::yes("every element is invertible").with_text("identity", t.name(e)),
            }
        }
        Property::Commutative => {
            for x in all() {
                for y in all() {
                    if t.mul(x, y) != t.mul(y, x) {
                        return Verdict::no("non-commuting pair")
                            .with_text("left", t.name(x))
                            .with_text("right", t.name(y));
                    }
                }
            }
            Verdict::yes("all products commute")
        }
        Property::CompletelySimple => {
            if let Some(x) = all().find(|&x| t.ideal_of(x).len() != n) {
                return Verdict::no("proper ideal").with_text("generator", t.name(x));
            }
            let idem: Vec<usize> = all().filter(|&x| t.is_idempotent(x)).collect();
            let primitive = idem.iter().copied().find(|&e| {
                idem.iter()
                    .all(|&f| !(t.mul(e, f) == f && t.mul(f, e) == f) || e == f)
            });
            match primitive {
                Some(e) => Verdict::yes("simple with a primitive idempotent").with_text("idempotent", t.name(e)),
                None => Verdict::no("no primitive idempotent"),
            }
        }
        Property::Clifford => {
            if let Some(x) = all().find(|&x| !all().any(|y| t.mul(t.mul(x, y), x) == x)) {
                return Verdict::no("not regular").with_text("element", t.name(x));
            }
            for e in all().filter(|&e| t.is_idempotent(e)) {
                if let Some(x) = all().find(|&x| t.mul(e, x) != t.mul(x, e)) {
                    return Verdict::no("idempotent not central")
                        .with_text("idempotent", t.name(e))
                        .with_text("element", t.name(x));
                }
            }
            Verdict::yes("regular with central idempotents")
        }
        Property::Free => Verdict::no("finite semigroups are not free"),
    }
}

/// Whether `x` and `y` are related by `rel` in the table.
pub fn table_green(t: &FiniteSemigroup, x: usize, y: usize, rel: GreenRel) -> bool {
    match rel {
        GreenRel::R => t.right_ideal(x) == t.right_ideal(y),
        GreenRel::L => t.left_ideal(x) == t.left_ideal(y),
        GreenRel::H => table_green(t, x, y, GreenRel::R) && table_green(t, x, y, GreenRel::L),
    }
}
