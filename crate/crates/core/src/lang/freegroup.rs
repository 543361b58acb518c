use std::fmt;

use super::symbol::Symbol;

#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }
}

/// Reduced word in the free group on the symbols. The empty word is the
/// identity.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FreeGroupWord {
    letters: Vec<(Symbol, Sign)>,
}

impl FreeGroupWord {
    pub fn identity() -> Self {
        Self::default()
    }

    /// Reduces an arbitrary sequence of signed letters.
    pub fn from_letters(letters: impl IntoIterator<Item = (Symbol, Sign)>) -> Self {
        let mut out = Self::identity();
        for l in letters {
            out.push(l);
        }
        out
    }

    /// `w` (positive) or `w⁻¹` (negative).
    pub fn embed(w: &[Symbol], sign: Sign) -> Self {
        match sign {
            Sign::Positive => Self::from_letters(w.iter().map(|&a| (a, Sign::Positive))),
            Sign::Negative => Self::from_letters(w.iter().rev().map(|&a| (a, Sign::Negative))),
        }
    }

    fn push(&mut self, (a, s): (Symbol, Sign)) {
        match self.letters.last() {
            Some(&(b, t)) if b == a && t != s => {
                self.letters.pop();
            }
            _ => self.letters.push((a, s)),
        }
    }

    pub fn letters(&self) -> &[(Symbol, Sign)] {
        &self.letters
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn mul(&self, other: &FreeGroupWord) -> FreeGroupWord {
        let mut out = self.clone();
        for &l in &other.letters {
            out.push(l);
        }
        out
    }

    pub fn inverse(&self) -> FreeGroupWord {
        FreeGroupWord {
            letters: self.letters.iter().rev().map(|&(a, s)| (a, s.flip())).collect(),
        }
    }

    /// The positive word this element equals, if it is one.
    pub fn as_positive(&self) -> Option<Vec<Symbol>> {
        self.letters
            .iter()
            .map(|&(a, s)| (s == Sign::Positive).then_some(a))
            .collect()
    }
}

impl fmt::Debug for FreeGroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for (i, (a, s)) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            match s {
                Sign::Positive => write!(f, "{a:?}")?,
                Sign::Negative => write!(f, "{a:?}^-1")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const A: Symbol = Symbol(2);
    const B: Symbol = Symbol(3);

    #[test]
    fn cancellation_gives_identity() {
        let x = FreeGroupWord::embed(&[A, B], Sign::Positive);
        assert!(x.mul(&x.inverse()).is_identity());
        assert!(x.inverse().mul(&x).is_identity());
    }

    #[test]
    fn single_cancellation() {
        let ainv = FreeGroupWord::embed(&[A], Sign::Negative);
        let ab = FreeGroupWord::embed(&[A, B], Sign::Positive);
        assert_eq!(ainv.mul(&ab).as_positive(), Some(vec![B]));
    }

    #[test]
    fn conjugate_style_product() {
        // a⁻¹ · ab · b  reduces to bb
        let p = FreeGroupWord::embed(&[A], Sign::Positive);
        let m = FreeGroupWord::embed(&[A, B], Sign::Positive);
        let q = FreeGroupWord::embed(&[B], Sign::Positive);
        let z = p.inverse().mul(&m).mul(&q);
        assert_eq!(z.as_positive(), Some(vec![B, B]));
    }
}
