//! Words over {a, b} and {a, b, a^v}: Christoffel words, the orientation
//! map, the digit substitution, word orders and sections.

pub mod christoffel;
pub mod orient;
pub mod sections;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::dynamics::primitive_root;
use crate::error::{Error, Result};

pub use christoffel::{
    christoffel, christoffel_by_mediants, christoffel_tree, is_lower_christoffel, standard_factorization,
    ChristoffelNode, ChristoffelWord, Kind,
};
pub use orient::{
    check_oriented, check_oriented_cyclic, jmath, jmath_infinite, minimal_period, pi_subst, pi_subst_infinite,
    word_compare_ab, word_compare_oriented, ForbiddenFactor,
};
pub use sections::{build_bw_sections, lagrange_of_section, lagrange_of_word, Section};

/// A letter of the oriented alphabet. `AV` is `a` with the check mark.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Letter {
    A,
    B,
    AV,
}

impl Letter {
    pub fn vee(self) -> Letter {
        match self {
            Letter::A => Letter::AV,
            Letter::AV => Letter::A,
            Letter::B => Letter::B,
        }
    }

    /// Forgets the check mark.
    pub fn plain(self) -> Letter {
        match self {
            Letter::AV => Letter::A,
            l => l,
        }
    }

    pub fn to_char(self) -> char {
        match self {
            Letter::A => 'a',
            Letter::B => 'b',
            Letter::AV => 'A',
        }
    }

    pub fn from_char(c: char) -> Option<Letter> {
        match c {
            'a' => Some(Letter::A),
            'b' => Some(Letter::B),
            'A' => Some(Letter::AV),
            _ => None,
        }
    }
}

/// A finite word over {a, b}.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ABWord(Vec<Letter>);

impl ABWord {
    pub fn new(letters: Vec<Letter>) -> Result<Self> {
        if letters.contains(&Letter::AV) {
            return Err(Error::Parse("a^v is not a letter of {a, b}".into()));
        }
        Ok(ABWord(letters))
    }

    pub fn parse(s: &str) -> Result<Self> {
        let letters = s
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c {
                'a' => Ok(Letter::A),
                'b' => Ok(Letter::B),
                _ => Err(Error::Parse(format!("unexpected character {c:?} in an {{a,b}} word"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ABWord(letters))
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn count_b(&self) -> usize {
        self.0.iter().filter(|&&l| l == Letter::B).count()
    }

    pub fn count_a(&self) -> usize {
        self.0.len() - self.count_b()
    }

    /// Even when the number of b's is even.
    pub fn is_even(&self) -> bool {
        self.count_b() % 2 == 0
    }

    pub fn reverse(&self) -> ABWord {
        ABWord(self.0.iter().rev().copied().collect())
    }

    pub fn concat(&self, o: &ABWord) -> ABWord {
        ABWord([self.0.as_slice(), o.0.as_slice()].concat())
    }

    /// Rotation `w2 w1` where `w1` is the first `i` letters.
    pub fn rotate(&self, i: usize) -> ABWord {
        let mut v = self.0.clone();
        let n = v.len();
        if n > 0 {
            v.rotate_left(i % n);
        }
        ABWord(v)
    }

    pub fn conjugates(&self) -> Vec<ABWord> {
        (0..self.len().max(1)).map(|i| self.rotate(i)).collect()
    }
}

impl fmt::Display for ABWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.0.iter().map(|l| l.to_char()).collect();
        write!(f, "{s}")
    }
}

/// A finite word over {a, b, a^v}; `a^v` prints as `A`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrientedWord(pub Vec<Letter>);

impl OrientedWord {
    pub fn parse(s: &str) -> Result<Self> {
        s.chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| Letter::from_char(c).ok_or_else(|| Error::Parse(format!("unexpected character {c:?}"))))
            .collect::<Result<Vec<_>>>()
            .map(OrientedWord)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn vee(&self) -> OrientedWord {
        OrientedWord(self.0.iter().map(|l| l.vee()).collect())
    }

    pub fn reverse(&self) -> OrientedWord {
        OrientedWord(self.0.iter().rev().copied().collect())
    }

    pub fn concat(&self, o: &OrientedWord) -> OrientedWord {
        OrientedWord([self.0.as_slice(), o.0.as_slice()].concat())
    }

    /// Drops the check marks.
    pub fn forget(&self) -> ABWord {
        ABWord(self.0.iter().map(|l| l.plain()).collect())
    }
}

impl fmt::Display for OrientedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.0.iter().map(|l| l.to_char()).collect();
        write!(f, "{s}")
    }
}

/// An infinite word `head period period ...`, stored with a primitive
/// period and the shortest head.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct InfWord {
    head: Vec<Letter>,
    period: Vec<Letter>,
}

impl InfWord {
    pub fn new(head: Vec<Letter>, period: Vec<Letter>) -> Result<Self> {
        if period.is_empty() {
            return Err(Error::EmptyWord);
        }
        let mut head = head;
        let mut period = primitive_root(&period);
        while let (Some(h), Some(p)) = (head.last().copied(), period.last().copied()) {
            if h != p {
                break;
            }
            head.pop();
            period.rotate_right(1);
        }
        Ok(InfWord { head, period })
    }

    pub fn periodic(period: Vec<Letter>) -> Result<Self> {
        Self::new(Vec::new(), period)
    }

    /// `w^inf`.
    pub fn power(w: &ABWord) -> Result<Self> {
        Self::periodic(w.letters().to_vec())
    }

    pub fn head(&self) -> &[Letter] {
        &self.head
    }

    pub fn period(&self) -> &[Letter] {
        &self.period
    }

    pub fn letter_at(&self, i: usize) -> Letter {
        if i < self.head.len() {
            self.head[i]
        } else {
            self.period[(i - self.head.len()) % self.period.len()]
        }
    }

    pub fn vee(&self) -> InfWord {
        InfWord {
            head: self.head.iter().map(|l| l.vee()).collect(),
            period: self.period.iter().map(|l| l.vee()).collect(),
        }
    }

    /// Drops the check marks.
    pub fn forget(&self) -> InfWord {
        InfWord::new(self.head.iter().map(|l| l.plain()).collect(), self.period.iter().map(|l| l.plain()).collect())
            .unwrap()
    }

    /// `prefix E`.
    pub fn prepend(&self, prefix: &[Letter]) -> InfWord {
        InfWord::new([prefix, self.head.as_slice()].concat(), self.period.clone()).unwrap()
    }

    /// Shortest length after which two such words must agree if they agree
    /// on it.
    pub(crate) fn comparison_horizon(&self, o: &InfWord) -> usize {
        let l = num_integer::lcm(self.period.len(), o.period.len());
        self.head.len().max(o.head.len()) + l
    }
}

impl fmt::Display for InfWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let h: String = self.head.iter().map(|l| l.to_char()).collect();
        let p: String = self.period.iter().map(|l| l.to_char()).collect();
        write!(f, "{h}({p})^inf")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parity_and_rotation() {
        let w = ABWord::parse("abbb").unwrap();
        assert!(!w.is_even());
        assert_eq!(w.rotate(1).to_string(), "bbba");
        assert_eq!(w.conjugates().len(), 4);
        assert!(ABWord::parse("abc").is_err());
    }

    #[test]
    fn inf_word_canonical() {
        let e = InfWord::new(vec![Letter::B, Letter::A, Letter::B], vec![Letter::A, Letter::B]).unwrap();
        assert!(e.head().is_empty());
        assert_eq!(e.to_string(), "(ba)^inf");
    }
}
