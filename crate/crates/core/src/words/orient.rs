//! The orientation map, the digit substitution, forbidden factors and the
//! two word orders.

use std::cmp::Ordering;

use super::{ABWord, InfWord, Letter, OrientedWord};
use crate::dynamics::{primitive_root, word_norm, Digit, DigitWord};
use crate::error::{Error, Result};

/// Marks each `a` preceded by an odd number of b's, starting from the given
/// parity.
fn orient_from(letters: &[Letter], mut odd: bool) -> (Vec<Letter>, bool) {
    let mut out = Vec::with_capacity(letters.len());
    for &l in letters {
        match l.plain() {
            Letter::B => {
                out.push(Letter::B);
                odd = !odd;
            }
            _ => out.push(if odd { Letter::AV } else { Letter::A }),
        }
    }
    (out, odd)
}

/// The orientation map on finite words.
pub fn jmath(w: &ABWord) -> OrientedWord {
    OrientedWord(orient_from(w.letters(), false).0)
}

/// The orientation map on eventually periodic words.
pub fn jmath_infinite(e: &InfWord) -> InfWord {
    let (head, odd) = orient_from(e.head(), false);
    let (p1, odd2) = orient_from(e.period(), odd);
    let period = if odd2 == odd {
        p1
    } else {
        let (p2, _) = orient_from(e.period(), odd2);
        [p1, p2].concat()
    };
    InfWord::new(head, period).unwrap()
}

fn subst(letters: &[Letter]) -> Vec<Digit> {
    let mut out = Vec::with_capacity(2 * letters.len());
    for &l in letters {
        match l {
            Letter::A => out.extend([3, 1]),
            Letter::B => out.push(2),
            Letter::AV => out.extend([1, 3]),
        }
    }
    out
}

/// Digit substitution `a -> 31`, `b -> 2`, `a^v -> 13`.
pub fn pi_subst(w: &OrientedWord) -> Vec<Digit> {
    subst(w.letters())
}

pub fn pi_subst_infinite(e: &InfWord) -> DigitWord {
    DigitWord::periodic(subst(e.head()), subst(e.period())).unwrap()
}

/// Minimal digit period of the doubly infinite sequence attached to `w`:
/// `Pi(j(w))` for even `w`, `Pi(j(w) j(w)^v)` for odd `w`, reduced to its
/// primitive root.
pub fn minimal_period(w: &ABWord) -> Result<DigitWord> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let j = jmath(w);
    let full = if w.is_even() { j } else { j.concat(&j.vee()) };
    DigitWord::purely_periodic(primitive_root(&pi_subst(&full)))
}

/// A forbidden factor `x b^m y` found by [`check_oriented`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForbiddenFactor {
    pub position: usize,
    pub factor: String,
    /// Number of b's between the two a-type letters.
    pub b_run: usize,
}

fn forbidden(x: Letter, y: Letter, m: usize) -> bool {
    let even = m % 2 == 0;
    match (x, y) {
        (Letter::A, Letter::AV) | (Letter::AV, Letter::A) => even,
        (Letter::A, Letter::A) | (Letter::AV, Letter::AV) => !even,
        _ => false,
    }
}

fn scan(letters: &[Letter], start_limit: usize) -> Option<ForbiddenFactor> {
    let idx: Vec<usize> = (0..letters.len()).filter(|&i| letters[i] != Letter::B).collect();
    for pair in idx.windows(2) {
        let (i, j) = (pair[0], pair[1]);
        if i >= start_limit {
            break;
        }
        if forbidden(letters[i], letters[j], j - i - 1) {
            let factor: String = letters[i..=j].iter().map(|l| l.to_char()).collect();
            return Some(ForbiddenFactor { position: i, factor, b_run: j - i - 1 });
        }
    }
    None
}

/// `Ok` when `w` avoids `a b^2k a^v`, `a^v b^2k a`, `a b^(2k+1) a` and
/// `a^v b^(2k+1) a^v`; otherwise the first offending factor.
pub fn check_oriented(w: &OrientedWord) -> std::result::Result<(), ForbiddenFactor> {
    match scan(w.letters(), usize::MAX) {
        Some(f) => Err(f),
        None => Ok(()),
    }
}

/// As [`check_oriented`] for the doubly infinite word with period `w`.
pub fn check_oriented_cyclic(w: &OrientedWord) -> std::result::Result<(), ForbiddenFactor> {
    let n = w.letters().len();
    let tripled: Vec<Letter> = w.letters().iter().cycle().take(3 * n).copied().collect();
    match scan(&tripled, n) {
        Some(f) => Err(f),
        None => Ok(()),
    }
}

/// Lexicographic order with `a < b` on eventually periodic {a, b} words.
pub fn word_compare_ab(e1: &InfWord, e2: &InfWord) -> Ordering {
    let n = e1.comparison_horizon(e2);
    for i in 0..n {
        let (x, y) = (e1.letter_at(i).plain(), e2.letter_at(i).plain());
        if x != y {
            return if x == Letter::A { Ordering::Less } else { Ordering::Greater };
        }
    }
    Ordering::Equal
}

/// Order on oriented words: `e1` precedes `e2` when the norm of `Pi(e1)`
/// is larger.
pub fn word_compare_oriented(e1: &InfWord, e2: &InfWord) -> Ordering {
    if e1 == e2 {
        return Ordering::Equal;
    }
    let n1 = word_norm(&pi_subst_infinite(e1)).unwrap();
    let n2 = word_norm(&pi_subst_infinite(e2)).unwrap();
    n2.cmp(&n1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab(s: &str) -> ABWord {
        ABWord::parse(s).unwrap()
    }

    fn digits(w: &DigitWord) -> String {
        w.period().unwrap().iter().map(|d| d.to_string()).collect()
    }

    #[test]
    fn orientation_examples() {
        assert_eq!(jmath(&ab("ababba")).to_string(), "abAbbA");
        assert_eq!(jmath(&ab("babbba")).to_string(), "bAbbba");
        assert_eq!(jmath(&ab("aaa")).to_string(), "aaa");
    }

    #[test]
    fn substitution_examples() {
        let s = |d: Vec<Digit>| d.iter().map(|d| d.to_string()).collect::<String>();
        assert_eq!(s(pi_subst(&jmath(&ab("abb")))), "3122");
        let j = jmath(&ab("ab"));
        assert_eq!(s(pi_subst(&j.concat(&j.vee()))), "312132");
        let j = jmath(&ab("aab"));
        assert_eq!(s(pi_subst(&j.concat(&j.vee()))), "3131213132");
    }

    #[test]
    fn minimal_periods() {
        assert_eq!(digits(&minimal_period(&ab("b")).unwrap()), "2");
        assert_eq!(digits(&minimal_period(&ab("a")).unwrap()), "31");
        assert_eq!(digits(&minimal_period(&ab("abbbb")).unwrap()), "312222");
        assert_eq!(digits(&minimal_period(&ab("aaab")).unwrap()), "31313121313132");
        assert!(minimal_period(&ab("")).is_err());
    }

    #[test]
    fn forbidden_factors() {
        let w = OrientedWord::parse("abbA").unwrap();
        let f = check_oriented(&w).unwrap_err();
        assert_eq!((f.factor.as_str(), f.b_run), ("abbA", 2));
        let f = check_oriented(&OrientedWord::parse("aba").unwrap()).unwrap_err();
        assert_eq!((f.factor.as_str(), f.b_run), ("aba", 1));
        assert!(check_oriented(&OrientedWord::parse("abba").unwrap()).is_ok());
        // cyclically a b closes up as a b a
        assert!(check_oriented_cyclic(&OrientedWord::parse("ab").unwrap()).is_err());
        assert!(check_oriented_cyclic(&OrientedWord::parse("abAb").unwrap()).is_ok());
    }

    #[test]
    fn orders() {
        let e1 = InfWord::power(&ab("ab")).unwrap();
        let e2 = InfWord::power(&ab("ba")).unwrap();
        assert_eq!(word_compare_ab(&e1, &e2), Ordering::Less);
        assert_eq!(word_compare_ab(&e1, &e1), Ordering::Equal);
        // ab precedes ba, and the orientation map keeps it that way
        let (j1, j2) = (jmath_infinite(&e1), jmath_infinite(&e2));
        assert_eq!(word_compare_oriented(&j1, &j2), Ordering::Less);
        assert_eq!(word_compare_oriented(&j1, &j1), Ordering::Equal);
    }

    #[test]
    fn infinite_orientation_doubles_odd_period() {
        let e = jmath_infinite(&InfWord::power(&ab("abbb")).unwrap());
        assert_eq!(e.to_string(), "(abbbAbbb)^inf");
    }
}
