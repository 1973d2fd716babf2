//! Sections `E*|F` of doubly infinite oriented words and their Lagrange
//! values.

use super::orient::{jmath_infinite, pi_subst_infinite};
use super::{ABWord, InfWord, OrientedWord};
use crate::dynamics::{word_norm, ExtReal};
use crate::error::Result;
use crate::exactnum::QuadTower;

/// The section `E*|F`: `left` is `E`, read outward from the cut.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Section {
    pub left: InfWord,
    pub right: InfWord,
}

impl Section {
    pub fn vee(&self) -> Section {
        Section { left: self.left.vee(), right: self.right.vee() }
    }
}

impl std::fmt::Display for Section {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "rev[{}] | {}", self.left, self.right)
    }
}

/// `E(w) = j(w^inf)`.
pub fn e_of(w: &ABWord) -> InfWord {
    jmath_infinite(&InfWord::power(w).expect("nonempty word"))
}

/// For every conjugate `w'` of `w`, the sections `E(w'*)*|E(w')` and
/// `(E(w'*)^v)*|E(w')^v`, without repeats.
pub fn build_bw_sections(w: &ABWord) -> Vec<Section> {
    let mut out: Vec<Section> = Vec::new();
    for c in w.conjugates() {
        let s = Section { left: e_of(&c.reverse()), right: e_of(&c) };
        for cand in [s.vee(), s].into_iter().rev() {
            if !out.contains(&cand) {
                out.push(cand);
            }
        }
    }
    out
}

/// `L(E*|F) = (||Pi(E^v)|| + ||Pi(F)||) / sqrt 2`.
pub fn lagrange_of_section(s: &Section) -> Result<ExtReal> {
    let l = word_norm(&pi_subst_infinite(&s.left.vee()))?;
    let r = word_norm(&pi_subst_infinite(&s.right))?;
    Ok(match (l, r) {
        (ExtReal::Finite(l), ExtReal::Finite(r)) => ExtReal::Finite(&l.try_add(&r)? / &QuadTower::sqrt2()),
        _ => ExtReal::Infinity,
    })
}

/// All sections of the doubly infinite word with the given period.
pub fn sections_of_period(period: &OrientedWord) -> Vec<Section> {
    let n = period.letters().len();
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let mut rot = period.letters().to_vec();
        rot.rotate_left(i);
        let right = InfWord::periodic(rot.clone()).unwrap();
        rot.reverse();
        let left = InfWord::periodic(rot).unwrap();
        out.push(Section { left, right });
    }
    out
}

/// `L(B)`: the largest section value over `B` and `B^v`, together with a
/// maximizing section.
pub fn lagrange_of_word(period: &OrientedWord) -> Result<(ExtReal, Section)> {
    let mut best: Option<(ExtReal, Section)> = None;
    for s in sections_of_period(period).into_iter().flat_map(|s| [s.clone(), s.vee()]) {
        let v = lagrange_of_section(&s)?;
        if best.as_ref().is_none_or(|(b, _)| v > *b) {
            best = Some((v, s));
        }
    }
    Ok(best.expect("nonempty period"))
}
