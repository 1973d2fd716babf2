//! Cohn matrices, Markoff numbers of words and exact Lagrange values of
//! periodic points.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::dynamics::{discriminant, periodic_norm, point_from_norm, vee_digits, CirclePoint, Digit, DigitWord, ExtReal};
use crate::error::{Error, Result};
use crate::exactnum::rational::{self, Rational};
use crate::exactnum::{j_matrix, n_matrix, n_product, Mat2, QuadTower, ZRoot2};
use crate::words::{jmath, minimal_period, pi_subst, ABWord, ChristoffelWord, Letter, OrientedWord};

/// `A = N_3 N_1`.
pub fn matrix_a() -> Mat2 {
    &n_matrix(3) * &n_matrix(1)
}

/// `A^v = N_1 N_3`.
pub fn matrix_a_vee() -> Mat2 {
    &n_matrix(1) * &n_matrix(3)
}

/// `B = N_2 J`.
pub fn matrix_b() -> Mat2 {
    &n_matrix(2) * &j_matrix()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohnMatrix {
    pub m: Mat2,
    pub source: ABWord,
}

/// Product of `A`s and `B`s following the letters of `w`.
pub fn cohn_matrix(w: &ABWord) -> Result<CohnMatrix> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let (a, b) = (matrix_a(), matrix_b());
    let m = w.letters().iter().fold(Mat2::identity(), |acc, l| match l {
        Letter::A => &acc * &a,
        _ => &acc * &b,
    });
    Ok(CohnMatrix { m, source: w.clone() })
}

/// As [`cohn_matrix`], with `a^v` mapped to `A^v`.
pub fn cohn_matrix_oriented(w: &OrientedWord) -> Mat2 {
    let (a, av, b) = (matrix_a(), matrix_a_vee(), matrix_b());
    w.letters().iter().fold(Mat2::identity(), |acc, l| match l {
        Letter::A => &acc * &a,
        Letter::AV => &acc * &av,
        Letter::B => &acc * &b,
    })
}

/// `N_{d1} ... N_{dk}` for the digits `Pi(j(w))`.
pub fn digit_matrix(w: &ABWord) -> Mat2 {
    n_product(&pi_subst(&jmath(w)))
}

/// `Tr/4` for even words, `Tr/(2 sqrt 2)` for odd words.
pub fn markoff_number(w: &ABWord) -> Result<BigInt> {
    let tr = cohn_matrix(w)?.m.trace();
    let m = if w.is_even() {
        tr.scale(&rational::rat(1, 4))
    } else {
        tr.scale(&rational::rat(1, 4)) * ZRoot2::sqrt2()
    };
    if m.is_integer() && m.rat.is_positive() {
        Ok(m.rat.to_integer())
    } else {
        Err(Error::NonIntegralTrace(tr.to_string()))
    }
}

/// Whether the lower-left entry of `N(w)` equals `Tr N(w) / (2 sqrt 2)`.
pub fn q_trace_identity_check(w: &ABWord) -> bool {
    match cohn_matrix(w) {
        Ok(c) => {
            let rhs = c.m.trace() * ZRoot2::sqrt2().scale(&rational::rat(1, 4));
            *c.m.q() == rhs
        }
        Err(_) => false,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum MarkoffKind {
    /// Even words; `L^2 = 4 - 1/m^2`.
    X,
    /// Odd words; `L^2 = 4 - 2/m^2`.
    Y,
}

impl fmt::Display for MarkoffKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MarkoffKind::X => "x",
            MarkoffKind::Y => "y",
        })
    }
}

/// One value of the spectrum below 2 with its sources.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectrumEntry {
    pub l_squared: Rational,
    pub markoff_number: BigInt,
    pub kind: MarkoffKind,
    pub word: ChristoffelWord,
    pub period: DigitWord,
}

impl SpectrumEntry {
    /// `L` as an exact tower element.
    pub fn value(&self) -> QuadTower {
        QuadTower::sqrt_rational(&self.l_squared)
    }

    pub fn decimal(&self, digits: usize) -> String {
        rational::sqrt_to_decimal(&self.l_squared, digits)
    }

    /// `sqrt(N)/D` form of `L`.
    pub fn radical(&self) -> String {
        sqrt_rational_display(&self.l_squared)
    }

    pub fn period_string(&self) -> String {
        self.period.period().unwrap_or_default().iter().map(|d| d.to_string()).collect()
    }

    pub fn to_json_value(&self, digits: usize) -> serde_json::Value {
        serde_json::json!({
            "word": self.word.word.to_string(),
            "slope": { "t": self.word.t.to_string(), "s": self.word.s.to_string() },
            "parity": if self.word.is_even() { "even" } else { "odd" },
            "kind": self.kind.to_string(),
            "markoff_number": self.markoff_number.to_string(),
            "L_squared": rational::to_json_value(&self.l_squared),
            "L_radical": self.radical(),
            "L_decimal": self.decimal(digits),
            "minimal_period": self.period_string(),
        })
    }
}

/// Renders `sqrt(r)` as `sqrt(N)/D` with integers `N`, `D`; perfect
/// squares print plainly.
pub fn sqrt_rational_display(r: &Rational) -> String {
    let (n, d) = (r.numer().clone(), r.denom().clone());
    let (num, den) = if rational::is_perfect_square(&d) {
        (n, rational::isqrt(&d))
    } else {
        (&n * &d, d)
    };
    let root = if rational::is_perfect_square(&num) {
        rational::isqrt(&num).to_string()
    } else {
        format!("sqrt({num})")
    };
    if den.is_one() {
        root
    } else {
        format!("{root}/{den}")
    }
}

/// Exact Lagrange value of the point attached to a lower Christoffel word.
pub fn lagrange_of_christoffel(w: &ChristoffelWord) -> Result<SpectrumEntry> {
    let m = markoff_number(&w.word)?;
    let n = cohn_matrix(&w.word)?.m;
    let m_r = Rational::from_integer(m.clone());
    let (kind, l_squared) = if w.is_even() {
        (MarkoffKind::X, rational::int(4) - Rational::one() / (&m_r * &m_r))
    } else {
        (MarkoffKind::Y, rational::int(4) - rational::int(2) / (&m_r * &m_r))
    };
    // q from N(w): sqrt(2) m for even words, m for odd words
    let q = n.q().clone();
    let expected_q = if w.is_even() { ZRoot2::new(Rational::zero(), m_r.clone()) } else { ZRoot2::from_rational(m_r) };
    assert_eq!(q, expected_q, "lower-left entry of N({}) is not the Markoff q", w.word);
    let q2 = q.square();
    assert!(q2.is_rational());
    assert_eq!(l_squared, rational::int(4) - rational::int(2) / &q2.rat);
    Ok(SpectrumEntry { l_squared, markoff_number: m, kind, word: w.clone(), period: minimal_period(&w.word)? })
}

/// `L(^inf Pi | Pi^inf) = sqrt(Tr^2 - 4 det) / (sqrt 2 q)`.
pub fn lagrange_periodic(period: &[Digit]) -> ExtReal {
    assert!(!period.is_empty(), "empty period");
    let n = n_product(period);
    if n.q().is_zero() {
        return ExtReal::Infinity;
    }
    let root = QuadTower::sqrt_int(&discriminant(&n));
    let den = QuadTower::from_zroot2(n.q() * &ZRoot2::sqrt2());
    ExtReal::Finite(&root / &den)
}

/// `L(T)` for the doubly infinite sequence with the given period: the
/// largest section value over all rotations of the period and of its image
/// under 1 <-> 3.
///
/// The discriminant is shared by all of them, so the maximum sits at the
/// smallest lower-left entry.
pub fn lagrange_doubly_periodic(period: &[Digit]) -> ExtReal {
    assert!(!period.is_empty(), "empty period");
    let disc = discriminant(&n_product(period));
    let mut q_min: Option<ZRoot2> = None;
    for p in [period.to_vec(), vee_digits(period)] {
        for i in 0..p.len() {
            let mut r = p.clone();
            r.rotate_left(i);
            let n = n_product(&r);
            debug_assert_eq!(discriminant(&n), disc);
            let q = n.q().clone();
            if q.is_zero() {
                return ExtReal::Infinity;
            }
            if q_min.as_ref().is_none_or(|m| q < *m) {
                q_min = Some(q);
            }
        }
    }
    let den = QuadTower::from_zroot2(q_min.unwrap() * ZRoot2::sqrt2());
    ExtReal::Finite(&QuadTower::sqrt_int(&disc) / &den)
}

/// Exact coordinates of the purely periodic point with the given period.
pub fn fixed_point_coordinates(period: &[Digit]) -> CirclePoint {
    point_from_norm(&periodic_norm(period))
}
