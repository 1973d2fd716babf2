//! Points of the quarter circle, the map on them, heights and the
//! stereographic picture on `[0, inf]`.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;

use super::digits::{Digit, DigitWord};
use super::triple::PythTriple;
use crate::error::{Error, Result};
use crate::exactnum::rational::rat;
use crate::exactnum::{lorentz_pairing, n_matrix, n_product, Interval, Mat2, QuadTower, Rational, Vec3};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CirclePoint {
    pub x: QuadTower,
    pub y: QuadTower,
}

impl CirclePoint {
    /// Checked constructor.
    pub fn new(x: QuadTower, y: QuadTower) -> Result<Self> {
        if x.sign() < 0 || y.sign() < 0 {
            return Err(Error::NotOnQuarterCircle);
        }
        let r = x.try_mul(&x)?.try_add(&y.try_mul(&y)?)?;
        if r != QuadTower::one() {
            return Err(Error::NotOnQuarterCircle);
        }
        Ok(CirclePoint { x, y })
    }

    pub fn from_triple(t: &PythTriple) -> Self {
        let c = &t.c;
        CirclePoint {
            x: QuadTower::from_rational(Rational::new(t.a.clone(), c.clone())),
            y: QuadTower::from_rational(Rational::new(t.b.clone(), c.clone())),
        }
    }

    /// Mirror image `(y, x)`; its digits are the 1 <-> 3 swap.
    pub fn vee(&self) -> Self {
        CirclePoint { x: self.y.clone(), y: self.x.clone() }
    }

    /// `(x, y, 1)`.
    pub fn lift(&self) -> Vec3<QuadTower> {
        Vec3([self.x.clone(), self.y.clone(), QuadTower::one()])
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::json!({ "x": self.x.to_json_value(), "y": self.y.to_json_value() })
    }
}

impl fmt::Display for CirclePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// One step of the dynamical system.
pub fn romik_map(p: &CirclePoint) -> CirclePoint {
    let two = QuadTower::from_int(2);
    let three = QuadTower::from_int(3);
    let den = &(&three - &(&two * &p.x)) - &(&two * &p.y);
    assert!(den.sign() > 0, "denominator vanishes off the quarter circle");
    let nx = &(&two - &p.x) - &(&two * &p.y);
    let ny = &(&two - &(&two * &p.x)) - &p.y;
    CirclePoint { x: &nx.abs() / &den, y: &ny.abs() / &den }
}

/// Valid digits at `p`: two of them exactly at `x = 4/5` and `x = 3/5`.
pub fn digit(p: &CirclePoint) -> BTreeSet<Digit> {
    let c45 = p.x.exact_cmp(&QuadTower::from_rational(rat(4, 5)));
    let c35 = p.x.exact_cmp(&QuadTower::from_rational(rat(3, 5)));
    let v: &[Digit] = match (c45, c35) {
        (Ordering::Greater, _) => &[1],
        (Ordering::Equal, _) => &[1, 2],
        (_, Ordering::Greater) => &[2],
        (_, Ordering::Equal) => &[2, 3],
        _ => &[3],
    };
    v.iter().copied().collect()
}

/// First `n` digits along the orbit, taking the smaller digit at the two
/// boundary points.
pub fn orbit_digits(p: &CirclePoint, n: usize) -> Vec<Digit> {
    let mut out = Vec::with_capacity(n);
    let mut cur = p.clone();
    for _ in 0..n {
        out.push(*digit(&cur).iter().next().unwrap());
        cur = romik_map(&cur);
    }
    out
}

/// `delta(P; Z)^2 = -2 c <p, z>` with `p = (x, y, 1)`.
pub fn delta_squared(p: &CirclePoint, z: &PythTriple) -> QuadTower {
    let zv = Vec3([z.a.clone(), z.b.clone(), z.c.clone()].map(QuadTower::from_int));
    let pair = lorentz_pairing(&p.lift(), &zv);
    &QuadTower::from_int(z.c.clone() * -2) * &pair
}

/// `delta^2` as `c^2 |P - Z|^2`, computed from the Euclidean distance.
pub fn delta_squared_by_distance(p: &CirclePoint, z: &PythTriple) -> QuadTower {
    let c = QuadTower::from_int(z.c.clone());
    let dx = &(&p.x * &c) - &QuadTower::from_int(z.a.clone());
    let dy = &(&p.y * &c) - &QuadTower::from_int(z.b.clone());
    &(&dx * &dx) + &(&dy * &dy)
}

/// Exact `delta(P; Z)` when it lies in a quadratic tower, i.e. when
/// `delta^2` is rational.
pub fn delta(p: &CirclePoint, z: &PythTriple) -> Option<QuadTower> {
    delta_squared(p, z).as_rational().map(QuadTower::sqrt_rational)
}

/// Enclosure of `delta(P; Z)` at the given precision.
pub fn delta_interval(p: &CirclePoint, z: &PythTriple, prec: u32) -> Interval {
    delta_squared(p, z).to_interval(prec).sqrt().expect("delta^2 is nonnegative")
}

/// A point of `[0, inf]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExtReal {
    Finite(QuadTower),
    Infinity,
}

impl ExtReal {
    pub fn finite(&self) -> Option<&QuadTower> {
        match self {
            ExtReal::Finite(t) => Some(t),
            ExtReal::Infinity => None,
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, ExtReal::Infinity)
    }

    pub fn zero() -> Self {
        ExtReal::Finite(QuadTower::zero())
    }
}

impl From<QuadTower> for ExtReal {
    fn from(t: QuadTower) -> Self {
        ExtReal::Finite(t)
    }
}

impl PartialOrd for ExtReal {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl Ord for ExtReal {
    fn cmp(&self, o: &Self) -> Ordering {
        match (self, o) {
            (ExtReal::Infinity, ExtReal::Infinity) => Ordering::Equal,
            (ExtReal::Infinity, _) => Ordering::Greater,
            (_, ExtReal::Infinity) => Ordering::Less,
            (ExtReal::Finite(a), ExtReal::Finite(b)) => a.exact_cmp(b),
        }
    }
}

impl fmt::Display for ExtReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtReal::Finite(t) => write!(f, "{t}"),
            ExtReal::Infinity => write!(f, "inf"),
        }
    }
}

/// `||P|| = (1 - x + y) / (sqrt(2) x)`, infinite at (0, 1).
pub fn stereo_norm(p: &CirclePoint) -> ExtReal {
    if p.x.is_zero() {
        return ExtReal::Infinity;
    }
    let num = &(&QuadTower::one() - &p.x) + &p.y;
    ExtReal::Finite(&num / &(&QuadTower::sqrt2() * &p.x))
}

/// Inverse of [`stereo_norm`].
pub fn point_from_norm(t: &ExtReal) -> CirclePoint {
    match t {
        ExtReal::Infinity => CirclePoint { x: QuadTower::zero(), y: QuadTower::one() },
        ExtReal::Finite(t) => {
            let c = &(&QuadTower::sqrt2() * t) + &QuadTower::one();
            let c2 = &c * &c;
            let den = &QuadTower::one() + &c2;
            CirclePoint {
                x: &(&QuadTower::from_int(2) * &c) / &den,
                y: &(&c2 - &QuadTower::one()) / &den,
            }
        }
    }
}

/// Fractional-linear action of a 2x2 matrix on `[0, inf]`.
pub fn mobius(m: &Mat2, t: &ExtReal) -> ExtReal {
    let e = |i: usize, j: usize| QuadTower::from_zroot2(m.0[i][j].clone());
    let (num, den) = match t {
        ExtReal::Infinity => (e(0, 0), e(1, 0)),
        ExtReal::Finite(t) => (&(&e(0, 0) * t) + &e(0, 1), &(&e(1, 0) * t) + &e(1, 1)),
    };
    if den.is_zero() {
        ExtReal::Infinity
    } else {
        ExtReal::Finite(&num / &den)
    }
}

/// `||[d, P]|| = N_d ||P||`.
pub fn nd_action(d: Digit, t: &ExtReal) -> ExtReal {
    mobius(&n_matrix(d), t)
}

/// The map conjugate to [`romik_map`] under the stereographic norm.
pub fn treal(t: &ExtReal) -> ExtReal {
    let t = match t {
        ExtReal::Infinity => return ExtReal::Infinity,
        ExtReal::Finite(t) => t,
    };
    let r2 = QuadTower::sqrt2();
    let half_r2 = &r2 / &QuadTower::from_int(2);
    let one = QuadTower::one();
    let (num, den) = if t.exact_cmp(&half_r2) != Ordering::Greater {
        (t.clone(), &one - &(&r2 * t))
    } else if t.exact_cmp(&r2) != Ordering::Greater {
        (&r2 - t, &(&r2 * t) - &one)
    } else {
        return ExtReal::Finite(t - &r2);
    };
    if den.is_zero() {
        ExtReal::Infinity
    } else {
        ExtReal::Finite(&num / &den)
    }
}

/// Norm of the purely periodic point with the given period: the attracting
/// fixed point of `N_{d1} ... N_{dk}`.
pub fn periodic_norm(period: &[Digit]) -> ExtReal {
    assert!(!period.is_empty(), "empty period");
    let n = n_product(period);
    if n.q().is_zero() {
        // only 3^k has a vanishing lower-left entry
        return ExtReal::Infinity;
    }
    let disc = discriminant(&n);
    let p = QuadTower::from_zroot2(n.p().clone());
    let qp = QuadTower::from_zroot2(n.q_prime().clone());
    let q2 = QuadTower::from_zroot2(n.q().clone() * crate::exactnum::ZRoot2::from_int(2));
    let root = QuadTower::sqrt_int(&disc);
    ExtReal::Finite(&(&(&p - &qp) + &root) / &q2)
}

/// `Tr(N)^2 - 4 det(N)`, which is an integer for every digit product.
pub fn discriminant(n: &Mat2) -> BigInt {
    let tr = n.trace();
    let d = &(&tr * &tr) - &(&n.det() * &crate::exactnum::ZRoot2::from_int(4));
    assert!(d.is_integer(), "digit-product discriminant is not an integer: {d}");
    d.rat.to_integer()
}

/// Norm of an eventually periodic point.
pub fn word_norm(w: &DigitWord) -> Result<ExtReal> {
    let period = w.period().ok_or(Error::Parse("finite digit word does not name a point".into()))?;
    let tail = periodic_norm(period);
    Ok(mobius(&n_product(w.head()), &tail))
}

/// Exact coordinates of an eventually periodic point.
pub fn point_of_word(w: &DigitWord) -> Result<CirclePoint> {
    Ok(point_from_norm(&word_norm(w)?))
}

/// Norm interval `[lo, hi]` of the cylinder of `digits`.
pub fn cylinder_norm_interval(digits: &[Digit]) -> (ExtReal, ExtReal) {
    let n = n_product(digits);
    let at0 = mobius(&n, &ExtReal::zero());
    let at_inf = mobius(&n, &ExtReal::Infinity);
    if at0 <= at_inf {
        (at0, at_inf)
    } else {
        (at_inf, at0)
    }
}

/// Rational helper for callers working with plain integers.
pub fn point_from_ints(a: i64, b: i64, c: i64) -> CirclePoint {
    CirclePoint { x: QuadTower::from_rational(rat(a, c)), y: QuadTower::from_rational(rat(b, c)) }
}
