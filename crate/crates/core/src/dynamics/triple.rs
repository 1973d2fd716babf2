//! Primitive Pythagorean triples and the Berggren trees.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::digits::{Digit, DigitWord};
use crate::error::{Error, Result};
use crate::exactnum::{berggren_inverse, berggren_matrix, Mat3, Vec3};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PythTriple {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
}

impl PythTriple {
    /// Checked constructor: `a^2 + b^2 = c^2`, `gcd = 1`, all nonnegative,
    /// `c >= 1`.
    pub fn new(a: BigInt, b: BigInt, c: BigInt) -> Result<Self> {
        let bad = || Error::NotPrimitive(a.to_string(), b.to_string(), c.to_string());
        if a.is_negative() || b.is_negative() || c < BigInt::one() {
            return Err(bad());
        }
        if &a * &a + &b * &b != &c * &c {
            return Err(bad());
        }
        if !a.gcd(&b).gcd(&c).is_one() {
            return Err(bad());
        }
        Ok(PythTriple { a, b, c })
    }

    pub fn from_i64(a: i64, b: i64, c: i64) -> Result<Self> {
        Self::new(a.into(), b.into(), c.into())
    }

    pub(crate) fn raw(a: BigInt, b: BigInt, c: BigInt) -> Self {
        PythTriple { a, b, c }
    }

    /// The seed `(1, 0, 1)`, i.e. the point (1, 0).
    pub fn seed_x() -> Self {
        Self::raw(1.into(), 0.into(), 1.into())
    }

    /// The seed `(0, 1, 1)`, i.e. the point (0, 1).
    pub fn seed_y() -> Self {
        Self::raw(0.into(), 1.into(), 1.into())
    }

    pub fn height(&self) -> &BigInt {
        &self.c
    }

    pub fn to_vec(&self) -> Vec3<BigInt> {
        Vec3([self.a.clone(), self.b.clone(), self.c.clone()])
    }

    pub fn from_vec(v: Vec3<BigInt>) -> Self {
        let [a, b, c] = v.0;
        Self::raw(a, b, c)
    }

    /// Swaps `a` and `b`.
    pub fn vee(&self) -> Self {
        Self::raw(self.b.clone(), self.a.clone(), self.c.clone())
    }

    pub fn apply(&self, m: &Mat3) -> Self {
        Self::from_vec(m.apply(&self.to_vec()))
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::json!({ "a": self.a.to_string(), "b": self.b.to_string(), "c": self.c.to_string() })
    }
}

impl fmt::Display for PythTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.c)
    }
}

#[derive(Serialize, Deserialize)]
struct TripleRepr {
    a: String,
    b: String,
    c: String,
}

impl Serialize for PythTriple {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        TripleRepr { a: self.a.to_string(), b: self.b.to_string(), c: self.c.to_string() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for PythTriple {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let r = TripleRepr::deserialize(d)?;
        let p = |s: &str| s.parse::<BigInt>().map_err(D::Error::custom);
        PythTriple::new(p(&r.a)?, p(&r.b)?, p(&r.c)?).map_err(D::Error::custom)
    }
}

/// Children `M_1 t, M_2 t, M_3 t`.
pub fn berggren_children(t: &PythTriple) -> [PythTriple; 3] {
    [1, 2, 3].map(|d| t.apply(&berggren_matrix(d)))
}

/// Where a Berggren path ends.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TreeRoot {
    /// `(1, 0, 1)`.
    SeedX,
    /// `(0, 1, 1)`.
    SeedY,
    /// `(3, 4, 5)`.
    Odd,
    /// `(4, 3, 5)`.
    Even,
}

/// Path `d1..dk` and root with `t = M_{d1} ... M_{dk} root`.
pub fn berggren_path(t: &PythTriple) -> Result<(Vec<Digit>, TreeRoot)> {
    let t = PythTriple::new(t.a.clone(), t.b.clone(), t.c.clone())?;
    let mut v = t;
    let mut path = Vec::new();
    loop {
        let root = match (v.a.clone().try_into(), v.b.clone().try_into(), v.c.clone().try_into()) {
            (Ok(1i64), Ok(0i64), Ok(1i64)) => Some(TreeRoot::SeedX),
            (Ok(0), Ok(1), Ok(1)) => Some(TreeRoot::SeedY),
            (Ok(3), Ok(4), Ok(5)) => Some(TreeRoot::Odd),
            (Ok(4), Ok(3), Ok(5)) => Some(TreeRoot::Even),
            _ => None,
        };
        if let Some(r) = root {
            return Ok((path, r));
        }
        let (d, parent) = (1..=3u8)
            .map(|d| (d, v.apply(&berggren_inverse(d))))
            .find(|(_, p)| p.a.is_positive() && p.b.is_positive())
            .expect("every primitive triple beyond the roots has a parent");
        debug_assert!(parent.c < v.c);
        path.push(d);
        v = parent;
    }
}

/// Rebuilds a triple from its path and root.
pub fn triple_from_path(path: &[Digit], root: TreeRoot) -> PythTriple {
    let start = match root {
        TreeRoot::SeedX => PythTriple::seed_x(),
        TreeRoot::SeedY => PythTriple::seed_y(),
        TreeRoot::Odd => PythTriple::raw(3.into(), 4.into(), 5.into()),
        TreeRoot::Even => PythTriple::raw(4.into(), 3.into(), 5.into()),
    };
    path.iter().rev().fold(start, |v, &d| v.apply(&berggren_matrix(d)))
}

/// Both digit expansions of a rational point; the seeds have a single
/// expansion, returned twice.
pub fn expand_rational(t: &PythTriple) -> Result<(DigitWord, DigitWord)> {
    let (path, root) = berggren_path(t)?;
    let with = |extra: u8, tail: u8| {
        let mut h = path.clone();
        h.push(extra);
        DigitWord::periodic(h, vec![tail]).unwrap()
    };
    Ok(match root {
        TreeRoot::SeedX => {
            let w = DigitWord::purely_periodic(vec![1]).unwrap();
            (w.clone(), w)
        }
        TreeRoot::SeedY => {
            let w = DigitWord::purely_periodic(vec![3]).unwrap();
            (w.clone(), w)
        }
        TreeRoot::Odd => (with(2, 1), with(3, 1)),
        TreeRoot::Even => (with(1, 3), with(2, 3)),
    })
}

/// Boundary triples `(M_{d1}..M_{dk} (1,0,1), M_{d1}..M_{dk} (0,1,1))` of
/// the cylinder of `digits`.
pub fn cylinder_bounds(digits: &[Digit]) -> (PythTriple, PythTriple) {
    let m = digits.iter().fold(Mat3::identity(), |acc, &d| &acc * &berggren_matrix(d));
    (PythTriple::seed_x().apply(&m), PythTriple::seed_y().apply(&m))
}

/// Triples of one tree level below `root` (level 0 is the root), in
/// digit order.
pub fn berggren_level(root: &PythTriple, level: usize) -> Vec<PythTriple> {
    let mut cur = vec![root.clone()];
    for _ in 0..level {
        cur = cur.iter().flat_map(berggren_children).collect();
    }
    cur
}

fn collect_subtree(t: PythTriple, max_h: &BigInt, out: &mut Vec<PythTriple>) {
    if &t.c > max_h {
        return;
    }
    let kids = berggren_children(&t);
    out.push(t);
    for k in kids {
        collect_subtree(k, max_h, out);
    }
}

/// All rational points with height at most `max_h`: the two seeds and both
/// Berggren trees. Sorted by `(c, a)`.
pub fn triples_up_to_height(max_h: &BigInt) -> Vec<PythTriple> {
    let mut out = Vec::new();
    if max_h < &BigInt::one() {
        return out;
    }
    out.push(PythTriple::seed_x());
    out.push(PythTriple::seed_y());
    // Heights grow strictly along every branch, so the tree walk can prune.
    let mut frontier = vec![PythTriple::raw(3.into(), 4.into(), 5.into()), PythTriple::raw(4.into(), 3.into(), 5.into())];
    for _ in 0..3 {
        let mut next = Vec::new();
        for t in frontier {
            if &t.c <= max_h {
                next.extend(berggren_children(&t));
                out.push(t);
            }
        }
        frontier = next;
    }
    let mut rest: Vec<PythTriple> = frontier
        .into_par_iter()
        .flat_map_iter(|t| {
            let mut v = Vec::new();
            collect_subtree(t, max_h, &mut v);
            v
        })
        .collect();
    out.append(&mut rest);
    out.sort_by(|x, y| (&x.c, &x.a).cmp(&(&y.c, &y.a)));
    out
}

pub fn is_interior(t: &PythTriple) -> bool {
    !t.a.is_zero() && !t.b.is_zero()
}
