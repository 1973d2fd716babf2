//! The Markoff tree for `2x^2 + y1^2 + y2^2 = 4 x y1 y2`, its link with
//! Christoffel words, and the spectrum below 2.

use std::cmp::{Ordering, Reverse};
use std::collections::{BTreeSet, BinaryHeap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cohn::{lagrange_of_christoffel, markoff_number, SpectrumEntry};
use crate::error::{Error, Result};
use crate::words::{christoffel, standard_factorization, ChristoffelWord, Kind};

/// `(x; y1, y2)` with the unordered pair stored as `y1 >= y2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MarkoffTriple {
    x: BigInt,
    y1: BigInt,
    y2: BigInt,
}

pub fn is_markoff(x: &BigInt, y1: &BigInt, y2: &BigInt) -> bool {
    x.is_positive()
        && y1.is_positive()
        && y2.is_positive()
        && BigInt::from(2) * x * x + y1 * y1 + y2 * y2 == BigInt::from(4) * x * y1 * y2
}

impl MarkoffTriple {
    pub fn new(x: BigInt, y1: BigInt, y2: BigInt) -> Result<Self> {
        if !is_markoff(&x, &y1, &y2) {
            return Err(Error::InvalidTriple(x.to_string(), y1.to_string(), y2.to_string()));
        }
        Ok(Self::raw(x, y1, y2))
    }

    pub fn from_i64(x: i64, y1: i64, y2: i64) -> Result<Self> {
        Self::new(x.into(), y1.into(), y2.into())
    }

    fn raw(x: BigInt, y1: BigInt, y2: BigInt) -> Self {
        if y1 >= y2 {
            MarkoffTriple { x, y1, y2 }
        } else {
            MarkoffTriple { x, y1: y2, y2: y1 }
        }
    }

    pub fn singular() -> Self {
        Self::raw(BigInt::one(), BigInt::one(), BigInt::one())
    }

    pub fn root() -> Self {
        Self::raw(1.into(), 3.into(), 1.into())
    }

    pub fn x(&self) -> &BigInt {
        &self.x
    }

    /// The larger y.
    pub fn y1(&self) -> &BigInt {
        &self.y1
    }

    /// The smaller y.
    pub fn y2(&self) -> &BigInt {
        &self.y2
    }

    pub fn is_singular(&self) -> bool {
        *self == Self::singular()
    }

    fn sum(&self) -> BigInt {
        &self.x + &self.y1 + &self.y2
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::json!({ "x": self.x.to_string(), "y1": self.y1.to_string(), "y2": self.y2.to_string() })
    }
}

impl fmt::Display for MarkoffTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}; {}, {})", self.x, self.y1, self.y2)
    }
}

impl Serialize for MarkoffTriple {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.x.to_string(), self.y1.to_string(), self.y2.to_string()].serialize(s)
    }
}

impl<'de> Deserialize<'de> for MarkoffTriple {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = <[String; 3]>::deserialize(d)?;
        let p = |s: &str| s.parse::<BigInt>().map_err(serde::de::Error::custom);
        MarkoffTriple::new(p(&v[0])?, p(&v[1])?, p(&v[2])?).map_err(serde::de::Error::custom)
    }
}

/// The three neighbours: replace x, then the larger y, then the smaller y.
pub fn markoff_neighbors(t: &MarkoffTriple) -> [MarkoffTriple; 3] {
    let (x, y1, y2) = (&t.x, &t.y1, &t.y2);
    [
        MarkoffTriple::raw(BigInt::from(2) * y1 * y2 - x, y1.clone(), y2.clone()),
        MarkoffTriple::raw(x.clone(), BigInt::from(4) * x * y2 - y1, y2.clone()),
        MarkoffTriple::raw(x.clone(), y1.clone(), BigInt::from(4) * x * y1 - y2),
    ]
}

/// Neighbours further from the singular triple, left to right.
pub fn markoff_children(t: &MarkoffTriple) -> Result<Vec<MarkoffTriple>> {
    if !is_markoff(&t.x, &t.y1, &t.y2) {
        return Err(Error::InvalidTriple(t.x.to_string(), t.y1.to_string(), t.y2.to_string()));
    }
    let s = t.sum();
    let mut out: Vec<MarkoffTriple> = Vec::with_capacity(2);
    for n in markoff_neighbors(t) {
        if n.sum() > s && !out.contains(&n) {
            out.push(n);
        }
    }
    Ok(out)
}

/// A node of the enumerated tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarkoffNode {
    pub triple: MarkoffTriple,
    pub depth: usize,
    /// The coordinate that differs from the parent.
    pub new_entry: BigInt,
}

fn entries(t: &MarkoffTriple) -> [&BigInt; 3] {
    [&t.x, &t.y1, &t.y2]
}

/// The nonsingular tree rooted at `(1; 3, 1)` down to `depth`, breadth
/// first and left to right.
pub fn enumerate_markoff_nodes(depth: usize) -> Vec<MarkoffNode> {
    let mut level = vec![MarkoffNode { triple: MarkoffTriple::root(), depth: 0, new_entry: BigInt::from(3) }];
    let mut out = Vec::new();
    for d in 1..=depth {
        let next: Vec<MarkoffNode> = level
            .par_iter()
            .flat_map_iter(|p| {
                let kids = markoff_children(&p.triple).expect("tree triples satisfy the equation");
                kids.into_iter().map(move |c| {
                    let fresh = entries(&c)
                        .into_iter()
                        .find(|v| !entries(&p.triple).contains(v))
                        .cloned()
                        .expect("a child differs from its parent");
                    // the new entry exceeds every entry of the parent
                    assert!(fresh > p.triple.y1 && fresh > p.triple.x, "Markoff numbers failed to grow at {} -> {c}", p.triple);
                    MarkoffNode { triple: c, depth: d, new_entry: fresh }
                })
            })
            .collect();
        out.append(&mut level);
        level = next;
    }
    out.append(&mut level);
    out
}

pub fn enumerate_markoff(depth: usize) -> Vec<MarkoffTriple> {
    enumerate_markoff_nodes(depth).into_iter().map(|n| n.triple).collect()
}

/// Sorted initial segments of the x values and the larger y values.
///
/// A value is reported only below the smallest entry first appearing at
/// depth `depth + 1`, so nothing deeper in the tree can fill a gap.
pub fn markoff_sets(depth: usize) -> (Vec<BigInt>, Vec<BigInt>) {
    let nodes = enumerate_markoff_nodes(depth + 1);
    let bound = nodes.iter().filter(|n| n.depth == depth + 1).map(|n| &n.new_entry).min().cloned().unwrap();
    let mut xs: BTreeSet<BigInt> = BTreeSet::from([BigInt::one()]);
    let mut ys: BTreeSet<BigInt> = BTreeSet::from([BigInt::one()]);
    for n in &nodes {
        xs.insert(n.triple.x.clone());
        ys.insert(n.triple.y1.clone());
    }
    (xs.into_iter().filter(|v| *v < bound).collect(), ys.into_iter().filter(|v| *v < bound).collect())
}

/// `(m(u); m(v), m(w))` rearranged so that x comes from the even word of
/// `w = uv`.
pub fn triple_from_christoffel(w: &ChristoffelWord) -> Result<MarkoffTriple> {
    if w.is_trivial() {
        return Err(Error::TrivialWord(w.word.to_string()));
    }
    let (u, v) = standard_factorization(w)?;
    let words = [&u, &v, w];
    let even: Vec<_> = words.iter().filter(|c| c.is_even()).collect();
    assert_eq!(even.len(), 1, "exactly one even word in a standard triple");
    let x = markoff_number(&even[0].word)?;
    let ys: Vec<BigInt> = words.iter().filter(|c| !c.is_even()).map(|c| markoff_number(&c.word)).collect::<Result<_>>()?;
    MarkoffTriple::new(x, ys[0].clone(), ys[1].clone())
}

struct HeapItem {
    entry: SpectrumEntry,
    pair: Option<(ChristoffelWord, ChristoffelWord)>,
}

impl PartialEq for HeapItem {
    fn eq(&self, o: &Self) -> bool {
        self.cmp(o) == Ordering::Equal
    }
}
impl Eq for HeapItem {}
impl PartialOrd for HeapItem {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}
impl Ord for HeapItem {
    fn cmp(&self, o: &Self) -> Ordering {
        self.entry.l_squared.cmp(&o.entry.l_squared).then_with(|| self.entry.word.word.cmp(&o.entry.word.word))
    }
}

fn node_item(u: ChristoffelWord, v: ChristoffelWord) -> Result<HeapItem> {
    let w = u.word.concat(&v.word);
    let (t, s) = (u.t + v.t, u.s + v.s);
    let cw = christoffel(t, s, Kind::Lower)?;
    debug_assert_eq!(cw.word, w);
    Ok(HeapItem { entry: lagrange_of_christoffel(&cw)?, pair: Some((u, v)) })
}

/// The `n` smallest values of the spectrum, ascending.
///
/// Best-first walk of the Christoffel tree: every edge is checked to
/// increase `L^2`, so popping in heap order yields the values in order.
pub fn spectrum_below_2(n: usize) -> Result<Vec<SpectrumEntry>> {
    let a = christoffel(0, 1, Kind::Lower)?;
    let b = christoffel(1, 0, Kind::Lower)?;
    let mut heap = BinaryHeap::new();
    heap.push(Reverse(HeapItem { entry: lagrange_of_christoffel(&a)?, pair: None }));
    heap.push(Reverse(HeapItem { entry: lagrange_of_christoffel(&b)?, pair: None }));
    heap.push(Reverse(node_item(a, b)?));
    let mut out: Vec<SpectrumEntry> = Vec::with_capacity(n);
    while out.len() < n {
        let Reverse(item) = heap.pop().expect("the tree is infinite");
        if let Some((u, v)) = item.pair {
            let w = ChristoffelWord { word: u.word.concat(&v.word), t: u.t + v.t, s: u.s + v.s, kind: Kind::Lower };
            for child in [node_item(u, w.clone())?, node_item(w, v)?] {
                assert!(child.entry.l_squared > item.entry.l_squared, "L^2 failed to grow below {}", item.entry.word.word);
                heap.push(Reverse(child));
            }
        }
        if let Some(last) = out.last() {
            assert!(item.entry.l_squared > last.l_squared, "repeated spectrum value at {}", item.entry.word.word);
        }
        out.push(item.entry);
    }
    Ok(out)
}
