//! Christoffel words and the Christoffel tree.

use std::collections::VecDeque;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::{ABWord, Letter};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Kind {
    Lower,
    Upper,
}

/// A Christoffel word of slope `t/s`: `t` letters b and `s` letters a.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ChristoffelWord {
    pub word: ABWord,
    pub t: u64,
    pub s: u64,
    pub kind: Kind,
}

impl ChristoffelWord {
    pub fn is_trivial(&self) -> bool {
        self.word.len() < 2
    }

    pub fn is_even(&self) -> bool {
        self.word.is_even()
    }

    pub fn slope(&self) -> (u64, u64) {
        (self.t, self.s)
    }
}

/// The lattice path word of slope `t/s` below (lower) or above (upper) the
/// segment from (0,0) to (s,t).
pub fn christoffel(t: u64, s: u64, kind: Kind) -> Result<ChristoffelWord> {
    if t.gcd(&s) != 1 {
        return Err(Error::NotCoprime(t, s));
    }
    let n = t + s;
    // letter k is b when the segment crosses a horizontal line in step k
    let lower: Vec<Letter> = (0..n)
        .map(|k| {
            let before = (k as u128 * t as u128) / n as u128;
            let after = ((k + 1) as u128 * t as u128) / n as u128;
            if after > before {
                Letter::B
            } else {
                Letter::A
            }
        })
        .collect();
    let word = match kind {
        Kind::Lower => ABWord(lower),
        Kind::Upper => ABWord(lower).reverse(),
    };
    Ok(ChristoffelWord { word, t, s, kind })
}

/// One node `(u, v)` of the Christoffel tree, carrying `w = uv`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChristoffelNode {
    pub u: ChristoffelWord,
    pub v: ChristoffelWord,
    pub w: ChristoffelWord,
    pub depth: usize,
}

fn lower(word: ABWord) -> ChristoffelWord {
    let t = word.count_b() as u64;
    let s = word.count_a() as u64;
    ChristoffelWord { word, t, s, kind: Kind::Lower }
}

fn root_pair() -> (ChristoffelWord, ChristoffelWord) {
    (lower(ABWord(vec![Letter::A])), lower(ABWord(vec![Letter::B])))
}

/// Descends the Christoffel tree by mediants to slope `t/s`; returns the
/// node whose product is the lower Christoffel word.
fn descend(t: u64, s: u64) -> Result<(ChristoffelWord, ChristoffelWord)> {
    if t.gcd(&s) != 1 {
        return Err(Error::NotCoprime(t, s));
    }
    if t == 0 || s == 0 {
        return Err(Error::TrivialWord(if t == 0 { "a".into() } else { "b".into() }));
    }
    let (mut u, mut v) = root_pair();
    loop {
        let (mt, ms) = (u.t + v.t, u.s + v.s);
        // compare t/s with mt/ms
        match (t as u128 * ms as u128).cmp(&(mt as u128 * s as u128)) {
            std::cmp::Ordering::Equal => return Ok((u, v)),
            std::cmp::Ordering::Less => {
                let uv = lower(u.word.concat(&v.word));
                v = uv;
            }
            std::cmp::Ordering::Greater => {
                let uv = lower(u.word.concat(&v.word));
                u = uv;
            }
        }
    }
}

/// Lower Christoffel word built by the mediant recursion instead of the
/// lattice path.
pub fn christoffel_by_mediants(t: u64, s: u64) -> Result<ChristoffelWord> {
    match (t, s) {
        (0, 1) => Ok(root_pair().0),
        (1, 0) => Ok(root_pair().1),
        _ => {
            let (u, v) = descend(t, s)?;
            Ok(lower(u.word.concat(&v.word)))
        }
    }
}

/// The unique factorization `w = uv` into lower Christoffel words.
pub fn standard_factorization(w: &ChristoffelWord) -> Result<(ChristoffelWord, ChristoffelWord)> {
    if w.is_trivial() {
        return Err(Error::TrivialWord(w.word.to_string()));
    }
    if w.kind != Kind::Lower {
        return Err(Error::NotChristoffel(w.word.to_string()));
    }
    descend(w.t, w.s)
}

pub fn is_lower_christoffel(w: &ABWord) -> bool {
    let t = w.count_b() as u64;
    let s = w.count_a() as u64;
    match christoffel(t, s, Kind::Lower) {
        Ok(c) => c.word == *w,
        Err(_) => false,
    }
}

/// Nodes of the Christoffel tree at depths `0..=depth`, breadth first,
/// left child `(u, uv)` before right child `(uv, v)`.
pub fn christoffel_tree(depth: usize) -> Vec<ChristoffelNode> {
    let (a, b) = root_pair();
    let mut out = Vec::new();
    let mut queue = VecDeque::from([(a, b, 0usize)]);
    while let Some((u, v, d)) = queue.pop_front() {
        let w = lower(u.word.concat(&v.word));
        if d < depth {
            queue.push_back((u.clone(), w.clone(), d + 1));
            queue.push_back((w.clone(), v.clone(), d + 1));
        }
        out.push(ChristoffelNode { u, v, w, depth: d });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lw(t: u64, s: u64) -> String {
        christoffel(t, s, Kind::Lower).unwrap().word.to_string()
    }

    #[test]
    fn slope_four_sevenths() {
        assert_eq!(lw(4, 7), "aabaabaabab");
        assert_eq!(christoffel(4, 7, Kind::Upper).unwrap().word.to_string(), "babaabaabaa");
        assert_eq!(lw(1, 1), "ab");
        assert_eq!(lw(0, 1), "a");
        assert_eq!(lw(1, 0), "b");
        assert_eq!(christoffel(2, 4, Kind::Lower), Err(Error::NotCoprime(2, 4)));
        assert!(christoffel(0, 0, Kind::Lower).is_err());
    }

    #[test]
    fn factorizations() {
        let f = |t, s| {
            let (u, v) = standard_factorization(&christoffel(t, s, Kind::Lower).unwrap()).unwrap();
            (u.word.to_string(), v.word.to_string())
        };
        assert_eq!(f(1, 1), ("a".into(), "b".into()));
        assert_eq!(f(1, 2), ("a".into(), "ab".into()));
        assert_eq!(f(2, 1), ("ab".into(), "b".into()));
        assert!(standard_factorization(&christoffel(0, 1, Kind::Lower).unwrap()).is_err());
    }

    #[test]
    fn two_constructions_agree() {
        for n in 1..=25u64 {
            for t in 0..=n {
                let s = n - t;
                if t.gcd(&s) == 1 {
                    assert_eq!(christoffel(t, s, Kind::Lower).unwrap(), christoffel_by_mediants(t, s).unwrap());
                }
            }
        }
    }

    #[test]
    fn tree_shape() {
        let nodes = christoffel_tree(2);
        let words: Vec<String> = nodes.iter().map(|n| n.w.word.to_string()).collect();
        assert_eq!(words, ["ab", "aab", "abb", "aaab", "aabab", "ababb", "abbb"]);
    }
}
