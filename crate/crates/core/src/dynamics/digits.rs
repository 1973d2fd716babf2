//! Finite and eventually periodic digit sequences over {1, 2, 3}.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Digit = u8;

/// The digit involution 1 <-> 3, 2 fixed.
pub fn vee_digit(d: Digit) -> Digit {
    4 - d
}

pub fn vee_digits(ds: &[Digit]) -> Vec<Digit> {
    ds.iter().map(|&d| vee_digit(d)).collect()
}

pub fn check_digits(ds: &[Digit]) -> Result<()> {
    match ds.iter().find(|&&d| !(1..=3).contains(&d)) {
        Some(&d) => Err(Error::InvalidDigit(d as u32)),
        None => Ok(()),
    }
}

/// Parses `3122`, `3,1,2,2` or `3 1 2 2`.
pub fn parse_digits(s: &str) -> Result<Vec<Digit>> {
    let mut out = Vec::new();
    for ch in s.chars() {
        match ch {
            '1'..='3' => out.push(ch as u8 - b'0'),
            ',' | ' ' | '\t' => {}
            '0'..='9' => return Err(Error::InvalidDigit(ch as u32 - '0' as u32)),
            _ => return Err(Error::Parse(format!("unexpected character {ch:?} in digit list"))),
        }
    }
    Ok(out)
}

/// Shortest `r` with `w = r^k`.
pub fn primitive_root<T: PartialEq + Clone>(w: &[T]) -> Vec<T> {
    let n = w.len();
    for p in 1..=n {
        if n % p == 0 && (p..n).all(|i| w[i] == w[i - p]) {
            return w[..p].to_vec();
        }
    }
    w.to_vec()
}

/// A digit sequence `head` followed by `period` repeated forever, or a
/// finite word when `period` is `None`.
///
/// Stored canonically: the period is primitive and the head is as short as
/// possible.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DigitWord {
    head: Vec<Digit>,
    period: Option<Vec<Digit>>,
}

impl DigitWord {
    pub fn finite(head: Vec<Digit>) -> Result<Self> {
        check_digits(&head)?;
        Ok(DigitWord { head, period: None })
    }

    pub fn periodic(head: Vec<Digit>, period: Vec<Digit>) -> Result<Self> {
        check_digits(&head)?;
        check_digits(&period)?;
        if period.is_empty() {
            return Err(Error::EmptyWord);
        }
        let mut head = head;
        let mut period = primitive_root(&period);
        while let (Some(&h), Some(&p)) = (head.last(), period.last()) {
            if h != p {
                break;
            }
            head.pop();
            period.rotate_right(1);
        }
        Ok(DigitWord { head, period: Some(period) })
    }

    pub fn purely_periodic(period: Vec<Digit>) -> Result<Self> {
        Self::periodic(Vec::new(), period)
    }

    pub fn head(&self) -> &[Digit] {
        &self.head
    }

    pub fn period(&self) -> Option<&[Digit]> {
        self.period.as_deref()
    }

    pub fn is_purely_periodic(&self) -> bool {
        self.head.is_empty() && self.period.is_some()
    }

    /// The `i`-th digit (0-based), `None` past the end of a finite word.
    pub fn digit_at(&self, i: usize) -> Option<Digit> {
        if i < self.head.len() {
            return Some(self.head[i]);
        }
        let p = self.period.as_ref()?;
        Some(p[(i - self.head.len()) % p.len()])
    }

    pub fn prefix(&self, k: usize) -> Vec<Digit> {
        (0..k).map_while(|i| self.digit_at(i)).collect()
    }

    /// Drops the first `k` digits.
    pub fn shift(&self, k: usize) -> DigitWord {
        if k <= self.head.len() {
            let head = self.head[k..].to_vec();
            return match &self.period {
                Some(p) => DigitWord::periodic(head, p.clone()).unwrap(),
                None => DigitWord { head, period: None },
            };
        }
        match &self.period {
            Some(p) => {
                let mut rot = p.clone();
                rot.rotate_left((k - self.head.len()) % p.len());
                DigitWord { head: Vec::new(), period: Some(rot) }
            }
            None => DigitWord { head: Vec::new(), period: None },
        }
    }

    /// Image under 1 <-> 3.
    pub fn vee(&self) -> DigitWord {
        DigitWord { head: vee_digits(&self.head), period: self.period.as_ref().map(|p| vee_digits(p)) }
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::json!({
            "head": self.head,
            "period": self.period,
        })
    }
}

fn join(ds: &[Digit]) -> String {
    ds.iter().map(|d| d.to_string()).collect()
}

impl fmt::Display for DigitWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.head.iter().map(|d| d.to_string()).collect();
        if let Some(p) = &self.period {
            if p.len() == 1 {
                parts.push(format!("{}^inf", p[0]));
            } else {
                parts.push(format!("({})^inf", join(p)));
            }
        }
        write!(f, "[{}]", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        let w = DigitWord::periodic(vec![2, 3, 1], vec![3, 1, 3, 1]).unwrap();
        assert_eq!(w.head(), &[2]);
        assert_eq!(w.period(), Some(&[3, 1][..]));
        let w = DigitWord::periodic(vec![1, 3, 1], vec![3, 1]).unwrap();
        assert!(w.is_purely_periodic());
        assert_eq!(w.period(), Some(&[1, 3][..]));
        let w = DigitWord::periodic(vec![2, 2, 2], vec![2]).unwrap();
        assert!(w.is_purely_periodic());
        assert_eq!(w.to_string(), "[2^inf]");
        let w = DigitWord::periodic(vec![1, 1], vec![3]).unwrap();
        assert_eq!(w.to_string(), "[1,1,3^inf]");
    }

    #[test]
    fn shift_and_digits() {
        let w = DigitWord::periodic(vec![1], vec![3, 1, 2, 2]).unwrap();
        assert_eq!(w.prefix(7), vec![1, 3, 1, 2, 2, 3, 1]);
        assert_eq!(w.shift(3).period(), Some(&[2, 2, 3, 1][..]));
        assert_eq!(w.vee().prefix(3), vec![3, 1, 3]);
    }

    #[test]
    fn parsing() {
        assert_eq!(parse_digits("3,1,2 2").unwrap(), vec![3, 1, 2, 2]);
        assert!(parse_digits("34").is_err());
        assert!(DigitWord::purely_periodic(vec![]).is_err());
    }
}
