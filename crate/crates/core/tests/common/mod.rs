#![allow(dead_code)]

use num_bigint::BigInt;
use romik::dynamics::{parse_digits, Digit, DigitWord};
use romik::exactnum::rational::rat;
use romik::QuadTower;

/// One row of the table of the ten smallest Lagrange values.
pub struct Row {
    pub word: &'static str,
    pub period: &'static str,
    pub kind: &'static str,
    pub m: u64,
    pub l2: (i64, i64),
    pub decimal: &'static str,
    /// `x = x0 + x1 sqrt(r)`, `y = y0 + y1 sqrt(r)`.
    pub point: (i64, (i64, i64), (i64, i64), (i64, i64), (i64, i64)),
}

pub const TABLE: [Row; 10] = [
    Row { word: "b", period: "2", kind: "y", m: 1, l2: (2, 1), decimal: "1.414213562", point: (2, (0, 1), (1, 2), (0, 1), (1, 2)) },
    Row { word: "a", period: "31", kind: "x", m: 1, l2: (3, 1), decimal: "1.732050808", point: (3, (1, 2), (0, 1), (0, 1), (1, 2)) },
    Row { word: "ab", period: "312132", kind: "y", m: 3, l2: (34, 9), decimal: "1.943650632", point: (34, (0, 1), (3, 34), (0, 1), (5, 34)) },
    Row { word: "abb", period: "3122", kind: "x", m: 5, l2: (99, 25), decimal: "1.989974874", point: (11, (-2, 25), (9, 50), (3, 50), (6, 25)) },
    Row { word: "aab", period: "3131213132", kind: "y", m: 11, l2: (482, 121), decimal: "1.995863491", point: (482, (0, 1), (11, 482), (0, 1), (19, 482)) },
    Row { word: "abbb", period: "3122213222", kind: "y", m: 17, l2: (1154, 289), decimal: "1.998269147", point: (1154, (-6, 65), (7, 390), (14, 195), (3, 130)) },
    Row { word: "aaab", period: "31313121313132", kind: "y", m: 41, l2: (6722, 1681), decimal: "1.999702536", point: (6722, (0, 1), (41, 6722), (0, 1), (71, 6722)) },
    Row { word: "abbbb", period: "312222", kind: "x", m: 29, l2: (3363, 841), decimal: "1.999702713", point: (3363, (-161, 1706), (9, 853), (63, 853), (23, 1706)) },
    Row { word: "ababb", period: "31213221323122", kind: "y", m: 59, l2: (13922, 3481), decimal: "1.999856358", point: (13922, (-570, 7033), (71, 14066), (426, 7033), (95, 14066)) },
    Row { word: "aabab", period: "31312132", kind: "x", m: 65, l2: (16899, 4225), decimal: "1.999940828", point: (16899, (-28, 4225), (33, 8450), (33, 8450), (28, 4225)) },
];

impl Row {
    pub fn digits(&self) -> Vec<Digit> {
        parse_digits(self.period).unwrap()
    }

    pub fn point_word(&self) -> DigitWord {
        DigitWord::purely_periodic(self.digits()).unwrap()
    }

    pub fn lagrange(&self) -> QuadTower {
        QuadTower::sqrt_rational(&rat(self.l2.0, self.l2.1))
    }

    /// The listed point, built from its closed form.
    pub fn closed_form(&self) -> (QuadTower, QuadTower) {
        let (r, (x0n, x0d), (x1n, x1d), (y0n, y0d), (y1n, y1d)) = self.point;
        let root = QuadTower::sqrt_int(&BigInt::from(r));
        let f = |bn, bd, cn, cd| &QuadTower::from_rational(rat(bn, bd)) + &(&root * &QuadTower::from_rational(rat(cn, cd)));
        (f(x0n, x0d, x1n, x1d), f(y0n, y0d, y1n, y1d))
    }
}
