//! Elements `rat + irr*sqrt(2)` of the field Q(sqrt 2).

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::interval::Interval;
use super::rational::{self, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ZRoot2 {
    #[serde(with = "rational")]
    pub rat: Rational,
    #[serde(with = "rational")]
    pub irr: Rational,
}

impl ZRoot2 {
    pub fn new(rat: Rational, irr: Rational) -> Self {
        ZRoot2 { rat, irr }
    }

    pub fn from_rational(r: Rational) -> Self {
        ZRoot2 { rat: r, irr: Rational::zero() }
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        Self::from_rational(rational::int(n))
    }

    pub fn ints(a: i64, b: i64) -> Self {
        ZRoot2::new(rational::int(a), rational::int(b))
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn sqrt2() -> Self {
        ZRoot2::ints(0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.rat.is_zero() && self.irr.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.irr.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.irr.is_zero() && self.rat.is_integer()
    }

    /// True when the value lies in sqrt(2)*Z.
    pub fn is_sqrt2_integer(&self) -> bool {
        self.rat.is_zero() && self.irr.is_integer()
    }

    /// Galois conjugate `rat - irr*sqrt(2)`.
    pub fn conj(&self) -> Self {
        ZRoot2::new(self.rat.clone(), -self.irr.clone())
    }

    /// Field norm `rat^2 - 2 irr^2`.
    pub fn norm(&self) -> Rational {
        &self.rat * &self.rat - Rational::from_integer(BigInt::from(2)) * &self.irr * &self.irr
    }

    pub fn sign(&self) -> i32 {
        let sr = rational::sign(&self.rat);
        let si = rational::sign(&self.irr);
        if si == 0 {
            return sr;
        }
        if sr == 0 || sr == si {
            return si;
        }
        // opposite signs: compare rat^2 with 2 irr^2
        let n = rational::sign(&self.norm());
        if n > 0 {
            sr
        } else {
            si
        }
    }

    pub fn abs(&self) -> Self {
        if self.sign() < 0 {
            -self
        } else {
            self.clone()
        }
    }

    pub fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm();
        Some(ZRoot2::new(&self.rat / &n, -(&self.irr / &n)))
    }

    pub fn checked_div(&self, other: &Self) -> Option<Self> {
        other.recip().map(|r| self * &r)
    }

    pub fn scale(&self, k: &Rational) -> Self {
        ZRoot2::new(&self.rat * k, &self.irr * k)
    }

    pub fn square(&self) -> Self {
        self * self
    }

    pub fn to_interval(&self, prec: u32) -> Interval {
        let r = Interval::from_rational(&self.rat, prec);
        if self.irr.is_zero() {
            return r;
        }
        let s = Interval::from_rational(&self.irr, prec).mul(&Interval::sqrt_int(&BigInt::from(2), prec));
        r.add(&s)
    }

    pub fn to_f64(&self) -> f64 {
        self.to_interval(80).mid_f64()
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::json!({
            "rat": rational::to_json_value(&self.rat),
            "irr": rational::to_json_value(&self.irr),
        })
    }
}

impl PartialOrd for ZRoot2 {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ZRoot2 {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self - other).sign().cmp(&0)
    }
}

impl From<i64> for ZRoot2 {
    fn from(n: i64) -> Self {
        ZRoot2::from_int(n)
    }
}

impl From<Rational> for ZRoot2 {
    fn from(r: Rational) -> Self {
        ZRoot2::from_rational(r)
    }
}

impl<'a> Add<&'a ZRoot2> for &'a ZRoot2 {
    type Output = ZRoot2;
    fn add(self, o: &ZRoot2) -> ZRoot2 {
        ZRoot2::new(&self.rat + &o.rat, &self.irr + &o.irr)
    }
}

impl<'a> Sub<&'a ZRoot2> for &'a ZRoot2 {
    type Output = ZRoot2;
    fn sub(self, o: &ZRoot2) -> ZRoot2 {
        ZRoot2::new(&self.rat - &o.rat, &self.irr - &o.irr)
    }
}

impl<'a> Mul<&'a ZRoot2> for &'a ZRoot2 {
    type Output = ZRoot2;
    fn mul(self, o: &ZRoot2) -> ZRoot2 {
        let two = Rational::from_integer(BigInt::from(2));
        ZRoot2::new(
            &self.rat * &o.rat + two * &self.irr * &o.irr,
            &self.rat * &o.irr + &self.irr * &o.rat,
        )
    }
}

impl<'a> Div<&'a ZRoot2> for &'a ZRoot2 {
    type Output = ZRoot2;
    fn div(self, o: &ZRoot2) -> ZRoot2 {
        self.checked_div(o).expect("division by zero in Q(sqrt 2)")
    }
}

impl Neg for &ZRoot2 {
    type Output = ZRoot2;
    fn neg(self) -> ZRoot2 {
        ZRoot2::new(-self.rat.clone(), -self.irr.clone())
    }
}

impl Neg for ZRoot2 {
    type Output = ZRoot2;
    fn neg(self) -> ZRoot2 {
        ZRoot2::new(-self.rat, -self.irr)
    }
}

macro_rules! forward_owned {
    ($t:ty, $($tr:ident $m:ident),*) => {$(
        impl $tr<$t> for $t {
            type Output = $t;
            fn $m(self, o: $t) -> $t { $tr::$m(&self, &o) }
        }
        impl<'a> $tr<&'a $t> for $t {
            type Output = $t;
            fn $m(self, o: &'a $t) -> $t { $tr::$m(&self, o) }
        }
        impl<'a> $tr<$t> for &'a $t {
            type Output = $t;
            fn $m(self, o: $t) -> $t { $tr::$m(self, &o) }
        }
    )*};
}
pub(crate) use forward_owned;

forward_owned!(ZRoot2, Add add, Sub sub, Mul mul, Div div);

fn fmt_rat(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for ZRoot2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.rat.is_zero(), self.irr.is_zero()) {
            (_, true) => write!(f, "{}", fmt_rat(&self.rat)),
            (true, false) => write!(f, "{}*sqrt(2)", fmt_rat(&self.irr)),
            (false, false) => {
                let sign = if self.irr.is_negative() { "-" } else { "+" };
                write!(f, "{} {} {}*sqrt(2)", fmt_rat(&self.rat), sign, fmt_rat(&self.irr.abs()))
            }
        }
    }
}
