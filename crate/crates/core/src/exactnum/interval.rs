//! Dyadic intervals with outward rounding.
//!
//! An [`Interval`] encloses a real number in `[lo, hi] * 2^-prec`. Every
//! operation rounds the lower end down and the upper end up, so the true
//! value is always enclosed.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::rational::{fixed_point_string, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    lo: BigInt,
    hi: BigInt,
    prec: u32,
}

fn pow2(p: u32) -> BigInt {
    BigInt::one() << p as usize
}

fn div_floor(a: &BigInt, b: &BigInt) -> BigInt {
    a.div_floor(b)
}

fn div_ceil(a: &BigInt, b: &BigInt) -> BigInt {
    -((-a).div_floor(b))
}

fn isqrt_ceil(n: &BigInt) -> BigInt {
    let s = n.sqrt();
    if &s * &s < *n {
        s + 1
    } else {
        s
    }
}

impl Interval {
    pub fn prec(&self) -> u32 {
        self.prec
    }

    pub fn exact_int(n: &BigInt, prec: u32) -> Self {
        let v = n << prec as usize;
        Interval { lo: v.clone(), hi: v, prec }
    }

    pub fn from_rational(r: &Rational, prec: u32) -> Self {
        let scaled = r.numer() << prec as usize;
        Interval {
            lo: div_floor(&scaled, r.denom()),
            hi: div_ceil(&scaled, r.denom()),
            prec,
        }
    }

    /// Enclosure of `sqrt(n)` for a nonnegative integer `n`.
    pub fn sqrt_int(n: &BigInt, prec: u32) -> Self {
        assert!(!n.is_negative());
        let scaled = n << (2 * prec as usize);
        Interval { lo: scaled.sqrt(), hi: isqrt_ceil(&scaled), prec }
    }

    pub fn add(&self, o: &Self) -> Self {
        debug_assert_eq!(self.prec, o.prec);
        Interval { lo: &self.lo + &o.lo, hi: &self.hi + &o.hi, prec: self.prec }
    }

    pub fn sub(&self, o: &Self) -> Self {
        debug_assert_eq!(self.prec, o.prec);
        Interval { lo: &self.lo - &o.hi, hi: &self.hi - &o.lo, prec: self.prec }
    }

    pub fn neg(&self) -> Self {
        Interval { lo: -&self.hi, hi: -&self.lo, prec: self.prec }
    }

    pub fn mul(&self, o: &Self) -> Self {
        debug_assert_eq!(self.prec, o.prec);
        let c = [&self.lo * &o.lo, &self.lo * &o.hi, &self.hi * &o.lo, &self.hi * &o.hi];
        let mn = c.iter().min().unwrap();
        let mx = c.iter().max().unwrap();
        let s = pow2(self.prec);
        Interval { lo: div_floor(mn, &s), hi: div_ceil(mx, &s), prec: self.prec }
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    /// Quotient; `None` when the divisor interval contains zero.
    pub fn div(&self, o: &Self) -> Option<Self> {
        debug_assert_eq!(self.prec, o.prec);
        if o.contains_zero() {
            return None;
        }
        let s = pow2(self.prec);
        let nums = [&self.lo * &s, &self.hi * &s];
        let mut lo: Option<BigInt> = None;
        let mut hi: Option<BigInt> = None;
        for n in &nums {
            for d in [&o.lo, &o.hi] {
                let (f, c) = if d.is_negative() {
                    (div_floor(&-n, &-d), div_ceil(&-n, &-d))
                } else {
                    (div_floor(n, d), div_ceil(n, d))
                };
                lo = Some(lo.map_or(f.clone(), |l| l.min(f)));
                hi = Some(hi.map_or(c.clone(), |h| h.max(c)));
            }
        }
        Some(Interval { lo: lo.unwrap(), hi: hi.unwrap(), prec: self.prec })
    }

    /// Square root of the nonnegative part; `None` if the interval is
    /// entirely negative.
    pub fn sqrt(&self) -> Option<Self> {
        if self.hi.is_negative() {
            return None;
        }
        let s = pow2(self.prec);
        let lo = if self.lo.is_positive() { (&self.lo * &s).sqrt() } else { BigInt::zero() };
        let hi = isqrt_ceil(&(&self.hi * &s));
        Some(Interval { lo, hi, prec: self.prec })
    }

    /// The same enclosure at another precision, rounded outward.
    pub fn rescale(&self, prec: u32) -> Self {
        Interval {
            lo: div_floor(&(&self.lo << prec as usize), &pow2(self.prec)),
            hi: div_ceil(&(&self.hi << prec as usize), &pow2(self.prec)),
            prec,
        }
    }

    pub fn abs(&self) -> Self {
        if !self.lo.is_negative() {
            self.clone()
        } else if !self.hi.is_positive() {
            self.neg()
        } else {
            Interval { lo: BigInt::zero(), hi: self.lo.abs().max(self.hi.clone()), prec: self.prec }
        }
    }

    pub fn max(&self, o: &Self) -> Self {
        Interval {
            lo: self.lo.clone().max(o.lo.clone()),
            hi: self.hi.clone().max(o.hi.clone()),
            prec: self.prec,
        }
    }

    pub fn min(&self, o: &Self) -> Self {
        Interval {
            lo: self.lo.clone().min(o.lo.clone()),
            hi: self.hi.clone().min(o.hi.clone()),
            prec: self.prec,
        }
    }

    /// Sign if certain, `None` if the interval straddles or touches zero.
    pub fn sign(&self) -> Option<i32> {
        if self.lo.is_positive() {
            Some(1)
        } else if self.hi.is_negative() {
            Some(-1)
        } else {
            None
        }
    }

    /// Certain ordering, or `None` if the intervals overlap.
    pub fn cmp_certain(&self, o: &Self) -> Option<Ordering> {
        self.sub(o).sign().map(|s| s.cmp(&0))
    }

    pub fn lo_rational(&self) -> Rational {
        Rational::new(self.lo.clone(), pow2(self.prec))
    }

    pub fn hi_rational(&self) -> Rational {
        Rational::new(self.hi.clone(), pow2(self.prec))
    }

    pub fn width(&self) -> Rational {
        Rational::new(&self.hi - &self.lo, pow2(self.prec))
    }

    /// True when the width is below `10^-digits`.
    pub fn width_below_decimal(&self, digits: u32) -> bool {
        (&self.hi - &self.lo) * BigInt::from(10u32).pow(digits) < pow2(self.prec)
    }

    /// True when every point lies within `10^-digits` of `r`.
    pub fn within_decimal_of(&self, r: &Rational, digits: u32) -> bool {
        let tol = Rational::new(BigInt::one(), BigInt::from(10u32).pow(digits));
        let lo = self.lo_rational();
        let hi = self.hi_rational();
        (&hi - r).abs() < tol && (&lo - r).abs() < tol
    }

    pub fn mid_f64(&self) -> f64 {
        let m: BigInt = (&self.lo + &self.hi) / 2;
        let shift = self.prec.saturating_sub(60);
        let m: BigInt = m >> shift as usize;
        let p = (self.prec - shift) as i32;
        m.to_f64().unwrap_or(f64::NAN) * 2f64.powi(-p)
    }

    /// Midpoint rounded to `digits` decimals (half up, ties away).
    pub fn to_decimal(&self, digits: usize) -> String {
        let scale = BigInt::from(10u32).pow(digits as u32);
        let num = (&self.lo + &self.hi) * &scale;
        let den = pow2(self.prec + 1);
        let q = div_floor(&(2 * num + &den), &(2 * &den));
        fixed_point_string(&q, digits)
    }
}

/// Re-evaluates `f` at increasing precision until its width certifies
/// `digits` decimals. Returns the last enclosure.
pub fn refine<F: Fn(u32) -> Option<Interval>>(f: F, digits: u32) -> Interval {
    let mut prec = 64 + 4 * digits;
    loop {
        if let Some(iv) = f(prec) {
            if iv.width_below_decimal(digits) {
                return iv;
            }
        }
        prec *= 2;
        assert!(prec < 1 << 22, "interval refinement did not converge");
    }
}
