//! Quadratic towers `base + coeff*sqrt(disc)` with `base, coeff` in Q(sqrt 2).
//!
//! The discriminant is kept odd, not a square, and free of squares of small
//! primes (or 0). A factor of 2 is absorbed into the coefficient through
//! `sqrt(2m) = sqrt(2) sqrt(m)`. Two discriminants name the same field
//! exactly when their product is a square; operands are then rewritten over
//! the gcd, so no full factorization is ever needed.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::interval::{self, Interval};
use super::rational::{self, Rational};
use super::zroot2::{forward_owned, ZRoot2};
use crate::error::{Error, Result};

/// Splits `n > 0` as `s^2 * r` with `r` squarefree, returning `(s, r)`.
///
/// Exact below `2^128`. Above that, a cofactor the factorizer cannot split
/// is tested for being a perfect square and otherwise kept whole in `r`,
/// so `r` may then carry a square factor made of two large primes.
pub fn square_part(n: &BigInt) -> (BigInt, BigInt) {
    assert!(n.is_positive(), "square_part needs a positive integer");
    let mut s = BigInt::one();
    let mut r = BigInt::one();
    let mut absorb = |p: BigInt, e: usize| {
        s *= p.pow(e as u32 / 2);
        if e % 2 == 1 {
            r *= p;
        }
    };
    let mut rem = n.clone();
    // small primes first, so the cofactor usually fits in 128 bits
    let mut p = 2u32;
    while p < 1 << 12 && rem > BigInt::one() {
        let mut e = 0;
        while (&rem % p).is_zero() {
            rem /= p;
            e += 1;
        }
        if e > 0 {
            absorb(BigInt::from(p), e);
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if let Some(v) = rem.to_u128() {
        for (q, e) in num_prime::nt_funcs::factorize128(v) {
            absorb(BigInt::from(q), e);
        }
        return (s, r);
    }
    let (found, rest) = num_prime::nt_funcs::factors(rem.magnitude().clone(), None);
    for (q, e) in found {
        absorb(BigInt::from(q), e);
    }
    for c in rest.unwrap_or_default() {
        let c = BigInt::from(c);
        if rational::is_perfect_square(&c) {
            s *= rational::isqrt(&c);
        } else {
            r *= c;
        }
    }
    (s, r)
}

/// `n = s^2 r` with squares of primes below 4096 and any square cofactor
/// moved into `s`.
fn reduce_disc(n: &BigInt) -> (BigInt, BigInt) {
    let mut s = BigInt::one();
    let mut r = BigInt::one();
    let mut rem = n.clone();
    let mut p = 2u32;
    while p < 1 << 12 && rem > BigInt::one() {
        let mut e = 0;
        while (&rem % p).is_zero() {
            rem /= p;
            e += 1;
        }
        s *= BigInt::from(p).pow(e / 2);
        if e % 2 == 1 {
            r *= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if rational::is_perfect_square(&rem) {
        s *= rational::isqrt(&rem);
    } else {
        r *= rem;
    }
    (s, r)
}

#[derive(Clone, Debug)]
pub struct QuadTower {
    base: ZRoot2,
    coeff: ZRoot2,
    disc: BigInt,
}

impl QuadTower {
    /// Builds and normalizes `base + coeff*sqrt(disc)`.
    pub fn new(base: ZRoot2, coeff: ZRoot2, disc: BigInt) -> Self {
        assert!(!disc.is_negative(), "negative discriminant");
        if coeff.is_zero() || disc.is_zero() {
            return Self::from_zroot2(base);
        }
        let (s, mut r) = reduce_disc(&disc);
        let mut coeff = coeff.scale(&Rational::from_integer(s));
        if r.is_even() {
            r /= 2;
            coeff = &coeff * &ZRoot2::sqrt2();
        }
        if r.is_one() {
            return Self::from_zroot2(&base + &coeff);
        }
        QuadTower { base, coeff, disc: r }
    }

    pub fn from_zroot2(base: ZRoot2) -> Self {
        QuadTower { base, coeff: ZRoot2::zero(), disc: BigInt::zero() }
    }

    pub fn from_rational(r: Rational) -> Self {
        Self::from_zroot2(ZRoot2::from_rational(r))
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        Self::from_rational(rational::int(n))
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn sqrt2() -> Self {
        Self::from_zroot2(ZRoot2::sqrt2())
    }

    /// Exact `sqrt(r)` for a nonnegative rational.
    pub fn sqrt_rational(r: &Rational) -> Self {
        assert!(!r.is_negative(), "sqrt of a negative rational");
        let den = r.denom().clone();
        let coeff = ZRoot2::from_rational(Rational::new(BigInt::one(), den.clone()));
        Self::new(ZRoot2::zero(), coeff, r.numer() * den)
    }

    /// Exact `sqrt(n)` for a nonnegative integer.
    pub fn sqrt_int(n: &BigInt) -> Self {
        Self::new(ZRoot2::zero(), ZRoot2::one(), n.clone())
    }

    pub fn base(&self) -> &ZRoot2 {
        &self.base
    }

    pub fn coeff(&self) -> &ZRoot2 {
        &self.coeff
    }

    pub fn disc(&self) -> &BigInt {
        &self.disc
    }

    pub fn is_zero(&self) -> bool {
        self.base.is_zero() && self.coeff.is_zero()
    }

    pub fn as_zroot2(&self) -> Option<&ZRoot2> {
        self.coeff.is_zero().then_some(&self.base)
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        self.as_zroot2().filter(|z| z.is_rational()).map(|z| &z.rat)
    }

    /// Conjugate over Q(sqrt 2): `base - coeff*sqrt(disc)`.
    pub fn conj_disc(&self) -> Self {
        QuadTower { base: self.base.clone(), coeff: -&self.coeff, disc: self.disc.clone() }
    }

    /// Relative norm `base^2 - disc*coeff^2` in Q(sqrt 2).
    pub fn rel_norm(&self) -> ZRoot2 {
        let d = Rational::from_integer(self.disc.clone());
        &self.base.square() - &self.coeff.square().scale(&d)
    }

    fn raw(base: ZRoot2, coeff: ZRoot2, disc: BigInt) -> Self {
        if coeff.is_zero() {
            Self::from_zroot2(base)
        } else {
            QuadTower { base, coeff, disc }
        }
    }

    /// Brings both operands over a common discriminant.
    fn align(&self, o: &Self) -> Result<(ZRoot2, ZRoot2, ZRoot2, ZRoot2, BigInt)> {
        if o.coeff.is_zero() || self.disc == o.disc {
            let d = if self.coeff.is_zero() { o.disc.clone() } else { self.disc.clone() };
            return Ok((self.base.clone(), self.coeff.clone(), o.base.clone(), o.coeff.clone(), d));
        }
        if self.coeff.is_zero() {
            return Ok((self.base.clone(), ZRoot2::zero(), o.base.clone(), o.coeff.clone(), o.disc.clone()));
        }
        // Same field when disc1*disc2 is a square: rewrite both over the gcd.
        let prod = &self.disc * &o.disc;
        if !rational::is_perfect_square(&prod) {
            return Err(Error::IncompatibleDiscriminants(self.disc.to_string(), o.disc.to_string()));
        }
        let g = self.disc.gcd(&o.disc);
        let a = rational::isqrt(&(&self.disc / &g));
        let b = rational::isqrt(&(&o.disc / &g));
        Ok((
            self.base.clone(),
            self.coeff.scale(&Rational::from_integer(a)),
            o.base.clone(),
            o.coeff.scale(&Rational::from_integer(b)),
            g,
        ))
    }

    pub fn compatible(&self, o: &Self) -> bool {
        self.align(o).is_ok()
    }

    pub fn try_add(&self, o: &Self) -> Result<Self> {
        let (b1, c1, b2, c2, d) = self.align(o)?;
        Ok(Self::raw(&b1 + &b2, &c1 + &c2, d))
    }

    pub fn try_sub(&self, o: &Self) -> Result<Self> {
        let (b1, c1, b2, c2, d) = self.align(o)?;
        Ok(Self::raw(&b1 - &b2, &c1 - &c2, d))
    }

    pub fn try_mul(&self, o: &Self) -> Result<Self> {
        let (b1, c1, b2, c2, d) = self.align(o)?;
        let dr = Rational::from_integer(d.clone());
        let base = &(&b1 * &b2) + &(&c1 * &c2).scale(&dr);
        let coeff = &(&b1 * &c2) + &(&c1 * &b2);
        Ok(Self::raw(base, coeff, d))
    }

    pub fn try_div(&self, o: &Self) -> Result<Self> {
        if o.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = o.rel_norm();
        let inv_n = n.recip().ok_or(Error::DivisionByZero)?;
        let num = self.try_mul(&o.conj_disc())?;
        Ok(Self::raw(&num.base * &inv_n, &num.coeff * &inv_n, num.disc))
    }

    pub fn recip(&self) -> Result<Self> {
        Self::one().try_div(self)
    }

    pub fn square(&self) -> Self {
        self * self
    }

    pub fn scale(&self, k: &ZRoot2) -> Self {
        Self::raw(&self.base * k, &self.coeff * k, self.disc.clone())
    }

    /// Exact sign by radical elimination.
    pub fn sign(&self) -> i32 {
        let su = self.base.sign();
        let sv = self.coeff.sign();
        if sv == 0 {
            return su;
        }
        if su == 0 || su == sv {
            return sv;
        }
        // opposite signs: compare base^2 with disc*coeff^2
        let n = self.rel_norm().sign();
        if n > 0 {
            su
        } else {
            sv
        }
    }

    pub fn abs(&self) -> Self {
        if self.sign() < 0 {
            -self
        } else {
            self.clone()
        }
    }

    pub fn to_interval(&self, prec: u32) -> Interval {
        let b = self.base.to_interval(prec);
        if self.coeff.is_zero() {
            return b;
        }
        b.add(&self.coeff.to_interval(prec).mul(&Interval::sqrt_int(&self.disc, prec)))
    }

    /// Enclosure of width below `10^-digits`.
    pub fn certified(&self, digits: u32) -> Interval {
        interval::refine(|p| Some(self.to_interval(p)), digits)
    }

    pub fn to_decimal(&self, digits: usize) -> String {
        self.certified(digits as u32 + 4).to_decimal(digits)
    }

    pub fn to_f64(&self) -> f64 {
        self.to_interval(80).mid_f64()
    }

    /// Exact comparison, valid across different discriminants.
    pub fn exact_cmp(&self, o: &Self) -> Ordering {
        match self.try_sub(o) {
            Ok(d) => d.sign().cmp(&0),
            // Different fields: the values differ, so refinement terminates.
            Err(_) => {
                let mut prec = 128;
                loop {
                    if let Some(ord) = self.to_interval(prec).cmp_certain(&o.to_interval(prec)) {
                        return ord;
                    }
                    prec *= 2;
                }
            }
        }
    }

    /// Sign decided purely by interval refinement, with an exact zero test.
    /// Independent of [`QuadTower::sign`]; used to cross-check it.
    pub fn numeric_sign(&self) -> i32 {
        if self.is_zero() {
            return 0;
        }
        let mut prec = 64;
        loop {
            if let Some(s) = self.to_interval(prec).sign() {
                return s;
            }
            prec *= 2;
        }
    }

    pub fn max(self, o: Self) -> Self {
        if self.exact_cmp(&o) == Ordering::Less {
            o
        } else {
            self
        }
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::json!({
            "base": self.base.to_json_value(),
            "coeff": self.coeff.to_json_value(),
            "disc": self.disc.to_string(),
        })
    }
}

/// Exact sign of a tower element.
pub fn tower_sign(x: &QuadTower) -> i32 {
    x.sign()
}

impl PartialEq for QuadTower {
    fn eq(&self, o: &Self) -> bool {
        match self.try_sub(o) {
            Ok(d) => d.is_zero(),
            Err(_) => false,
        }
    }
}

impl Eq for QuadTower {}

impl PartialOrd for QuadTower {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.exact_cmp(o))
    }
}

impl Ord for QuadTower {
    fn cmp(&self, o: &Self) -> Ordering {
        self.exact_cmp(o)
    }
}

impl From<ZRoot2> for QuadTower {
    fn from(z: ZRoot2) -> Self {
        QuadTower::from_zroot2(z)
    }
}

impl From<Rational> for QuadTower {
    fn from(r: Rational) -> Self {
        QuadTower::from_rational(r)
    }
}

impl From<i64> for QuadTower {
    fn from(n: i64) -> Self {
        QuadTower::from_int(n)
    }
}

macro_rules! panicking_op {
    ($tr:ident $m:ident $f:ident) => {
        impl<'a> $tr<&'a QuadTower> for &'a QuadTower {
            type Output = QuadTower;
            /// Panics on incompatible discriminants; use the `try_` form to
            /// handle that case.
            fn $m(self, o: &QuadTower) -> QuadTower {
                self.$f(o).unwrap_or_else(|e| panic!("{e}"))
            }
        }
    };
}
panicking_op!(Add add try_add);
panicking_op!(Sub sub try_sub);
panicking_op!(Mul mul try_mul);
panicking_op!(Div div try_div);
forward_owned!(QuadTower, Add add, Sub sub, Mul mul, Div div);

impl Neg for &QuadTower {
    type Output = QuadTower;
    fn neg(self) -> QuadTower {
        QuadTower::raw(-&self.base, -&self.coeff, self.disc.clone())
    }
}

impl Neg for QuadTower {
    type Output = QuadTower;
    fn neg(self) -> QuadTower {
        -&self
    }
}

#[derive(Serialize, Deserialize)]
struct TowerRepr {
    base: ZRoot2,
    coeff: ZRoot2,
    disc: String,
}

impl Serialize for QuadTower {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        TowerRepr { base: self.base.clone(), coeff: self.coeff.clone(), disc: self.disc.to_string() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for QuadTower {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let r = TowerRepr::deserialize(d)?;
        let disc: BigInt = r.disc.parse().map_err(D::Error::custom)?;
        if disc.is_negative() {
            return Err(D::Error::custom("negative discriminant"));
        }
        Ok(QuadTower::new(r.base, r.coeff, disc))
    }
}

fn fmt_rat(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// `k*sqrt(n)` with `k` rational, written as `sqrt(n)`, `k*sqrt(n)` or
/// `sqrt(n)/d`.
fn fmt_scaled_root(k: &Rational, n: &BigInt) -> String {
    let root = format!("sqrt({n})");
    let num = k.numer();
    let den = k.denom();
    let head = if num.is_one() {
        root
    } else if *num == -BigInt::one() {
        format!("-{root}")
    } else {
        format!("{num}*{root}")
    };
    if den.is_one() {
        head
    } else {
        format!("{head}/{den}")
    }
}

impl fmt::Display for QuadTower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: Vec<String> = Vec::new();
        if !self.base.rat.is_zero() {
            terms.push(fmt_rat(&self.base.rat));
        }
        if !self.base.irr.is_zero() {
            terms.push(fmt_scaled_root(&self.base.irr, &BigInt::from(2)));
        }
        if !self.coeff.rat.is_zero() {
            terms.push(fmt_scaled_root(&self.coeff.rat, &self.disc));
        }
        if !self.coeff.irr.is_zero() {
            terms.push(fmt_scaled_root(&self.coeff.irr, &(&self.disc * 2)));
        }
        if terms.is_empty() {
            return write!(f, "0");
        }
        let mut out = terms[0].clone();
        for t in &terms[1..] {
            match t.strip_prefix('-') {
                Some(rest) => out += &format!(" - {rest}"),
                None => out += &format!(" + {t}"),
            }
        }
        write!(f, "{out}")
    }
}
