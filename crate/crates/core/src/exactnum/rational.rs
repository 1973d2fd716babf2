//! Rational helpers on top of [`num_rational::BigRational`].

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Arbitrary-precision rational, always gcd-reduced with a positive denominator.
pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: impl Into<BigInt>) -> Rational {
    Rational::from_integer(n.into())
}

pub fn rat_big(n: BigInt, d: BigInt) -> Rational {
    Rational::new(n, d)
}

pub fn sign(r: &Rational) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

/// Exact `floor(sqrt(n))` for `n >= 0`.
pub fn isqrt(n: &BigInt) -> BigInt {
    debug_assert!(!n.is_negative());
    num_integer::Roots::sqrt(n)
}

pub fn is_perfect_square(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    let s = isqrt(n);
    &s * &s == *n
}

/// Renders `r` rounded half-to-even at `digits` decimals.
pub fn to_decimal(r: &Rational, digits: usize) -> String {
    let scale = BigInt::from(10u32).pow(digits as u32);
    let scaled = r.numer() * &scale;
    let (q, rem) = scaled.div_mod_floor(r.denom());
    let twice: BigInt = &rem * 2;
    let q = match twice.cmp(r.denom()) {
        std::cmp::Ordering::Less => q,
        std::cmp::Ordering::Greater => q + 1,
        std::cmp::Ordering::Equal => {
            if q.is_even() {
                q
            } else {
                q + 1
            }
        }
    };
    fixed_point_string(&q, digits)
}

/// Formats the integer `q` as `q / 10^digits`.
pub(crate) fn fixed_point_string(q: &BigInt, digits: usize) -> String {
    let neg = q.is_negative();
    let mut s = q.abs().to_string();
    if digits > 0 {
        if s.len() <= digits {
            s = "0".repeat(digits + 1 - s.len()) + &s;
        }
        s.insert(s.len() - digits, '.');
    }
    if neg {
        s.insert(0, '-');
    }
    s
}

/// Decimal rendering of `sqrt(r)` for `r >= 0`, rounded half-to-even.
///
/// An exact tie is impossible unless `sqrt(r)` is rational, and that case is
/// settled on the exact square.
pub fn sqrt_to_decimal(r: &Rational, digits: usize) -> String {
    assert!(!r.is_negative(), "sqrt of a negative rational");
    let scale = BigInt::from(10u32).pow(digits as u32);
    // floor(sqrt(r) * 10^digits) = floor(sqrt(r * 10^(2 digits)))
    let target = r * Rational::from_integer(&scale * &scale);
    let fl = target.floor().to_integer();
    let mut s = isqrt(&fl);
    // isqrt(floor(x)) == floor(sqrt(x)) for x >= 0
    let half = Rational::new(2 * &s + 1, BigInt::from(2));
    // round up when sqrt(target) > s + 1/2, i.e. target > (s + 1/2)^2
    if target > &half * &half {
        s += 1;
    } else if target == &half * &half && s.is_odd() {
        s += 1;
    }
    fixed_point_string(&s, digits)
}

#[derive(Serialize, Deserialize)]
struct RationalRepr {
    num: String,
    den: String,
}

pub fn to_json_value(r: &Rational) -> serde_json::Value {
    serde_json::json!({ "num": r.numer().to_string(), "den": r.denom().to_string() })
}

/// `serialize_with` adapter producing `{"num": "...", "den": "..."}`.
pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    RationalRepr { num: r.numer().to_string(), den: r.denom().to_string() }.serialize(s)
}

pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
    use serde::de::Error;
    let repr = RationalRepr::deserialize(d)?;
    let num: BigInt = repr.num.parse().map_err(D::Error::custom)?;
    let den: BigInt = repr.den.parse().map_err(D::Error::custom)?;
    if den.is_zero() {
        return Err(D::Error::custom("zero denominator"));
    }
    Ok(Rational::new(num, den))
}

pub fn one() -> Rational {
    Rational::one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decimal_rounding_half_even() {
        assert_eq!(to_decimal(&rat(1, 8), 2), "0.12");
        assert_eq!(to_decimal(&rat(3, 8), 2), "0.38");
        assert_eq!(to_decimal(&rat(-1, 3), 3), "-0.333");
        assert_eq!(to_decimal(&rat(7, 1), 0), "7");
        assert_eq!(to_decimal(&rat(1, 200), 3), "0.005");
    }

    #[test]
    fn sqrt_decimals() {
        assert_eq!(sqrt_to_decimal(&int(2), 9), "1.414213562");
        assert_eq!(sqrt_to_decimal(&int(3), 9), "1.732050808");
        assert_eq!(sqrt_to_decimal(&rat(9, 4), 3), "1.500");
        assert_eq!(sqrt_to_decimal(&int(0), 2), "0.00");
    }

    #[test]
    fn json_shape() {
        let v = to_json_value(&rat(-6, 4));
        assert_eq!(v, serde_json::json!({"num": "-3", "den": "2"}));
    }
}
