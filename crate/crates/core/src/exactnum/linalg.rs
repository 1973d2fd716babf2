//! Small exact matrices and vectors.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::rational::Rational;
use super::tower::QuadTower;
use super::zroot2::ZRoot2;

/// Ring operations needed by generic vector code.
pub trait Scalar: Clone + fmt::Debug + PartialEq {
    fn zero() -> Self;
    fn from_bigint(n: &BigInt) -> Self;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
}

impl Scalar for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn from_bigint(n: &BigInt) -> Self {
        n.clone()
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
}

impl Scalar for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn from_bigint(n: &BigInt) -> Self {
        Rational::from_integer(n.clone())
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
}

impl Scalar for ZRoot2 {
    fn zero() -> Self {
        ZRoot2::zero()
    }
    fn from_bigint(n: &BigInt) -> Self {
        ZRoot2::from_int(n.clone())
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
}

impl Scalar for QuadTower {
    fn zero() -> Self {
        QuadTower::zero()
    }
    fn from_bigint(n: &BigInt) -> Self {
        QuadTower::from_int(n.clone())
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Vec3<T>(pub [T; 3]);

impl<T: Scalar> Vec3<T> {
    pub fn new(x: T, y: T, z: T) -> Self {
        Vec3([x, y, z])
    }

    pub fn scale(&self, k: &T) -> Self {
        Vec3([self.0[0].mul(k), self.0[1].mul(k), self.0[2].mul(k)])
    }
}

impl Vec3<BigInt> {
    pub fn ints(x: i64, y: i64, z: i64) -> Self {
        Vec3([x.into(), y.into(), z.into()])
    }

    pub fn to_rational(&self) -> Vec3<Rational> {
        Vec3(self.0.clone().map(Rational::from_integer))
    }
}

/// Indefinite pairing `x1 y1 + x2 y2 - x3 y3`.
pub fn lorentz_pairing<T: Scalar>(x: &Vec3<T>, y: &Vec3<T>) -> T {
    x.0[0].mul(&y.0[0]).add(&x.0[1].mul(&y.0[1])).sub(&x.0[2].mul(&y.0[2]))
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mat3(pub [[BigInt; 3]; 3]);

impl Mat3 {
    pub fn from_i64(m: [[i64; 3]; 3]) -> Self {
        Mat3(m.map(|r| r.map(BigInt::from)))
    }

    pub fn identity() -> Self {
        Self::from_i64([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    }

    pub fn apply<T: Scalar>(&self, v: &Vec3<T>) -> Vec3<T> {
        let row = |i: usize| {
            let mut acc = T::zero();
            for j in 0..3 {
                if !self.0[i][j].is_zero() {
                    acc = acc.add(&T::from_bigint(&self.0[i][j]).mul(&v.0[j]));
                }
            }
            acc
        };
        Vec3([row(0), row(1), row(2)])
    }

    pub fn transpose(&self) -> Self {
        let m = &self.0;
        Mat3(std::array::from_fn(|i| std::array::from_fn(|j| m[j][i].clone())))
    }
}

impl Mul for &Mat3 {
    type Output = Mat3;
    fn mul(self, o: &Mat3) -> Mat3 {
        Mat3(std::array::from_fn(|i| {
            std::array::from_fn(|j| (0..3).map(|k| &self.0[i][k] * &o.0[k][j]).sum())
        }))
    }
}

impl Mul for Mat3 {
    type Output = Mat3;
    fn mul(self, o: Mat3) -> Mat3 {
        &self * &o
    }
}

/// The Berggren matrix for digit `d` in 1..=3.
pub fn berggren_matrix(d: u8) -> Mat3 {
    match d {
        1 => Mat3::from_i64([[-1, 2, 2], [-2, 1, 2], [-2, 2, 3]]),
        2 => Mat3::from_i64([[1, 2, 2], [2, 1, 2], [2, 2, 3]]),
        3 => Mat3::from_i64([[1, -2, 2], [2, -1, 2], [2, -2, 3]]),
        _ => panic!("invalid digit {d}"),
    }
}

/// Inverse of [`berggren_matrix`], equal to `U_d H`.
pub fn berggren_inverse(d: u8) -> Mat3 {
    &reflection_u(d) * &reflection_h()
}

pub fn reflection_h() -> Mat3 {
    Mat3::from_i64([[-1, -2, 2], [-2, -1, 2], [-2, -2, 3]])
}

pub fn reflection_u(d: u8) -> Mat3 {
    match d {
        1 => Mat3::from_i64([[1, 0, 0], [0, -1, 0], [0, 0, 1]]),
        2 => Mat3::from_i64([[-1, 0, 0], [0, -1, 0], [0, 0, 1]]),
        3 => Mat3::from_i64([[-1, 0, 0], [0, 1, 0], [0, 0, 1]]),
        _ => panic!("invalid digit {d}"),
    }
}

/// Coordinate swap `(x, y, z) -> (y, x, z)`.
pub fn swap_s() -> Mat3 {
    Mat3::from_i64([[0, 1, 0], [1, 0, 0], [0, 0, 1]])
}

/// 2x2 matrix over Q(sqrt 2), row-major `[[p, p'], [q, q']]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Mat2(pub [[ZRoot2; 2]; 2]);

impl Mat2 {
    pub fn new(p: ZRoot2, pp: ZRoot2, q: ZRoot2, qp: ZRoot2) -> Self {
        Mat2([[p, pp], [q, qp]])
    }

    /// Entries given as `(rat, irr)` integer pairs.
    pub fn ints(m: [[(i64, i64); 2]; 2]) -> Self {
        Mat2(m.map(|r| r.map(|(a, b)| ZRoot2::ints(a, b))))
    }

    pub fn identity() -> Self {
        Self::ints([[(1, 0), (0, 0)], [(0, 0), (1, 0)]])
    }

    pub fn p(&self) -> &ZRoot2 {
        &self.0[0][0]
    }
    pub fn p_prime(&self) -> &ZRoot2 {
        &self.0[0][1]
    }
    pub fn q(&self) -> &ZRoot2 {
        &self.0[1][0]
    }
    pub fn q_prime(&self) -> &ZRoot2 {
        &self.0[1][1]
    }

    pub fn trace(&self) -> ZRoot2 {
        &self.0[0][0] + &self.0[1][1]
    }

    pub fn det(&self) -> ZRoot2 {
        &(&self.0[0][0] * &self.0[1][1]) - &(&self.0[0][1] * &self.0[1][0])
    }

    pub fn inverse(&self) -> Option<Self> {
        let inv = self.det().recip()?;
        let m = &self.0;
        Some(Mat2::new(&m[1][1] * &inv, -(&m[0][1] * &inv), -(&m[1][0] * &inv), &m[0][0] * &inv))
    }

    /// Swaps the two columns (right multiplication by J).
    pub fn swap_columns(&self) -> Self {
        let m = &self.0;
        Mat2::new(m[0][1].clone(), m[0][0].clone(), m[1][1].clone(), m[1][0].clone())
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::json!([
            [self.0[0][0].to_json_value(), self.0[0][1].to_json_value()],
            [self.0[1][0].to_json_value(), self.0[1][1].to_json_value()],
        ])
    }
}

pub fn mat2_mul(a: &Mat2, b: &Mat2) -> Mat2 {
    let e = |i: usize, j: usize| &(&a.0[i][0] * &b.0[0][j]) + &(&a.0[i][1] * &b.0[1][j]);
    Mat2::new(e(0, 0), e(0, 1), e(1, 0), e(1, 1))
}

pub fn mat2_trace(a: &Mat2) -> ZRoot2 {
    a.trace()
}

pub fn mat2_det(a: &Mat2) -> ZRoot2 {
    a.det()
}

impl Mul for &Mat2 {
    type Output = Mat2;
    fn mul(self, o: &Mat2) -> Mat2 {
        mat2_mul(self, o)
    }
}

impl Mul for Mat2 {
    type Output = Mat2;
    fn mul(self, o: Mat2) -> Mat2 {
        mat2_mul(&self, &o)
    }
}

impl Neg for &Mat2 {
    type Output = Mat2;
    fn neg(self) -> Mat2 {
        Mat2(self.0.clone().map(|r| r.map(|x| -x)))
    }
}

impl Add for &Mat2 {
    type Output = Mat2;
    fn add(self, o: &Mat2) -> Mat2 {
        Mat2(std::array::from_fn(|i| std::array::from_fn(|j| &self.0[i][j] + &o.0[i][j])))
    }
}

impl Sub for &Mat2 {
    type Output = Mat2;
    fn sub(self, o: &Mat2) -> Mat2 {
        Mat2(std::array::from_fn(|i| std::array::from_fn(|j| &self.0[i][j] - &o.0[i][j])))
    }
}

/// The fractional-linear matrix `N_d` acting on `[0, inf]`.
pub fn n_matrix(d: u8) -> Mat2 {
    match d {
        1 => Mat2::ints([[(1, 0), (0, 0)], [(0, 1), (1, 0)]]),
        2 => Mat2::ints([[(1, 0), (0, 1)], [(0, 1), (1, 0)]]),
        3 => Mat2::ints([[(1, 0), (0, 1)], [(0, 0), (1, 0)]]),
        _ => panic!("invalid digit {d}"),
    }
}

/// The swap `[[0, 1], [1, 0]]`.
pub fn j_matrix() -> Mat2 {
    Mat2::ints([[(0, 0), (1, 0)], [(1, 0), (0, 0)]])
}

/// `a + b sqrt(2)` with integer parts.
type IntRoot2 = (BigInt, BigInt);

/// `x sqrt(2)`.
fn times_root2(x: &IntRoot2) -> IntRoot2 {
    (&x.1 * 2, x.0.clone())
}

fn add_int(x: &IntRoot2, y: &IntRoot2) -> IntRoot2 {
    (&x.0 + &y.0, &x.1 + &y.1)
}

/// Product `N_{d1} ... N_{dk}`; identity for the empty sequence.
pub fn n_product(digits: &[u8]) -> Mat2 {
    // entries stay in Z[sqrt 2]; each right factor only adds columns
    let (zero, one) = ((BigInt::from(0), BigInt::from(0)), (BigInt::from(1), BigInt::from(0)));
    let mut m: [[IntRoot2; 2]; 2] = [[one.clone(), zero.clone()], [zero, one]];
    for &d in digits {
        for row in m.iter_mut() {
            let [x, y] = row.clone();
            *row = match d {
                1 => [add_int(&x, &times_root2(&y)), y],
                2 => [add_int(&x, &times_root2(&y)), add_int(&times_root2(&x), &y)],
                3 => [x.clone(), add_int(&times_root2(&x), &y)],
                _ => panic!("invalid digit {d}"),
            };
        }
    }
    let z = |e: &IntRoot2| ZRoot2::new(Rational::from_integer(e.0.clone()), Rational::from_integer(e.1.clone()));
    Mat2(std::array::from_fn(|i| std::array::from_fn(|j| z(&m[i][j]))))
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.0[0][0], self.0[0][1], self.0[1][0], self.0[1][1])
    }
}

impl One for Mat2 {
    fn one() -> Self {
        Mat2::identity()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pairing_examples() {
        let e = Vec3::ints(1, 0, 1);
        let z = Vec3::ints(3, 4, 5);
        assert_eq!(lorentz_pairing(&e, &e), BigInt::from(0));
        assert_eq!(lorentz_pairing(&z, &z), BigInt::from(0));
        assert_eq!(lorentz_pairing(&z, &e), BigInt::from(-2));
    }

    #[test]
    fn berggren_factorization() {
        let h = reflection_h();
        assert_eq!(&h * &h, Mat3::identity());
        for d in 1..=3 {
            let u = reflection_u(d);
            assert_eq!(&u * &u, Mat3::identity());
            assert_eq!(&h * &u, berggren_matrix(d));
            assert_eq!(&berggren_matrix(d) * &berggren_inverse(d), Mat3::identity());
        }
    }

    #[test]
    fn swap_conjugates_digits() {
        let s = swap_s();
        for (d, dv) in [(1, 3), (2, 2), (3, 1)] {
            assert_eq!(&(&s * &berggren_matrix(d)) * &s, berggren_matrix(dv));
            let j = j_matrix();
            assert_eq!(&(&j * &n_matrix(d)) * &j, n_matrix(dv));
        }
    }

    #[test]
    fn n_matrix_facts() {
        let n2 = n_matrix(2);
        assert_eq!(n2.det(), ZRoot2::from_int(-1));
        assert_eq!(&n2 * &n2.inverse().unwrap(), Mat2::identity());
        let a = &n_matrix(3) * &n_matrix(1);
        assert_eq!(a, Mat2::ints([[(3, 0), (0, 1)], [(0, 1), (1, 0)]]));
        assert_eq!(a.trace(), ZRoot2::from_int(4));
    }
}
