//! Exact arithmetic: rationals, Q(sqrt 2), quadratic towers, small matrices
//! and certified intervals.

pub mod interval;
pub mod linalg;
pub mod rational;
pub mod tower;
pub mod zroot2;

pub use interval::Interval;
pub use linalg::{
    berggren_inverse, berggren_matrix, j_matrix, lorentz_pairing, mat2_det, mat2_mul, mat2_trace, n_matrix,
    n_product, reflection_h, reflection_u, swap_s, Mat2, Mat3, Scalar, Vec3,
};
pub use rational::Rational;
pub use tower::{square_part, tower_sign, QuadTower};
pub use zroot2::ZRoot2;
