//! A digit-expansion dynamical system on the quarter circle, Christoffel words, Cohn
//! matrices and Markoff triples, with exact arithmetic throughout.

pub mod error;
pub mod cohn;
pub mod dynamics;
pub mod exactnum;
pub mod markoff;
pub mod oracle;
pub mod verify;
pub mod words;

pub use error::{Error, Result};
pub use exactnum::{Mat2, Mat3, QuadTower, Rational, Vec3, ZRoot2};
