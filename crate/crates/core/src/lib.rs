//! Weighted initial forms, real-radical classification of Gröbner cones,
//! tropical set constructions and sums-of-squares degree reduction, all in
//! exact rational arithmetic.

pub mod poly;

pub use poly::{ExponentVector, PolyError, Polynomial, Rational, Ring, SignVector, WeightVector};
pub mod linalg;
pub mod lp;
pub mod realroots;
pub mod groebner;
pub mod newton;
pub mod tropical;
pub mod sos;
pub(crate) mod ser;
