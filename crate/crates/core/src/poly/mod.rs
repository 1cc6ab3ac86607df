//! Exact sparse polynomials over ℚ with weighted degrees and initial forms.

mod monomial;
mod parse;
mod polynomial;
mod weight;

pub use monomial::ExponentVector;
pub use parse::parse_polynomial;
pub use polynomial::{Polynomial, Ring};
pub use weight::{SignVector, WeightVector};

pub(crate) use weight::parse_rational;

pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("undefined degree: zero polynomial")]
    ZeroPolynomial,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("polynomials over different variable lists")]
    RingMismatch,
    #[error("invalid variable name `{0}`")]
    InvalidVariable(String),
    #[error("duplicate variable `{0}`")]
    DuplicateVariable(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("invalid weight: {0}")]
    InvalidWeight(String),
    #[error("weight entry does not fit in a machine integer")]
    WeightOverflow,
    #[error("sign vector entries must be 1 or -1")]
    InvalidSign,
}
