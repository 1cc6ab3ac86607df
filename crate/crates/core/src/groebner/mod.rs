//! Weight-refined monomial orders, Buchberger's algorithm, membership and
//! initial ideals.

mod buchberger;
mod gcd;
mod ideal;
mod order;

pub use buchberger::{buchberger, divide, is_groebner_basis, GroebnerBasis};
pub use gcd::{gcd, is_squarefree, lcm, repeated_factor};
pub use ideal::{monomial_squarefree_test, Ideal};
pub use order::{MonomialOrder, TieBreak};


use crate::poly::PolyError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroebnerError {
    #[error("weight {0} has negative entries; homogenize first")]
    NeedsHomogenization(String),
    #[error("zero ideal")]
    ZeroIdeal,
    #[error("order has dimension {got}, ring has {expected} variables")]
    DimensionMismatch { expected: usize, got: usize },
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("not a monomial: {0}")]
    NotMonomial(String),
    #[error("{0} is not in the ideal")]
    NotInIdeal(String),
    #[error("unknown term order `{0}`")]
    UnknownOrder(String),
}
