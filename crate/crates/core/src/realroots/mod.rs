//! Exact univariate real-root counting via Sturm sequences.

mod sturm;
mod univariate;

pub use sturm::{
    count_real_roots, edge_has_rstar_zero, is_univariate_real_radical, squarefree_part,
    RootRange, SturmSequence,
};
pub use univariate::UnivariatePolynomial;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RootsError {
    #[error("zero polynomial has no root count")]
    ZeroPolynomial,
    #[error("constant polynomial has no Sturm sequence")]
    Constant,
}
