//! Quadratic-module membership witnesses and the weighted degree-reduction
//! rewriter.

mod file;
mod reduce;
mod representation;

pub use file::RepresentationFile;
pub use reduce::{reduce_degree, BasisAssertion, Iteration, ReductionTrace};
pub use representation::{verify_representation, QMRepresentation, Verification};
pub use crate::tropical::stability_bound;

use crate::groebner::GroebnerError;
use crate::poly::PolyError;
use crate::tropical::TropicalError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SosError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error(transparent)]
    Tropical(#[from] TropicalError),
    #[error("representation does not verify: f minus the representation is {discrepancy}, remainder in ideal: {h_in_ideal}")]
    NotVerified { discrepancy: String, h_in_ideal: bool },
    #[error("weight must have positive entries: {0}")]
    NonPositiveWeight(String),
    #[error("{0} square lists for {1} generators; expected one more list than generators")]
    ShapeMismatch(usize, usize),
    #[error("initial ideal is not certified real radical at {0}; assert the basis property to proceed")]
    NotCertified(String),
    #[error("BASIS-VIOLATION: top sum {top_sum} lies in the initial ideal but In_w(y[{i}][{j}]) = {initial_form} does not")]
    BasisViolation {
        top_sum: String,
        i: usize,
        j: usize,
        initial_form: String,
    },
    #[error("IDENTITY-INCONSISTENT: top sum {top_sum} of w-degree {degree} is not in the initial ideal")]
    IdentityInconsistent { top_sum: String, degree: String },
    #[error("representation file: {0}")]
    File(String),
}
