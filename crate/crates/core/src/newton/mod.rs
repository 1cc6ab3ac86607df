//! Newton polytopes, their normal fans and lattice data along edges.

mod edge;
mod fan;
mod polytope;

pub use edge::{edge_univariate, EdgeData};
pub use fan::{normal_fan, Cone, Fan};
pub use polytope::{newton_polytope, Face, NewtonPolytope};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum NewtonError {
    #[error("zero polynomial has no Newton polytope")]
    ZeroPolynomial,
    #[error("{0:?}--{1:?} is not an edge of the Newton polytope")]
    NotAnEdge(Vec<u32>, Vec<u32>),
    #[error("no cone with id {0}")]
    UnknownCone(usize),
    #[error("normal vector does not fit in machine integers")]
    Overflow,
}
