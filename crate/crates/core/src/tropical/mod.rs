//! Per-cone real-radical and real-tropical classification, tropical sets,
//! and the compactness, stability and chain certificates built from them.

mod audit;
mod certificate;
mod chain;
mod classify;
mod components;
mod general;
mod sample;

pub use audit::{maximal_minors, universal_gb_squarefree_audit, AuditReport};
pub use certificate::{
    compactness_certificate, compactness_general, stability_bound, stability_certificate,
    stability_general, stability_principal, Certificate, CertificateKind, ReplayError, Rule, Step,
};
pub use chain::{verify_chain, ChainCheck, ChainViolation};
pub use classify::{
    classify_cone, classify_principal, ClassifyOptions, ConeReport, Evidence, PrincipalClassification,
    RealRadical, RstarVerdict,
};
pub use components::{classify_components, Component, ComponentClassification, ComponentVerdict};
pub use general::{classify_weight, GeneralOptions};

use crate::groebner::GroebnerError;
use crate::newton::NewtonError;
use crate::poly::PolyError;
use crate::realroots::RootsError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TropicalError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error(transparent)]
    Newton(#[from] NewtonError),
    #[error(transparent)]
    Roots(#[from] RootsError),
    #[error("ideal is not principal; classify individual weights instead")]
    NotPrincipal,
    #[error("product of components differs from the target by {discrepancy}")]
    ProductMismatch { discrepancy: String },
    #[error("cone {0} does not belong to the normal fan of this polynomial")]
    ForeignCone(usize),
    #[error("weight must have positive entries: {0}")]
    NonPositiveWeight(String),
}
