//! The tropicalization of the skeleton and its certification.

mod disjoint;
mod faithful;
mod map;

pub use disjoint::{
    images_relint_disjoint_exact, separation_certificate, ExactVerdict, SeparationCertificate,
};
pub use faithful::{
    check_faithful, CertificateEvidence, CheckMode, CheckOptions, FaithfulnessReport, Overall,
    PairRecord, PairRelation,
};
pub use map::{check_unimodular, PiecewiseAffineMap, UnimodularityCertificate};

use crate::complex::{StratumId, Violation};
use crate::lattice::PolyhedronError;
use crate::sections::{OrderViolation, SectionError};

/// Builds the piecewise affine map of validated inputs.
pub fn build_map<'a>(
    c: &'a crate::DualComplex,
    m: &crate::OrderMatrix,
) -> Result<PiecewiseAffineMap<'a>, TropicalizerError> {
    PiecewiseAffineMap::build(c, m)
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TropicalizerError {
    #[error("invalid complex: {}", join(.0))]
    InvalidComplex(Vec<Violation>),
    #[error("order matrix violates the construction: {}", join(.0))]
    InvalidOrders(Vec<OrderViolation>),
    #[error(transparent)]
    Section(#[from] SectionError),
    #[error(transparent)]
    Polyhedron(#[from] PolyhedronError),
    #[error("pair of identical strata {0}")]
    SameStratum(StratumId),
    #[error("{0} and {1} are in face relation")]
    FacePair(StratumId, StratumId),
    #[error("pair filter names unknown stratum {0:?}")]
    UnknownPairStratum(String),
    #[error("could not start worker pool: {0}")]
    ThreadPool(String),
}

fn join<T: std::fmt::Display>(items: &[T]) -> String {
    items
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("; ")
}
