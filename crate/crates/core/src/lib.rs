//! Combinatorial models of Berkovich skeletons of strictly semistable models,
//! and exact certification of the tropicalization maps induced by sections
//! described through their vanishing orders along special-fiber components.
//!
//! The crate is organised bottom-up:
//!
//! - [`lattice`]: exact integer and rational kernels (Smith normal form,
//!   lattice saturation, strict rational feasibility).
//! - [`complex`]: the dual intersection complex and points of its canonical
//!   simplices.
//! - [`trop`]: tropical projective space and min-plus evaluation of monomial
//!   valuations.
//! - [`sections`]: order matrices and the affine functionals they induce on
//!   each canonical simplex.
//! - [`tropicalizer`]: the piecewise affine map on the skeleton together with
//!   unimodularity and injectivity certification.
//! - [`bounds`]: basepoint-freeness thresholds and section counts.
//! - [`io`]: input documents, fixture generation and certificate emission.

pub mod bounds;
pub mod complex;
pub mod io;
pub mod lattice;
pub mod rational;
pub mod sections;
pub mod trop;
pub mod tropicalizer;

pub use complex::{ComplexMode, DualComplex, SimplexPoint, Stratum, StratumId};
pub use lattice::{IntMatrix, RationalPolyhedron, SmithForm};
pub use sections::{AffineFunctional, OrderMatrix};
pub use trop::{MonomialSupport, TropValue, TropicalProjectivePoint};
pub use tropicalizer::{
    check_faithful, CheckMode, FaithfulnessReport, Overall, PiecewiseAffineMap,
    UnimodularityCertificate,
};
