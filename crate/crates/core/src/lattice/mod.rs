//! Exact integer and rational linear algebra.
//!
//! Everything here works over arbitrary-precision integers and rationals;
//! there are no floating point or modular shortcuts anywhere in the crate.

mod matrix;
mod polyhedron;
mod simplex;
mod snf;

pub use matrix::{IntMatrix, MatrixError};
pub use polyhedron::{
    relint_intersection_nonempty, Constraint, PolyhedronError, RationalPolyhedron, Strictness,
};
pub use simplex::{maximize, LpOutcome};
pub use snf::{
    basis_completion, elementary_divisors, extends_to_basis, rational_rank, smith_normal_form,
    SmithForm,
};
