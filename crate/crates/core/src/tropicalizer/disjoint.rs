//! Two independent ways of showing that two open cells of the skeleton have
//! disjoint images.
//!
//! The separation certificate picks a vertex `v_{j_a}` of `S` outside `T`
//! and uses the single coordinate `g = -log|f_{j_a}|`: on `relint(Δ_S)` it
//! takes values in `(0, 1)` (exactly, from the vertical orders), while on `Δ_T`
//! it is bounded below by the barycentric combination of its vertex values,
//! each of which is at least one. The exact oracle instead decides emptiness
//! of the intersection of the two image polytopes over the rationals.

use num_traits::{One, Zero};

use super::map::PiecewiseAffineMap;
use super::TropicalizerError;
use crate::complex::StratumId;
use crate::lattice::{relint_intersection_nonempty, RationalPolyhedron};
use crate::rational::Rational;
use crate::sections::{concavity_lower_bound, restrict_affine, validate_orders, OrderMatrix};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeparationCertificate {
    /// The stratum whose vertex supplies the separating coordinate.
    pub separating: StratumId,
    pub other: StratumId,
    /// Component index `j_a`; the separating coordinate is `-log|f_{j_a}|`.
    pub vertex: usize,
    /// Slot `a` of that vertex in the separating stratum (0-based).
    pub slot: usize,
    /// Values of the coordinate at the vertices of the separating stratum.
    pub vertex_values: Vec<Rational>,
    /// Infimum and supremum of the coordinate over the open cell. The image is
    /// the open interval between them, or the single point when they agree.
    pub relint_range: (Rational, Rational),
    /// Lower bound of the coordinate on the closed simplex of `other`: the
    /// minimum over its vertices of the barycentric lower bound.
    pub other_lower_bound: Rational,
}

impl SeparationCertificate {
    /// The two value ranges are disjoint: `sup` over the open cell lies
    /// strictly below the lower bound (or is not attained and equals it).
    pub fn separates(&self) -> bool {
        let (lo, hi) = &self.relint_range;
        if lo == hi {
            *hi < self.other_lower_bound
        } else {
            *hi <= self.other_lower_bound
        }
    }
}

/// Searches for a separating coordinate for the ordered pair `(s, t)`.
///
/// Requires `s != t`, neither a face of the other, and valid orders. Returns
/// `None` when every vertex of `s` is a vertex of `t`, which can only happen
/// when distinct strata share a vertex set.
pub fn separation_certificate(
    f: &PiecewiseAffineMap<'_>,
    m: &OrderMatrix,
    s: StratumId,
    t: StratumId,
) -> Result<Option<SeparationCertificate>, TropicalizerError> {
    let c = f.complex();
    if s == t {
        return Err(TropicalizerError::SameStratum(s));
    }
    if c.is_face(s, t) || c.is_face(t, s) {
        return Err(TropicalizerError::FacePair(s, t));
    }
    let bad = validate_orders(m, c)?;
    if !bad.is_empty() {
        return Err(TropicalizerError::InvalidOrders(bad));
    }
    Ok(separation_unchecked(f, m, s, t))
}

pub(crate) fn separation_unchecked(
    f: &PiecewiseAffineMap<'_>,
    m: &OrderMatrix,
    s: StratumId,
    t: StratumId,
) -> Option<SeparationCertificate> {
    let (ss, ts) = (f.stratum(s), f.stratum(t));
    let zero = Rational::zero();
    let one = Rational::one();
    for (slot, &j) in ss.vertices.iter().enumerate() {
        if ts.vertices.contains(&j) || !m.horizontal_effective(j) {
            continue;
        }
        let g = restrict_affine(m, j, ss).ok()?;
        let vertex_values: Vec<Rational> = (0..ss.vertices.len()).map(|b| g.at_vertex(b)).collect();
        let shape_ok =
            vertex_values
                .iter()
                .enumerate()
                .all(|(b, v)| if b == slot { *v == zero } else { *v == one });
        if !shape_ok {
            continue;
        }
        let bound = (0..ts.vertices.len())
            .map(|b| {
                let mut e = vec![Rational::zero(); ts.vertices.len()];
                e[b] = Rational::one();
                concavity_lower_bound(m, j, ts, &e).expect("flag and weights checked")
            })
            .min()
            .expect("strata are nonempty");
        let lo = vertex_values.iter().min().cloned().unwrap();
        let hi = vertex_values.iter().max().cloned().unwrap();
        let cert = SeparationCertificate {
            separating: s,
            other: t,
            vertex: j,
            slot,
            vertex_values,
            relint_range: (lo, hi),
            other_lower_bound: bound,
        };
        if cert.separates() {
            return Some(cert);
        }
    }
    None
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExactVerdict {
    /// Images of the open cells are disjoint. `ambient_injective` names the
    /// stratum whose injective piece discharged a face pair.
    Disjoint {
        ambient_injective: Option<StratumId>,
    },
    /// A point in both images.
    Collision { witness: Vec<Rational> },
}

impl ExactVerdict {
    pub fn is_disjoint(&self) -> bool {
        matches!(self, ExactVerdict::Disjoint { .. })
    }
}

/// Exact decision of `F(relint Δ_S) ∩ F(relint Δ_T) = ∅`.
///
/// For a face pair with an injective ambient piece the answer follows from
/// injectivity; otherwise the two image cells are intersected exactly.
pub fn images_relint_disjoint_exact(
    f: &PiecewiseAffineMap<'_>,
    s: StratumId,
    t: StratumId,
) -> Result<ExactVerdict, TropicalizerError> {
    let c = f.complex();
    if s == t {
        return Err(TropicalizerError::SameStratum(s));
    }
    let ambient = if c.is_face(s, t) {
        Some(t)
    } else if c.is_face(t, s) {
        Some(s)
    } else {
        None
    };
    if let Some(a) = ambient {
        if f.piece_injective(a) {
            return Ok(ExactVerdict::Disjoint {
                ambient_injective: Some(a),
            });
        }
    }
    let p = RationalPolyhedron::hull_of_points(&f.vertex_images(s), true)?;
    let q = RationalPolyhedron::hull_of_points(&f.vertex_images(t), true)?;
    Ok(match relint_intersection_nonempty(&p, &q)? {
        Some(witness) => ExactVerdict::Collision { witness },
        None => ExactVerdict::Disjoint {
            ambient_injective: None,
        },
    })
}
