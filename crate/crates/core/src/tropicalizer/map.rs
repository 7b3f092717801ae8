use num_traits::{One, Zero};

use super::TropicalizerError;
use crate::complex::{DualComplex, Stratum, StratumId};
use crate::lattice::{rational_rank, smith_normal_form, IntMatrix};
use crate::rational::{rat_int, Int, Rational};
use crate::sections::{validate_orders, OrderMatrix};
use crate::trop::{trop_normalize, TropValue, TropicalProjectivePoint};

/// The tropicalization restricted to the skeleton, in the affine chart
/// `(-log|f_1|, ..., -log|f_ell|)` with `f_i = s_i / s_0`.
///
/// On the canonical simplex of a stratum with vertices `(j_1, ..., j_r)` the
/// map is `u ↦ A_S u` where `A_S[i][b] = ord_{X_{s,j_b}}(s_i)`.
#[derive(Debug, Clone)]
pub struct PiecewiseAffineMap<'a> {
    complex: &'a DualComplex,
    n: usize,
    pieces: Vec<IntMatrix>,
}

impl<'a> PiecewiseAffineMap<'a> {
    /// Builds the map after validating both the complex and the orders.
    pub fn build(c: &'a DualComplex, m: &OrderMatrix) -> Result<Self, TropicalizerError> {
        let violations = c.validate();
        if !violations.is_empty() {
            return Err(TropicalizerError::InvalidComplex(violations));
        }
        let bad = validate_orders(m, c)?;
        if !bad.is_empty() {
            return Err(TropicalizerError::InvalidOrders(bad));
        }
        Ok(Self::from_orders_unchecked(c, m))
    }

    /// Builds the map without checking any axiom. Useful for exploring order
    /// data that is not known to come from the construction.
    pub fn from_orders_unchecked(c: &'a DualComplex, m: &OrderMatrix) -> Self {
        let n = m.ell();
        let pieces = c
            .strata()
            .iter()
            .map(|s| {
                let mut a = IntMatrix::zeros(n, s.vertices.len());
                for i in 1..=n {
                    for (b, &j) in s.vertices.iter().enumerate() {
                        a[(i - 1, b)] = Int::from(m.order(i, j));
                    }
                }
                a
            })
            .collect();
        Self {
            complex: c,
            n,
            pieces,
        }
    }

    pub fn complex(&self) -> &'a DualComplex {
        self.complex
    }

    /// Number of target coordinates.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn piece(&self, s: StratumId) -> &IntMatrix {
        &self.pieces[s.0]
    }

    /// Image of the vertex in slot `a` of stratum `s` (column `a` of `A_S`).
    pub fn vertex_image(&self, s: StratumId, a: usize) -> Vec<Int> {
        self.pieces[s.0].column(a)
    }

    pub fn vertex_images(&self, s: StratumId) -> Vec<Vec<Int>> {
        (0..self.pieces[s.0].cols())
            .map(|a| self.vertex_image(s, a))
            .collect()
    }

    pub fn image(&self, s: StratumId, u: &[Rational]) -> Vec<Rational> {
        let a = &self.pieces[s.0];
        assert_eq!(u.len(), a.cols(), "weight length mismatch");
        (0..a.rows())
            .map(|i| {
                a.row(i)
                    .iter()
                    .zip(u)
                    .filter(|(c, _)| !c.is_zero())
                    .fold(Rational::zero(), |acc, (c, x)| acc + rat_int(c) * x)
            })
            .collect()
    }

    /// The same point in `TP^ell`, prepending the base coordinate
    /// `-log|s_0 / s_0| = 0`.
    pub fn projective_image(&self, s: StratumId, u: &[Rational]) -> TropicalProjectivePoint {
        let mut coords = vec![TropValue::Finite(Rational::zero())];
        coords.extend(self.image(s, u).into_iter().map(TropValue::Finite));
        trop_normalize(&coords).expect("finite coordinates")
    }

    /// Edge vectors `A_S(e_b - e_1)`, `b = 2..r`, as rows.
    pub fn edge_matrix(&self, s: StratumId) -> IntMatrix {
        let a = &self.pieces[s.0];
        let mut e = IntMatrix::zeros(a.cols().saturating_sub(1), self.n);
        for b in 1..a.cols() {
            for i in 0..self.n {
                e[(b - 1, i)] = &a[(i, b)] - &a[(i, 0)];
            }
        }
        e
    }

    /// Injectivity of the piece on its simplex, by exact rational rank.
    pub fn piece_injective(&self, s: StratumId) -> bool {
        let e = self.edge_matrix(s);
        rational_rank(&e) == e.rows()
    }

    pub(crate) fn stratum(&self, s: StratumId) -> &Stratum {
        self.complex.stratum(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnimodularityCertificate {
    pub stratum: StratumId,
    pub edge_matrix: Vec<Vec<Int>>,
    pub elementary_divisors: Vec<Int>,
    pub rank: usize,
    pub verdict: bool,
}

/// Unimodularity of the piece on `s`: the edge vectors must be independent and
/// extend to a basis of `Z^n`, i.e. every elementary divisor equals one.
/// A vertex stratum is vacuously unimodular.
pub fn check_unimodular(f: &PiecewiseAffineMap<'_>, s: StratumId) -> UnimodularityCertificate {
    let e = f.edge_matrix(s);
    let snf = smith_normal_form(&e);
    let divisors = snf.divisors();
    let rank = snf.rank();
    let verdict = rank == e.rows() && divisors.iter().all(One::is_one);
    UnimodularityCertificate {
        stratum: s,
        edge_matrix: e.to_rows(),
        elementary_divisors: divisors,
        rank,
        verdict,
    }
}
