//! Sections `s_0, s_1, ..., s_ell` of the adjoint bundle, recorded through
//! their vanishing orders along the special-fiber components, and the affine
//! functionals `-log|s_i / s_0|` they induce on each canonical simplex.

use std::fmt;

use num_traits::Zero;
use serde::Serialize;

use crate::complex::{DualComplex, Stratum, StratumId};
use crate::rational::{is_barycentric, Rational};
use crate::trop::{eval_min_plus, MonomialSupport};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SectionError {
    #[error("order matrix is for {matrix} components, complex has {complex}")]
    DimensionMismatch { matrix: usize, complex: usize },
    #[error("order matrix must have {expected} rows of length {ell}, row {row} has {got}")]
    Shape {
        expected: usize,
        ell: usize,
        row: usize,
        got: usize,
    },
    #[error("section index {index} out of range 1..={ell}")]
    SectionOutOfRange { index: usize, ell: usize },
    #[error("weights of length {got} do not form a point of a simplex with {expected} vertices")]
    BadWeights { expected: usize, got: usize },
    #[error("horizontal part of div(f_{0}) is not known to be effective; no lower bound")]
    NotHorizontallyEffective(usize),
}

/// Orders `ord_{X_{s,i'}}(s_i)` for rows `i = 0..=ell` (row 0 is the base
/// section) and components `i' = 1..=ell`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderMatrix {
    ell: usize,
    rows: Vec<Vec<u64>>,
    horizontal_effective: Vec<bool>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum OrderRule {
    /// The base section vanishes along no component.
    BaseRowNonzero,
    /// `s_i` does not vanish along its own component.
    DiagonalNonzero,
    /// Order exactly one along components meeting `X_{s,i}`.
    AdjacentOrderNotOne,
    /// Order at least one along every other component.
    ZeroExtension,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrderViolation {
    pub row: usize,
    pub component: usize,
    pub rule: OrderRule,
    pub value: u64,
}

impl fmt::Display for OrderViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let want = match self.rule {
            OrderRule::BaseRowNonzero | OrderRule::DiagonalNonzero => "0",
            OrderRule::AdjacentOrderNotOne => "1 (component meets X_{s,i})",
            OrderRule::ZeroExtension => ">= 1 (zero extension)",
        };
        write!(
            f,
            "M[{}][{}] = {}, expected {want}",
            self.row, self.component, self.value
        )
    }
}

impl OrderMatrix {
    pub fn new(
        ell: usize,
        rows: Vec<Vec<u64>>,
        horizontal_effective: Vec<bool>,
    ) -> Result<Self, SectionError> {
        if rows.len() != ell + 1 || horizontal_effective.len() != ell + 1 {
            return Err(SectionError::Shape {
                expected: ell + 1,
                ell,
                row: rows.len().min(horizontal_effective.len()),
                got: rows.len(),
            });
        }
        if let Some((row, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != ell) {
            return Err(SectionError::Shape {
                expected: ell + 1,
                ell,
                row,
                got: r.len(),
            });
        }
        Ok(Self {
            ell,
            rows,
            horizontal_effective,
        })
    }

    /// All rows flagged horizontally effective.
    pub fn from_rows(ell: usize, rows: Vec<Vec<u64>>) -> Result<Self, SectionError> {
        Self::new(ell, rows, vec![true; ell + 1])
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    pub fn horizontal_effective(&self, row: usize) -> bool {
        self.horizontal_effective[row]
    }

    /// `ord_{X_{s,component}}(s_row)`, component 1-indexed.
    pub fn order(&self, row: usize, component: usize) -> u64 {
        self.rows[row][component - 1]
    }

    pub fn set_order(&mut self, row: usize, component: usize, value: u64) {
        self.rows[row][component - 1] = value;
    }

    pub fn set_horizontal_effective(&mut self, row: usize, flag: bool) {
        self.horizontal_effective[row] = flag;
    }

    fn check_section(&self, i: usize) -> Result<(), SectionError> {
        if i == 0 || i > self.ell {
            return Err(SectionError::SectionOutOfRange {
                index: i,
                ell: self.ell,
            });
        }
        Ok(())
    }
}

/// The minimal choice: order 0 for the base section and along a section's own
/// component, order 1 along every other component.
pub fn canonical_order_matrix(c: &DualComplex) -> OrderMatrix {
    let ell = c.ell();
    let mut rows = vec![vec![0; ell]];
    for i in 1..=ell {
        rows.push((1..=ell).map(|j| u64::from(i != j)).collect());
    }
    OrderMatrix {
        ell,
        rows,
        horizontal_effective: vec![true; ell + 1],
    }
}

pub fn validate_orders(
    m: &OrderMatrix,
    c: &DualComplex,
) -> Result<Vec<OrderViolation>, SectionError> {
    if m.ell != c.ell() {
        return Err(SectionError::DimensionMismatch {
            matrix: m.ell,
            complex: c.ell(),
        });
    }
    let edges = c.edges();
    let mut out = Vec::new();
    for j in 1..=m.ell {
        let v = m.order(0, j);
        if v != 0 {
            out.push(OrderViolation {
                row: 0,
                component: j,
                rule: OrderRule::BaseRowNonzero,
                value: v,
            });
        }
    }
    for i in 1..=m.ell {
        for j in 1..=m.ell {
            let value = m.order(i, j);
            let rule = if i == j {
                (value != 0).then_some(OrderRule::DiagonalNonzero)
            } else if edges.contains(&(i.min(j), i.max(j))) {
                (value != 1).then_some(OrderRule::AdjacentOrderNotOne)
            } else {
                (value == 0).then_some(OrderRule::ZeroExtension)
            };
            if let Some(rule) = rule {
                out.push(OrderViolation {
                    row: i,
                    component: j,
                    rule,
                    value,
                });
            }
        }
    }
    Ok(out)
}

/// `u ↦ <coefficients, u> + constant` on the canonical simplex of a stratum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineFunctional {
    pub stratum: StratumId,
    pub coefficients: Vec<Rational>,
    pub constant: Rational,
}

impl AffineFunctional {
    pub fn evaluate(&self, u: &[Rational]) -> Rational {
        assert_eq!(u.len(), self.coefficients.len(), "weight length mismatch");
        self.coefficients
            .iter()
            .zip(u)
            .fold(self.constant.clone(), |acc, (c, x)| acc + c * x)
    }

    /// Value at the vertex in slot `a`.
    pub fn at_vertex(&self, a: usize) -> Rational {
        &self.coefficients[a] + &self.constant
    }
}

fn weights_ok(s: &Stratum, u: &[Rational]) -> Result<(), SectionError> {
    if u.len() != s.vertices.len() || !is_barycentric(u) {
        return Err(SectionError::BadWeights {
            expected: s.vertices.len(),
            got: u.len(),
        });
    }
    Ok(())
}

/// `-log|f_i|` on the canonical simplex of `s`, where `f_i = s_i / s_0`: the
/// functional whose coefficient on slot `b` is the order of `s_i` along
/// `X_{s,j_b}`.
pub fn restrict_affine(
    m: &OrderMatrix,
    i: usize,
    s: &Stratum,
) -> Result<AffineFunctional, SectionError> {
    m.check_section(i)?;
    if let Some(&j) = s.vertices.iter().find(|&&j| j == 0 || j > m.ell) {
        return Err(SectionError::SectionOutOfRange {
            index: j,
            ell: m.ell,
        });
    }
    Ok(AffineFunctional {
        stratum: s.id,
        coefficients: s
            .vertices
            .iter()
            .map(|&j| Rational::from_integer(m.order(i, j).into()))
            .collect(),
        constant: Rational::zero(),
    })
}

/// Value of `-log|f_i|` at `u` computed as a monomial valuation: near the
/// generic point of the stratum, `f_i` is a unit times the single monomial
/// `∏ T_{j_b}^{ord}`.
pub fn value_via_monomial(
    m: &OrderMatrix,
    i: usize,
    s: &Stratum,
    u: &[Rational],
) -> Result<Rational, SectionError> {
    m.check_section(i)?;
    weights_ok(s, u)?;
    let exps = s.vertices.iter().map(|&j| m.order(i, j)).collect();
    Ok(eval_min_plus(&MonomialSupport::monomial(exps), u).expect("shape checked"))
}

/// `Σ_a u_a g(v_{j_a})`, a lower bound for `g = -log|f_i|` at `(u, S)` valid
/// whenever the horizontal part of `div(f_i)` is effective near `S`.
pub fn concavity_lower_bound(
    m: &OrderMatrix,
    i: usize,
    s: &Stratum,
    u: &[Rational],
) -> Result<Rational, SectionError> {
    m.check_section(i)?;
    if !m.horizontal_effective[i] {
        return Err(SectionError::NotHorizontallyEffective(i));
    }
    weights_ok(s, u)?;
    Ok(s.vertices
        .iter()
        .zip(u)
        .fold(Rational::zero(), |acc, (&j, x)| {
            acc + x * Rational::from_integer(m.order(i, j).into())
        }))
}
