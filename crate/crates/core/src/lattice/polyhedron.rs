//! Rational polyhedra with strict and closed constraints, and an exact test for
//! whether two of them share a point.
//!
//! A polyhedron may carry auxiliary variables that are existentially
//! quantified; this is how affine images of simplices are expressed without
//! computing facet descriptions. The feasibility test maximizes the minimum
//! slack over the strict constraints and accepts only a strictly positive
//! optimum, so strictness is handled without any epsilon.

use num_traits::{One, Signed, Zero};

use super::simplex::{maximize, LpOutcome};
use crate::rational::{rat_int, Int, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Strictness {
    Closed,
    Strict,
}

/// `normal · z <= bound` (or `<`), where `z` is the ambient point followed by
/// the auxiliary variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constraint {
    pub normal: Vec<Int>,
    pub bound: Rational,
    pub strictness: Strictness,
}

impl Constraint {
    pub fn closed(normal: Vec<Int>, bound: Rational) -> Self {
        Self {
            normal,
            bound,
            strictness: Strictness::Closed,
        }
    }

    pub fn strict(normal: Vec<Int>, bound: Rational) -> Self {
        Self {
            normal,
            bound,
            strictness: Strictness::Strict,
        }
    }

    pub fn is_satisfied(&self, z: &[Rational]) -> bool {
        let lhs = self
            .normal
            .iter()
            .zip(z)
            .fold(Rational::zero(), |acc, (a, x)| acc + rat_int(a) * x);
        match self.strictness {
            Strictness::Closed => lhs <= self.bound,
            Strictness::Strict => lhs < self.bound,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyhedronError {
    #[error("constraint {index} has a zero normal vector")]
    ZeroNormal { index: usize },
    #[error("constraint {index} has length {got}, expected {expected}")]
    NormalLength {
        index: usize,
        expected: usize,
        got: usize,
    },
    #[error("ambient dimensions differ: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },
    #[error("points of a hull must share one dimension")]
    RaggedPoints,
    #[error("hull of an empty point set")]
    EmptyHull,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalPolyhedron {
    ambient_dim: usize,
    aux_dim: usize,
    constraints: Vec<Constraint>,
}

impl RationalPolyhedron {
    pub fn new(
        ambient_dim: usize,
        aux_dim: usize,
        constraints: Vec<Constraint>,
    ) -> Result<Self, PolyhedronError> {
        let width = ambient_dim + aux_dim;
        for (index, c) in constraints.iter().enumerate() {
            if c.normal.len() != width {
                return Err(PolyhedronError::NormalLength {
                    index,
                    expected: width,
                    got: c.normal.len(),
                });
            }
            if c.normal.iter().all(Zero::is_zero) {
                return Err(PolyhedronError::ZeroNormal { index });
            }
        }
        Ok(Self {
            ambient_dim,
            aux_dim,
            constraints,
        })
    }

    /// Convex hull of integer points, as `{ x = Σ λ_b p_b : Σ λ_b = 1, λ >= 0 }`.
    /// With `relative_interior` the weights are required to be strictly
    /// positive, which describes the relative interior of the hull.
    pub fn hull_of_points(
        points: &[Vec<Int>],
        relative_interior: bool,
    ) -> Result<Self, PolyhedronError> {
        let Some(first) = points.first() else {
            return Err(PolyhedronError::EmptyHull);
        };
        let dim = first.len();
        if points.iter().any(|p| p.len() != dim) {
            return Err(PolyhedronError::RaggedPoints);
        }
        let k = points.len();
        let width = dim + k;
        let mut cs = Vec::with_capacity(2 * dim + 2 + k);
        for i in 0..dim {
            let mut normal = vec![Int::zero(); width];
            normal[i] = Int::one();
            for (b, p) in points.iter().enumerate() {
                normal[dim + b] = -p[i].clone();
            }
            let negated = normal.iter().map(|x| -x).collect();
            cs.push(Constraint::closed(normal, Rational::zero()));
            cs.push(Constraint::closed(negated, Rational::zero()));
        }
        let mut sum = vec![Int::zero(); width];
        for x in &mut sum[dim..] {
            *x = Int::one();
        }
        let neg_sum = sum.iter().map(|x| -x).collect();
        cs.push(Constraint::closed(sum, Rational::one()));
        cs.push(Constraint::closed(neg_sum, -Rational::one()));
        for b in 0..k {
            let mut normal = vec![Int::zero(); width];
            normal[dim + b] = -Int::one();
            cs.push(Constraint {
                normal,
                bound: Rational::zero(),
                strictness: if relative_interior {
                    Strictness::Strict
                } else {
                    Strictness::Closed
                },
            });
        }
        Self::new(dim, k, cs)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn aux_dim(&self) -> usize {
        self.aux_dim
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    /// Exact membership of an ambient point: decides whether auxiliary values exist.
    pub fn contains(&self, x: &[Rational]) -> bool {
        assert_eq!(x.len(), self.ambient_dim, "point has wrong dimension");
        let mut cs = self.constraints.clone();
        for (i, xi) in x.iter().enumerate() {
            let mut e = vec![Int::zero(); self.ambient_dim + self.aux_dim];
            e[i] = Int::one();
            let neg = e.iter().map(|v| -v).collect();
            cs.push(Constraint::closed(e, xi.clone()));
            cs.push(Constraint::closed(neg, -xi.clone()));
        }
        feasible_point(self.ambient_dim + self.aux_dim, &cs).is_some()
    }
}

/// Exact decision of `P ∩ Q != ∅`; returns an ambient witness point when nonempty.
pub fn relint_intersection_nonempty(
    p: &RationalPolyhedron,
    q: &RationalPolyhedron,
) -> Result<Option<Vec<Rational>>, PolyhedronError> {
    if p.ambient_dim != q.ambient_dim {
        return Err(PolyhedronError::AmbientMismatch {
            left: p.ambient_dim,
            right: q.ambient_dim,
        });
    }
    let n = p.ambient_dim;
    let width = n + p.aux_dim + q.aux_dim;
    let mut cs = Vec::with_capacity(p.constraints.len() + q.constraints.len());
    for c in &p.constraints {
        let mut normal = c.normal.clone();
        normal.resize(width, Int::zero());
        cs.push(Constraint {
            normal,
            ..c.clone()
        });
    }
    for c in &q.constraints {
        let mut normal = c.normal[..n].to_vec();
        normal.resize(n + p.aux_dim, Int::zero());
        normal.extend_from_slice(&c.normal[n..]);
        cs.push(Constraint {
            normal,
            ..c.clone()
        });
    }
    Ok(feasible_point(width, &cs).map(|mut z| {
        debug_assert!(cs.iter().all(|c| c.is_satisfied(&z)));
        z.truncate(n);
        z
    }))
}

struct Row {
    a: Vec<Rational>,
    b: Rational,
    strict: bool,
}

/// `λ > 0` with `x = -λ y` and `c = -λ d`, i.e. the two closed rows pin an equality.
fn opposite(x: &Row, y: &Row) -> bool {
    let Some(k) = x.a.iter().position(|v| !v.is_zero()) else {
        return false;
    };
    if y.a[k].is_zero() {
        return false;
    }
    let lambda = -(&x.a[k] / &y.a[k]);
    lambda.is_positive()
        && x.a.iter().zip(&y.a).all(|(u, v)| *u == -&lambda * v)
        && x.b == -&lambda * &y.b
}

/// Exact feasibility of a mixed strict/closed system in `width` free variables.
fn feasible_point(width: usize, constraints: &[Constraint]) -> Option<Vec<Rational>> {
    let mut rows: Vec<Row> = constraints
        .iter()
        .map(|c| Row {
            a: c.normal.iter().map(rat_int).collect(),
            b: c.bound.clone(),
            strict: c.strictness == Strictness::Strict,
        })
        .collect();

    // pair up closed rows describing equalities
    let mut equalities: Vec<(Vec<Rational>, Rational)> = Vec::new();
    let mut used = vec![false; rows.len()];
    for i in 0..rows.len() {
        if used[i] || rows[i].strict {
            continue;
        }
        if let Some(j) = (i + 1..rows.len())
            .find(|&j| !used[j] && !rows[j].strict && opposite(&rows[i], &rows[j]))
        {
            used[i] = true;
            used[j] = true;
            equalities.push((rows[i].a.clone(), rows[i].b.clone()));
        }
    }
    let mut k = 0;
    rows.retain(|_| {
        k += 1;
        !used[k - 1]
    });

    // reduced row echelon form of the equalities
    let mut pivots: Vec<(usize, Vec<Rational>, Rational)> = Vec::new();
    let mut eq = equalities;
    let mut next = 0;
    for col in 0..width {
        let Some(p) = (next..eq.len()).find(|&r| !eq[r].0[col].is_zero()) else {
            continue;
        };
        eq.swap(next, p);
        let piv = eq[next].0[col].clone();
        for v in eq[next].0.iter_mut() {
            *v /= &piv;
        }
        eq[next].1 /= &piv;
        let (pa, pb) = eq[next].clone();
        for (r, (a, b)) in eq.iter_mut().enumerate() {
            if r == next || a[col].is_zero() {
                continue;
            }
            let f = a[col].clone();
            for (x, y) in a.iter_mut().zip(&pa) {
                *x -= &f * y;
            }
            *b -= &f * &pb;
        }
        next += 1;
    }
    for (a, b) in &eq[next..] {
        debug_assert!(a.iter().all(Zero::is_zero));
        if !b.is_zero() {
            return None;
        }
    }
    for (a, b) in &eq[..next] {
        let col = a.iter().position(|v| !v.is_zero()).unwrap();
        pivots.push((col, a.clone(), b.clone()));
    }
    let is_pivot: Vec<bool> = (0..width)
        .map(|c| pivots.iter().any(|(p, _, _)| *p == c))
        .collect();
    let free: Vec<usize> = (0..width).filter(|&c| !is_pivot[c]).collect();

    // substitute x_p = b_p - Σ_f a_pf x_f into the inequalities
    let mut reduced: Vec<Row> = Vec::new();
    for row in &rows {
        let mut a: Vec<Rational> = free.iter().map(|&f| row.a[f].clone()).collect();
        let mut b = row.b.clone();
        for (p, pa, pb) in &pivots {
            let coef = &row.a[*p];
            if coef.is_zero() {
                continue;
            }
            b -= coef * pb;
            for (slot, &f) in free.iter().enumerate() {
                if !pa[f].is_zero() {
                    a[slot] -= coef * &pa[f];
                }
            }
        }
        if a.iter().all(Zero::is_zero) {
            let ok = if row.strict {
                b.is_positive()
            } else {
                !b.is_negative()
            };
            if !ok {
                return None;
            }
            continue;
        }
        reduced.push(Row {
            a,
            b,
            strict: row.strict,
        });
    }

    // max τ  s.t.  a(y⁺ - y⁻) + [strict] τ <= b,  τ <= 1
    let k = free.len();
    let nvars = 2 * k + 1;
    let mut lp_a = Vec::with_capacity(reduced.len() + 1);
    let mut lp_b = Vec::with_capacity(reduced.len() + 1);
    for row in &reduced {
        let mut line = vec![Rational::zero(); nvars];
        for (j, v) in row.a.iter().enumerate() {
            line[j] = v.clone();
            line[k + j] = -v.clone();
        }
        if row.strict {
            line[2 * k] = Rational::one();
        }
        lp_a.push(line);
        lp_b.push(row.b.clone());
    }
    let mut cap = vec![Rational::zero(); nvars];
    cap[2 * k] = Rational::one();
    lp_a.push(cap.clone());
    lp_b.push(Rational::one());

    let y = match maximize(&cap, &lp_a, &lp_b) {
        LpOutcome::Optimal { point, value } if value.is_positive() => (0..k)
            .map(|j| &point[j] - &point[k + j])
            .collect::<Vec<_>>(),
        LpOutcome::Optimal { .. } | LpOutcome::Infeasible => return None,
        LpOutcome::Unbounded => unreachable!("slack variable is capped"),
    };

    let mut z = vec![Rational::zero(); width];
    for (slot, &f) in free.iter().enumerate() {
        z[f] = y[slot].clone();
    }
    for (p, pa, pb) in &pivots {
        let mut v = pb.clone();
        for &f in &free {
            if !pa[f].is_zero() {
                v -= &pa[f] * &z[f];
            }
        }
        z[*p] = v;
    }
    Some(z)
}
