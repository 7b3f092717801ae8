//! Dense two-phase primal simplex over exact rationals with Bland's rule.

use num_traits::{Signed, Zero};

use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpOutcome {
    Infeasible,
    Unbounded,
    Optimal {
        point: Vec<Rational>,
        value: Rational,
    },
}

struct Tableau {
    rows: Vec<Vec<Rational>>,
    basis: Vec<usize>,
    width: usize,
}

impl Tableau {
    fn rhs(&self, i: usize) -> &Rational {
        &self.rows[i][self.width]
    }

    fn pivot(&mut self, row: usize, col: usize) {
        let p = self.rows[row][col].clone();
        for x in self.rows[row].iter_mut() {
            *x /= &p;
        }
        let pivot_row = self.rows[row].clone();
        for (i, r) in self.rows.iter_mut().enumerate() {
            if i == row || r[col].is_zero() {
                continue;
            }
            let f = r[col].clone();
            for (x, y) in r.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        self.basis[row] = col;
    }

    /// Maximizes `cost` over columns flagged in `allowed`. Returns false if unbounded.
    fn optimize(&mut self, cost: &[Rational], allowed: &[bool]) -> bool {
        loop {
            let mut entering = None;
            for j in 0..self.width {
                if !allowed[j] || self.basis.contains(&j) {
                    continue;
                }
                let mut reduced = cost[j].clone();
                for (i, &b) in self.basis.iter().enumerate() {
                    if !self.rows[i][j].is_zero() {
                        reduced -= &cost[b] * &self.rows[i][j];
                    }
                }
                if reduced.is_positive() {
                    entering = Some(j);
                    break;
                }
            }
            let Some(col) = entering else {
                return true;
            };
            let mut leaving: Option<(usize, Rational)> = None;
            for i in 0..self.rows.len() {
                let a = &self.rows[i][col];
                if !a.is_positive() {
                    continue;
                }
                let ratio = self.rhs(i) / a;
                let better = match &leaving {
                    None => true,
                    Some((li, lr)) => {
                        ratio < *lr || (ratio == *lr && self.basis[i] < self.basis[*li])
                    }
                };
                if better {
                    leaving = Some((i, ratio));
                }
            }
            match leaving {
                Some((row, _)) => self.pivot(row, col),
                None => return false,
            }
        }
    }

    fn objective(&self, cost: &[Rational]) -> Rational {
        self.basis
            .iter()
            .enumerate()
            .fold(Rational::zero(), |acc, (i, &b)| {
                acc + &cost[b] * self.rhs(i)
            })
    }
}

/// Maximizes `c·z` subject to `a z <= b`, `z >= 0`.
pub fn maximize(c: &[Rational], a: &[Vec<Rational>], b: &[Rational]) -> LpOutcome {
    let n = c.len();
    let m = a.len();
    assert_eq!(b.len(), m, "constraint/bound count mismatch");
    let negative: Vec<usize> = (0..m).filter(|&i| b[i].is_negative()).collect();
    let width = n + m + negative.len();
    let one = Rational::from_integer(1.into());

    let mut rows = Vec::with_capacity(m);
    let mut basis = Vec::with_capacity(m);
    for i in 0..m {
        assert_eq!(a[i].len(), n, "constraint row {i} has wrong length");
        let mut row = vec![Rational::zero(); width + 1];
        let flip = b[i].is_negative();
        for j in 0..n {
            row[j] = if flip {
                -a[i][j].clone()
            } else {
                a[i][j].clone()
            };
        }
        row[n + i] = if flip { -one.clone() } else { one.clone() };
        row[width] = if flip { -b[i].clone() } else { b[i].clone() };
        if flip {
            let k = negative.iter().position(|&x| x == i).unwrap();
            row[n + m + k] = one.clone();
            basis.push(n + m + k);
        } else {
            basis.push(n + i);
        }
        rows.push(row);
    }
    let mut t = Tableau { rows, basis, width };

    if !negative.is_empty() {
        let mut cost = vec![Rational::zero(); width];
        for c in cost.iter_mut().skip(n + m) {
            *c = -one.clone();
        }
        let allowed = vec![true; width];
        t.optimize(&cost, &allowed);
        if t.objective(&cost).is_negative() {
            return LpOutcome::Infeasible;
        }
        // drive zero-level artificials out of the basis
        let mut i = 0;
        while i < t.rows.len() {
            if t.basis[i] >= n + m {
                match (0..n + m).find(|&j| !t.rows[i][j].is_zero()) {
                    Some(j) => t.pivot(i, j),
                    None => {
                        t.rows.remove(i);
                        t.basis.remove(i);
                        continue;
                    }
                }
            }
            i += 1;
        }
    }

    let mut cost = vec![Rational::zero(); width];
    cost[..n].clone_from_slice(c);
    let allowed: Vec<bool> = (0..width).map(|j| j < n + m).collect();
    if !t.optimize(&cost, &allowed) {
        return LpOutcome::Unbounded;
    }
    let mut point = vec![Rational::zero(); n];
    for (i, &bcol) in t.basis.iter().enumerate() {
        if bcol < n {
            point[bcol] = t.rhs(i).clone();
        }
    }
    let value = t.objective(&cost);
    LpOutcome::Optimal { point, value }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn r(v: &[(i64, i64)]) -> Vec<Rational> {
        v.iter().map(|&(n, d)| rat(n, d)).collect()
    }

    #[test]
    fn textbook_optimum() {
        // max 3x + 5y, x <= 4, 2y <= 12, 3x + 2y <= 18  ->  (2, 6), 36
        let a = vec![
            r(&[(1, 1), (0, 1)]),
            r(&[(0, 1), (2, 1)]),
            r(&[(3, 1), (2, 1)]),
        ];
        let out = maximize(&r(&[(3, 1), (5, 1)]), &a, &r(&[(4, 1), (12, 1), (18, 1)]));
        assert_eq!(
            out,
            LpOutcome::Optimal {
                point: r(&[(2, 1), (6, 1)]),
                value: rat(36, 1)
            }
        );
    }

    #[test]
    fn infeasible_and_unbounded() {
        // x >= 2 and x <= 1
        let a = vec![r(&[(-1, 1)]), r(&[(1, 1)])];
        assert_eq!(
            maximize(&r(&[(1, 1)]), &a, &r(&[(-2, 1), (1, 1)])),
            LpOutcome::Infeasible
        );
        let a = vec![r(&[(-1, 1)])];
        assert_eq!(
            maximize(&r(&[(1, 1)]), &a, &r(&[(-2, 1)])),
            LpOutcome::Unbounded
        );
    }

    #[test]
    fn phase_one_with_equality_pair() {
        // x + y = 1 (as two rows), max x - y  ->  x = 1
        let a = vec![r(&[(1, 1), (1, 1)]), r(&[(-1, 1), (-1, 1)])];
        let out = maximize(&r(&[(1, 1), (-1, 1)]), &a, &r(&[(1, 1), (-1, 1)]));
        match out {
            LpOutcome::Optimal { point, value } => {
                assert_eq!(value, rat(1, 1));
                assert_eq!(point, r(&[(1, 1), (0, 1)]));
            }
            other => panic!("unexpected {other:?}"),
        }
    }
}
