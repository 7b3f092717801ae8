use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::{IntMatrix, MatrixError};
use crate::rational::{Int, Rational};

/// `u * m * v == d` with `u`, `v` unimodular and `d` diagonal, `d_1 | d_2 | ...`.
///
/// `v_inv` is carried along so that a saturated row lattice can be completed
/// to a basis without a separate inversion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
    pub v_inv: IntMatrix,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        let n = self.d.rows().min(self.d.cols());
        (0..n).take_while(|&i| !self.d[(i, i)].is_zero()).count()
    }

    /// Nonzero diagonal entries, all positive.
    pub fn divisors(&self) -> Vec<Int> {
        (0..self.rank()).map(|i| self.d[(i, i)].clone()).collect()
    }
}

struct Reducer {
    a: IntMatrix,
    u: IntMatrix,
    v: IntMatrix,
    v_inv: IntMatrix,
}

impl Reducer {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        self.u.swap_rows(i, j);
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        self.v.swap_cols(i, j);
        self.v_inv.swap_rows(i, j);
    }

    fn add_row(&mut self, dst: usize, src: usize, f: &Int) {
        self.a.add_row_multiple(dst, src, f);
        self.u.add_row_multiple(dst, src, f);
    }

    fn add_col(&mut self, dst: usize, src: usize, f: &Int) {
        self.a.add_col_multiple(dst, src, f);
        self.v.add_col_multiple(dst, src, f);
        self.v_inv.add_row_multiple(src, dst, &-f);
    }

    /// Position of the smallest nonzero |entry| in the trailing block at `t`.
    fn smallest_pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for r in t..self.a.rows() {
            for c in t..self.a.cols() {
                let x = &self.a[(r, c)];
                if x.is_zero() {
                    continue;
                }
                if best.is_none_or(|(br, bc)| x.abs() < self.a[(br, bc)].abs()) {
                    best = Some((r, c));
                }
            }
        }
        best
    }

    /// Clears row and column `t` below/right of the pivot. Returns false when a
    /// nonzero remainder appeared and the pivot must be re-chosen.
    fn clear_cross(&mut self, t: usize) -> bool {
        let p = self.a[(t, t)].clone();
        let mut clean = true;
        for r in t + 1..self.a.rows() {
            if self.a[(r, t)].is_zero() {
                continue;
            }
            let q = self.a[(r, t)].div_floor(&p);
            self.add_row(r, t, &-q);
            clean &= self.a[(r, t)].is_zero();
        }
        for c in t + 1..self.a.cols() {
            if self.a[(t, c)].is_zero() {
                continue;
            }
            let q = self.a[(t, c)].div_floor(&p);
            self.add_col(c, t, &-q);
            clean &= self.a[(t, c)].is_zero();
        }
        clean
    }

    fn run(mut self) -> SmithForm {
        let n = self.a.rows().min(self.a.cols());
        for t in 0..n {
            loop {
                let Some((r, c)) = self.smallest_pivot(t) else {
                    return self.finish();
                };
                self.swap_rows(t, r);
                self.swap_cols(t, c);
                if !self.clear_cross(t) {
                    continue;
                }
                // divisibility: fold an offending row into the pivot row and retry
                let p = self.a[(t, t)].clone();
                let offending = (t + 1..self.a.rows())
                    .find(|&r| (t + 1..self.a.cols()).any(|c| !self.a[(r, c)].is_multiple_of(&p)));
                match offending {
                    Some(r) => self.add_row(t, r, &Int::one()),
                    None => break,
                }
            }
            if self.a[(t, t)].is_negative() {
                self.a.negate_row(t);
                self.u.negate_row(t);
            }
        }
        self.finish()
    }

    fn finish(self) -> SmithForm {
        SmithForm {
            u: self.u,
            d: self.a,
            v: self.v,
            v_inv: self.v_inv,
        }
    }
}

/// Smith normal form with smallest-absolute-value pivoting.
pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    Reducer {
        a: m.clone(),
        u: IntMatrix::identity(m.rows()),
        v: IntMatrix::identity(m.cols()),
        v_inv: IntMatrix::identity(m.cols()),
    }
    .run()
}

pub fn elementary_divisors(m: &IntMatrix) -> Vec<Int> {
    smith_normal_form(m).divisors()
}

fn rows_matrix(vectors: &[Vec<Int>]) -> Result<Option<IntMatrix>, MatrixError> {
    match vectors.first() {
        None => Ok(None),
        Some(first) => IntMatrix::from_rows(vectors, first.len()).map(Some),
    }
}

/// True iff the vectors are linearly independent and span a saturated
/// sublattice, i.e. they are part of a Z-basis of Z^n.
pub fn extends_to_basis(vectors: &[Vec<Int>]) -> Result<bool, MatrixError> {
    let Some(m) = rows_matrix(vectors)? else {
        return Ok(true);
    };
    if m.rows() > m.cols() {
        return Ok(false);
    }
    let snf = smith_normal_form(&m);
    Ok(snf.rank() == m.rows() && snf.divisors().iter().all(One::is_one))
}

/// Square unimodular matrix whose first rows are `vectors`, when they extend
/// to a basis of Z^n (`n` is taken from the vectors, or `dim` if the list is empty).
pub fn basis_completion(
    vectors: &[Vec<Int>],
    dim: usize,
) -> Result<Option<IntMatrix>, MatrixError> {
    let Some(m) = rows_matrix(vectors)? else {
        return Ok(Some(IntMatrix::identity(dim)));
    };
    if !extends_to_basis(vectors)? {
        return Ok(None);
    }
    // u m v = [I 0]  =>  m = u^{-1} [I 0] v^{-1}; rows k.. of v^{-1} complete it.
    let snf = smith_normal_form(&m);
    let k = m.rows();
    let n = m.cols();
    let mut rows = m.to_rows();
    rows.extend((k..n).map(|r| snf.v_inv.row(r).to_vec()));
    IntMatrix::from_rows(&rows, n).map(Some)
}

/// Rank over Q by exact Gaussian elimination; independent of the SNF code path.
pub fn rational_rank(m: &IntMatrix) -> usize {
    let mut a: Vec<Vec<Rational>> = m
        .to_rows()
        .into_iter()
        .map(|r| r.into_iter().map(Rational::from_integer).collect())
        .collect();
    let (rows, cols) = (m.rows(), m.cols());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let (top, rest) = a.split_at_mut(rank + 1);
        let pivot = &top[rank];
        for row in rest {
            if row[c].is_zero() {
                continue;
            }
            let f = &row[c] / &pivot[c];
            for (x, y) in row[c..].iter_mut().zip(&pivot[c..]) {
                *x -= &f * y;
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}
