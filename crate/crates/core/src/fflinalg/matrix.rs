//! Exact dense matrices over `GF(q)` with deterministic row reduction.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::galois::{FieldCtx, FieldElement};

/// Row-major matrix over a finite field. Zero-row matrices are legal and
/// show up as generator matrices of the zero code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    field: FieldCtx,
    rows: usize,
    cols: usize,
    data: Vec<FieldElement>,
}

impl Matrix {
    pub fn new(field: &FieldCtx, rows: usize, cols: usize, data: Vec<FieldElement>) -> Matrix {
        assert_eq!(data.len(), rows * cols, "data length must equal rows*cols");
        for v in &data {
            assert_eq!(v.field_order(), field.order(), "entry from a different field");
        }
        Matrix { field: field.clone(), rows, cols, data }
    }

    pub fn zero(field: &FieldCtx, rows: usize, cols: usize) -> Matrix {
        Matrix::new(field, rows, cols, vec![field.zero(); rows * cols])
    }

    pub fn identity(field: &FieldCtx, n: usize) -> Matrix {
        let mut m = Matrix::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: &FieldCtx, rows: Vec<Vec<FieldElement>>) -> Matrix {
        let nrows = rows.len();
        let cols = rows.first().map(|r| r.len()).unwrap_or(0);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        let data = rows.into_iter().flatten().collect();
        Matrix::new(field, nrows, cols, data)
    }

    pub fn field(&self) -> &FieldCtx {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> FieldElement {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: FieldElement) {
        assert_eq!(v.field_order(), self.field.order());
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[FieldElement] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vec(&self, r: usize) -> Vec<FieldElement> {
        self.row(r).to_vec()
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zero(&self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.get(r, c));
            }
        }
        out
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.field != other.field || self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        let f = &self.field;
        let mut out = Matrix::zero(f, self.rows, other.cols);
        for r in 0..self.rows {
            for c in 0..other.cols {
                let mut acc = f.zero();
                for i in 0..self.cols {
                    acc = f.add(acc, f.mul(self.get(r, i), other.get(i, c)));
                }
                out.set(r, c, acc);
            }
        }
        Ok(out)
    }

    pub fn stack(&self, other: &Matrix) -> Result<Matrix> {
        if self.field != other.field || self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Matrix::new(&self.field, self.rows + other.rows, self.cols, data))
    }

    /// Reduced row echelon form with its pivot columns. Pivoting is
    /// deterministic: for each column left to right, the first unused row
    /// with a nonzero entry becomes the pivot.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let f = self.field.clone();
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut next_row = 0usize;
        for col in 0..m.cols {
            if next_row == m.rows {
                break;
            }
            let pivot_row = (next_row..m.rows).find(|&r| !m.get(r, col).is_zero());
            let pivot_row = match pivot_row {
                Some(r) => r,
                None => continue,
            };
            m.swap_rows(next_row, pivot_row);
            let inv = f.inv(m.get(next_row, col)).unwrap();
            for c in col..m.cols {
                m.set(next_row, c, f.mul(m.get(next_row, c), inv));
            }
            for r in 0..m.rows {
                if r == next_row || m.get(r, col).is_zero() {
                    continue;
                }
                let factor = m.get(r, col);
                for c in col..m.cols {
                    let t = f.mul(factor, m.get(next_row, c));
                    m.set(r, c, f.sub(m.get(r, c), t));
                }
            }
            pivots.push(col);
            next_row += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            let t = self.get(a, c);
            let u = self.get(b, c);
            self.set(a, c, u);
            self.set(b, c, t);
        }
    }

    /// Rank over `GF(q)` by exact row reduction.
    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Rows form a basis of the right kernel `{v : A v^T = 0}`.
    /// Checks rank-nullity and `A v^T = 0` on every returned row.
    pub fn kernel_basis(&self) -> Matrix {
        let f = &self.field;
        let (rref, pivots) = self.rref();
        let rank = pivots.len();
        let mut basis_rows: Vec<Vec<FieldElement>> = Vec::new();
        let mut is_pivot = vec![false; self.cols];
        for &p in pivots.iter() {
            is_pivot[p] = true;
        }
        for free in 0..self.cols {
            if is_pivot[free] {
                continue;
            }
            let mut v = vec![f.zero(); self.cols];
            v[free] = f.one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = f.neg(rref.get(i, free));
            }
            basis_rows.push(v);
        }
        let kernel = if basis_rows.is_empty() {
            Matrix::zero(f, 0, self.cols)
        } else {
            let n = basis_rows.len();
            Matrix::new(f, n, self.cols, basis_rows.into_iter().flatten().collect())
        };
        assert_eq!(rank + kernel.rows, self.cols, "rank-nullity must hold");
        for r in 0..kernel.rows {
            for i in 0..self.rows {
                let mut acc = f.zero();
                for c in 0..self.cols {
                    acc = f.add(acc, f.mul(self.get(i, c), kernel.get(r, c)));
                }
                assert!(acc.is_zero(), "kernel vector fails A v^T = 0");
            }
        }
        kernel
    }

    /// Reduce `row` against this matrix in RREF form; the result is zero iff
    /// `row` lies in the row space.
    fn reduce_against_rref(
        rref: &Matrix,
        pivots: &[usize],
        row: &[FieldElement],
    ) -> Vec<FieldElement> {
        let f = &rref.field;
        let mut v = row.to_vec();
        for (i, &p) in pivots.iter().enumerate() {
            if v[p].is_zero() {
                continue;
            }
            let factor = v[p];
            for (c, slot) in v.iter_mut().enumerate() {
                let t = f.mul(factor, rref.get(i, c));
                *slot = f.sub(*slot, t);
            }
        }
        v
    }

    pub fn row_in_rowspace(&self, row: &[FieldElement]) -> bool {
        assert_eq!(row.len(), self.cols);
        let (rref, pivots) = self.rref();
        Matrix::reduce_against_rref(&rref, &pivots, row).iter().all(|c| c.is_zero())
    }

    /// Basis of `rowspace(self) ∩ rowspace(other)`, via the left kernel of
    /// the stacked matrix. The computed dimension is checked against
    /// `rank A + rank B - rank [A; B]`.
    pub fn intersect_rowspace(&self, other: &Matrix) -> Result<Matrix> {
        let stacked = self.stack(other)?;
        let f = &self.field;
        // left kernel rows (x | y) satisfy x A + y B = 0, so x A = (-y) B
        // ranges over exactly the intersection
        let left_kernel = stacked.transpose().kernel_basis();
        let mut candidates: Vec<Vec<FieldElement>> = Vec::new();
        for r in 0..left_kernel.rows {
            let coeffs = left_kernel.row(r);
            let mut v = vec![f.zero(); self.cols];
            for (i, &coeff) in coeffs.iter().take(self.rows).enumerate() {
                if coeff.is_zero() {
                    continue;
                }
                for (c, slot) in v.iter_mut().enumerate() {
                    let t = f.mul(coeff, self.get(i, c));
                    *slot = f.add(*slot, t);
                }
            }
            candidates.push(v);
        }
        let raw = if candidates.is_empty() {
            Matrix::zero(f, 0, self.cols)
        } else {
            let n = candidates.len();
            Matrix::new(f, n, self.cols, candidates.into_iter().flatten().collect())
        };
        let (rref, pivots) = raw.rref();
        let dim = pivots.len();
        let mut rows = Vec::new();
        for r in 0..dim {
            rows.extend_from_slice(rref.row(r));
        }
        let basis = Matrix::new(f, dim, self.cols, rows);
        let expected = self.rank() + other.rank() - stacked.rank();
        assert_eq!(basis.rows, expected, "intersection dimension formula must hold");
        Ok(basis)
    }

    /// Row-space equality: every row of each matrix reduces to zero against
    /// the RREF of the other.
    pub fn rowspace_eq(&self, other: &Matrix) -> Result<bool> {
        if self.field != other.field || self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        let (ra, pa) = self.rref();
        let (rb, pb) = other.rref();
        let a_in_b = (0..self.rows)
            .all(|r| Matrix::reduce_against_rref(&rb, &pb, self.row(r)).iter().all(|c| c.is_zero()));
        let b_in_a = (0..other.rows)
            .all(|r| Matrix::reduce_against_rref(&ra, &pa, other.row(r)).iter().all(|c| c.is_zero()));
        Ok(a_in_b && b_in_a)
    }

    /// Rows reduced to a row basis (independent rows of the RREF).
    pub fn row_basis(&self) -> Matrix {
        let (rref, pivots) = self.rref();
        let mut rows = Vec::new();
        for r in 0..pivots.len() {
            rows.extend_from_slice(rref.row(r));
        }
        Matrix::new(&self.field, pivots.len(), self.cols, rows)
    }
}
