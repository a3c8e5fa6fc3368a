//! Dense exact matrices and Gaussian elimination.
//!
//! Everything downstream leans on [`Matrix::rref`] producing the *unique*
//! reduced row echelon form: canonical bases for every computed space fall
//! out of that uniqueness.

use crate::error::{Error, Result};
use crate::field::{FieldDesc, Scalar};

/// Row-major dense matrix over one field.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<K: Scalar> {
    rows: usize,
    cols: usize,
    field: FieldDesc,
    data: Vec<K>,
}

/// Outcome of row reduction.
pub struct Rref<K: Scalar> {
    pub matrix: Matrix<K>,
    pub rank: usize,
    pub pivot_columns: Vec<usize>,
}

impl<K: Scalar> std::fmt::Debug for Matrix<K> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.at(r, c).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl<K: Scalar> Matrix<K> {
    pub fn zero(field: FieldDesc, rows: usize, cols: usize) -> Matrix<K> {
        Matrix {
            rows,
            cols,
            field,
            data: vec![K::zero(&field); rows * cols],
        }
    }

    pub fn identity(field: FieldDesc, n: usize) -> Matrix<K> {
        let mut m = Matrix::zero(field, n, n);
        for i in 0..n {
            *m.at_mut(i, i) = K::one(&field);
        }
        m
    }

    pub fn from_rows(field: FieldDesc, cols: usize, rows: Vec<Vec<K>>) -> Matrix<K> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend(r);
        }
        Matrix { rows: n, cols, field, data }
    }

    pub fn from_fn(field: FieldDesc, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> K) -> Matrix<K> {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, field, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> FieldDesc {
        self.field
    }

    pub fn at(&self, r: usize, c: usize) -> &K {
        &self.data[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut K {
        &mut self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[K] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vec(&self, r: usize) -> Vec<K> {
        self.row(r).to_vec()
    }

    pub fn column(&self, c: usize) -> Vec<K> {
        (0..self.rows).map(|r| self.at(r, c).clone()).collect()
    }

    pub fn transpose(&self) -> Matrix<K> {
        Matrix::from_fn(self.field, self.cols, self.rows, |r, c| self.at(c, r).clone())
    }

    /// Stack `other` below `self`.
    pub fn vstack(&self, other: &Matrix<K>) -> Result<Matrix<K>> {
        self.field.check_same(&other.field)?;
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "vstack: {} vs {} columns",
                self.cols, other.cols
            )));
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            field: self.field,
            data,
        })
    }

    /// Place `other` to the right of `self`.
    pub fn hstack(&self, other: &Matrix<K>) -> Result<Matrix<K>> {
        self.field.check_same(&other.field)?;
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "hstack: {} vs {} rows",
                self.rows, other.rows
            )));
        }
        Ok(Matrix::from_fn(self.field, self.rows, self.cols + other.cols, |r, c| {
            if c < self.cols {
                self.at(r, c).clone()
            } else {
                other.at(r, c - self.cols).clone()
            }
        }))
    }

    pub fn mul(&self, other: &Matrix<K>) -> Result<Matrix<K>> {
        self.field.check_same(&other.field)?;
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "product of {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let zero = K::zero(&self.field);
        Ok(Matrix::from_fn(self.field, self.rows, other.cols, |r, c| {
            let mut acc = zero.clone();
            for k in 0..self.cols {
                let x = self.at(r, k);
                if x.is_zero() {
                    continue;
                }
                acc = acc.add(&x.mul(other.at(k, c)));
            }
            acc
        }))
    }

    pub fn apply(&self, v: &[K]) -> Result<Vec<K>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "applying {}x{} to vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        let zero = K::zero(&self.field);
        Ok((0..self.rows)
            .map(|r| {
                let mut acc = zero.clone();
                for c in 0..self.cols {
                    if v[c].is_zero() {
                        continue;
                    }
                    acc = acc.add(&self.at(r, c).mul(&v[c]));
                }
                acc
            })
            .collect())
    }

    pub fn scale(&self, k: &K) -> Matrix<K> {
        Matrix::from_fn(self.field, self.rows, self.cols, |r, c| self.at(r, c).mul(k))
    }

    pub fn add(&self, other: &Matrix<K>) -> Result<Matrix<K>> {
        self.field.check_same(&other.field)?;
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch("matrix addition".into()));
        }
        Ok(Matrix::from_fn(self.field, self.rows, self.cols, |r, c| {
            self.at(r, c).add(other.at(r, c))
        }))
    }

    pub fn sub(&self, other: &Matrix<K>) -> Result<Matrix<K>> {
        self.add(&other.scale(&K::from_int(&self.field, -1)))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    /// All entries, row-major. Used for vectorizing operator matrices.
    pub fn entries(&self) -> &[K] {
        &self.data
    }

    /// Unique reduced row echelon form, its rank and pivot columns.
    pub fn rref(&self) -> Rref<K> {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0usize;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| !m.at(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, pr);
            let inv = m.at(r, c).inv().expect("nonzero pivot");
            m.scale_row(r, &inv);
            for i in 0..m.rows {
                if i != r && !m.at(i, c).is_zero() {
                    let factor = m.at(i, c).clone();
                    m.sub_scaled_row(i, r, &factor);
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref {
            matrix: m,
            rank: pivots.len(),
            pivot_columns: pivots,
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn scale_row(&mut self, r: usize, k: &K) {
        for c in 0..self.cols {
            let v = self.at(r, c).mul(k);
            *self.at_mut(r, c) = v;
        }
    }

    /// row[i] -= k * row[j]
    fn sub_scaled_row(&mut self, i: usize, j: usize, k: &K) {
        for c in 0..self.cols {
            let v = self.at(i, c).sub(&self.at(j, c).mul(k));
            *self.at_mut(i, c) = v;
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Particular solution of `self * x = rhs` with all free variables zero,
    /// or `None` when inconsistent.
    pub fn solve(&self, rhs: &[K]) -> Result<Option<Vec<K>>> {
        if rhs.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "solve: {} rows vs rhs length {}",
                self.rows,
                rhs.len()
            )));
        }
        for x in rhs {
            self.field.check_same(&x.field())?;
        }
        let rhs_col = Matrix::from_fn(self.field, self.rows, 1, |r, _| rhs[r].clone());
        let aug = self.hstack(&rhs_col)?;
        let red = aug.rref();
        // inconsistent iff a pivot lands in the rhs column
        if red.pivot_columns.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![K::zero(&self.field); self.cols];
        for (r, &c) in red.pivot_columns.iter().enumerate() {
            x[c] = red.matrix.at(r, self.cols).clone();
        }
        Ok(Some(x))
    }

    /// Inverse of a square matrix.
    pub fn inverse(&self) -> Result<Matrix<K>> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch("inverse of a non-square matrix".into()));
        }
        let aug = self.hstack(&Matrix::identity(self.field, self.rows))?;
        let red = aug.rref();
        if red.rank < self.rows || red.pivot_columns.iter().take(self.rows).ne((0..self.rows).collect::<Vec<_>>().iter()) {
            return Err(Error::SingularMatrix);
        }
        Ok(Matrix::from_fn(self.field, self.rows, self.rows, |r, c| {
            red.matrix.at(r, self.rows + c).clone()
        }))
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }
}
