//! Coordinate subspaces with canonical RREF bases.
//!
//! Canonicality makes subspace equality structural: two spans are equal
//! exactly when their `Subspace` values compare equal.

use crate::error::{Error, Result};
use crate::field::{FieldDesc, Scalar};
use crate::linalg::Matrix;

#[derive(Clone, PartialEq, Eq)]
pub struct Subspace<K: Scalar> {
    ambient: usize,
    field: FieldDesc,
    /// RREF basis, one vector per row, no zero rows, pivots strictly increasing.
    basis: Matrix<K>,
}

impl<K: Scalar> std::fmt::Debug for Subspace<K> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Subspace(dim {} of {}^{}) basis {:?}",
            self.dim(),
            self.field,
            self.ambient,
            self.basis
        )
    }
}

impl<K: Scalar> Subspace<K> {
    pub fn zero(field: FieldDesc, ambient: usize) -> Subspace<K> {
        Subspace {
            ambient,
            field,
            basis: Matrix::zero(field, 0, ambient),
        }
    }

    pub fn full(field: FieldDesc, ambient: usize) -> Subspace<K> {
        Subspace {
            ambient,
            field,
            basis: Matrix::identity(field, ambient),
        }
    }

    /// Canonicalize a spanning set.
    pub fn from_vectors(field: FieldDesc, ambient: usize, vectors: &[Vec<K>]) -> Subspace<K> {
        if vectors.is_empty() {
            return Subspace::zero(field, ambient);
        }
        let m = Matrix::from_rows(field, ambient, vectors.to_vec());
        Subspace::from_matrix_rows(&m)
    }

    /// Canonicalize the row space of a matrix.
    pub fn from_matrix_rows(m: &Matrix<K>) -> Subspace<K> {
        let red = m.rref();
        let basis = Matrix::from_fn(m.field(), red.rank, m.cols(), |r, c| {
            red.matrix.at(r, c).clone()
        });
        Subspace {
            ambient: m.cols(),
            field: m.field(),
            basis,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn field(&self) -> FieldDesc {
        self.field
    }

    pub fn basis(&self) -> &Matrix<K> {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<K>> {
        (0..self.dim()).map(|r| self.basis.row_vec(r)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    fn check_compatible(&self, other: &Subspace<K>) -> Result<()> {
        self.field.check_same(&other.field)?;
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch(format!(
                "subspaces of ambient dimensions {} and {}",
                self.ambient, other.ambient
            )));
        }
        Ok(())
    }

    /// Reduce `v` against the basis; the remainder is zero iff `v` lies in
    /// the subspace, and otherwise is supported off the pivot columns.
    pub fn reduce(&self, v: &[K]) -> Vec<K> {
        let mut w = v.to_vec();
        let pivots = self.pivot_columns();
        for (r, &c) in pivots.iter().enumerate() {
            if w[c].is_zero() {
                continue;
            }
            let factor = w[c].clone();
            for j in 0..self.ambient {
                let t = w[j].sub(&self.basis.at(r, j).mul(&factor));
                w[j] = t;
            }
        }
        w
    }

    pub fn pivot_columns(&self) -> Vec<usize> {
        let mut pivots = Vec::with_capacity(self.dim());
        for r in 0..self.dim() {
            let c = (0..self.ambient)
                .find(|&c| !self.basis.at(r, c).is_zero())
                .expect("no zero rows in a canonical basis");
            pivots.push(c);
        }
        pivots
    }

    pub fn contains(&self, v: &[K]) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero())
    }

    /// Coordinates of `v` in the canonical basis, if `v` lies in the span.
    /// For an RREF basis these are just the entries at the pivot columns,
    /// verified by reconstruction.
    pub fn coordinates(&self, v: &[K]) -> Option<Vec<K>> {
        let pivots = self.pivot_columns();
        let coords: Vec<K> = pivots.iter().map(|&c| v[c].clone()).collect();
        let mut rebuilt = vec![K::zero(&self.field); self.ambient];
        for (r, coef) in coords.iter().enumerate() {
            for j in 0..self.ambient {
                let t = rebuilt[j].add(&self.basis.at(r, j).mul(coef));
                rebuilt[j] = t;
            }
        }
        if rebuilt.iter().zip(v).all(|(a, b)| a == b) {
            Some(coords)
        } else {
            None
        }
    }

    pub fn leq(&self, other: &Subspace<K>) -> Result<bool> {
        self.check_compatible(other)?;
        Ok((0..self.dim()).all(|r| other.contains(self.basis.row(r))))
    }

    pub fn sum(&self, other: &Subspace<K>) -> Result<Subspace<K>> {
        self.check_compatible(other)?;
        let stacked = self.basis.vstack(&other.basis)?;
        Ok(Subspace::from_matrix_rows(&stacked))
    }

    /// Intersection via the stacked-kernel trick: solutions of
    /// `lambda * A = mu * B` pulled back through `A`.
    pub fn intersect(&self, other: &Subspace<K>) -> Result<Subspace<K>> {
        self.check_compatible(other)?;
        let a = self.dim();
        let b = other.dim();
        if a == 0 || b == 0 {
            return Ok(Subspace::zero(self.field, self.ambient));
        }
        // columns: lambda coefficients then mu coefficients
        let m = Matrix::from_fn(self.field, self.ambient, a + b, |r, c| {
            if c < a {
                self.basis.at(c, r).clone()
            } else {
                other.basis.at(c - a, r).neg()
            }
        });
        let kernel = nullspace_matrix(&m);
        let mut vectors = Vec::new();
        for k in 0..kernel.rows() {
            let lambda = &kernel.row(k)[..a];
            let mut v = vec![K::zero(&self.field); self.ambient];
            for (i, coef) in lambda.iter().enumerate() {
                for j in 0..self.ambient {
                    let t = v[j].add(&self.basis.at(i, j).mul(coef));
                    v[j] = t;
                }
            }
            vectors.push(v);
        }
        Ok(Subspace::from_vectors(self.field, self.ambient, &vectors))
    }
}

/// Kernel basis of `m` as rows (canonical: one row per free column, RREF).
fn nullspace_matrix<K: Scalar>(m: &Matrix<K>) -> Matrix<K> {
    let red = m.rref();
    let n = m.cols();
    let pivots = &red.pivot_columns;
    let is_pivot: Vec<bool> = {
        let mut v = vec![false; n];
        for &c in pivots {
            v[c] = true;
        }
        v
    };
    let free: Vec<usize> = (0..n).filter(|&c| !is_pivot[c]).collect();
    let mut rows = Vec::with_capacity(free.len());
    for &fc in &free {
        let mut v = vec![K::zero(&m.field()); n];
        v[fc] = K::one(&m.field());
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = red.matrix.at(r, fc).neg();
        }
        rows.push(v);
    }
    if rows.is_empty() {
        Matrix::zero(m.field(), 0, n)
    } else {
        // normalize to RREF form for canonicality
        let raw = Matrix::from_rows(m.field(), n, rows);
        let red = raw.rref();
        Matrix::from_fn(m.field(), red.rank, n, |r, c| red.matrix.at(r, c).clone())
    }
}

/// Canonical kernel of a matrix, `{v : m v = 0}`.
pub fn nullspace<K: Scalar>(m: &Matrix<K>) -> Subspace<K> {
    let basis = nullspace_matrix(m);
    Subspace::from_matrix_rows(&basis)
}
