//! Finite-dimensional algebras given by structure constants, the Leibniz
//! identities, and the structural invariants built from them: kernel,
//! centers, series, ideals, quotients.
//!
//! Construction never requires any identity to hold — some constructions
//! (the Misra holomorph in particular) legitimately produce non-Leibniz
//! values, so identities are reported by [`Algebra::identity_flags`] and
//! operations that need one refuse with a typed error.

use crate::error::{Error, Result};
use crate::field::{FieldDesc, Scalar};
use crate::linalg::Matrix;
use crate::subspace::{nullspace, Subspace};

/// An algebra over `field` with bracket `[e_i, e_j] = sum_k c[i][j][k] e_k`.
/// Indices are 0-based internally; all file formats and reports are 1-based.
#[derive(Clone, PartialEq, Eq)]
pub struct Algebra<K: Scalar> {
    field: FieldDesc,
    dim: usize,
    /// Row-major tensor: `sc[(i * dim + j) * dim + k]`.
    sc: Vec<K>,
    labels: Option<Vec<String>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct IdentityFlags {
    pub right_leibniz: bool,
    pub left_leibniz: bool,
    pub symmetric: bool,
    pub antisymmetric: bool,
    pub lie: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesKind {
    LowerCentral,
    Derived,
}

/// Dimensions of a lower-central or derived series until stabilization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesReport {
    pub kind: SeriesKind,
    /// `dims[t] = dim L^(t)` starting at the full algebra; the list ends at
    /// the first repeated dimension (or at zero).
    pub dims: Vec<usize>,
    /// Terminal term is zero (nilpotent for the lower central series,
    /// solvable for the derived series).
    pub terminates_at_zero: bool,
    /// Least n with L^(n) = 0, when the series reaches zero.
    pub class: Option<usize>,
}

impl<K: Scalar> std::fmt::Debug for Algebra<K> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Algebra(dim {} over {})", self.dim, self.field)?;
        for i in 0..self.dim {
            for j in 0..self.dim {
                let v = self.bracket_basis(i, j);
                if v.iter().any(|x| !x.is_zero()) {
                    let terms: Vec<String> = v
                        .iter()
                        .enumerate()
                        .filter(|(_, x)| !x.is_zero())
                        .map(|(k, x)| format!("{} e{}", x, k + 1))
                        .collect();
                    write!(f, " [e{},e{}]={}", i + 1, j + 1, terms.join("+"))?;
                }
            }
        }
        Ok(())
    }
}

impl<K: Scalar> Algebra<K> {
    /// Build from a sparse list of brackets `((i, j), [(k, coeff)])`, 0-based.
    pub fn from_brackets(
        field: FieldDesc,
        dim: usize,
        brackets: &[((usize, usize), Vec<(usize, K)>)],
    ) -> Result<Algebra<K>> {
        let mut sc = vec![K::zero(&field); dim * dim * dim];
        for ((i, j), terms) in brackets {
            if *i >= dim || *j >= dim {
                return Err(Error::DimensionMismatch(format!(
                    "bracket index ({}, {}) out of range for dimension {}",
                    i + 1,
                    j + 1,
                    dim
                )));
            }
            for (k, c) in terms {
                if *k >= dim {
                    return Err(Error::DimensionMismatch(format!(
                        "result index {} out of range for dimension {}",
                        k + 1,
                        dim
                    )));
                }
                field.check_same(&c.field())?;
                sc[(i * dim + j) * dim + k] = c.clone();
            }
        }
        Ok(Algebra { field, dim, sc, labels: None })
    }

    pub fn from_structure_constants(field: FieldDesc, dim: usize, sc: Vec<K>) -> Result<Algebra<K>> {
        if sc.len() != dim * dim * dim {
            return Err(Error::DimensionMismatch(format!(
                "expected {} structure constants, got {}",
                dim * dim * dim,
                sc.len()
            )));
        }
        for c in &sc {
            field.check_same(&c.field())?;
        }
        Ok(Algebra { field, dim, sc, labels: None })
    }

    pub fn abelian(field: FieldDesc, dim: usize) -> Algebra<K> {
        Algebra {
            field,
            dim,
            sc: vec![K::zero(&field); dim * dim * dim],
            labels: None,
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Algebra<K> {
        assert_eq!(labels.len(), self.dim);
        self.labels = Some(labels);
        self
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> FieldDesc {
        self.field
    }

    pub fn sc(&self, i: usize, j: usize, k: usize) -> &K {
        &self.sc[(i * self.dim + j) * self.dim + k]
    }

    /// `[e_i, e_j]` as a coordinate vector.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<K> {
        let base = (i * self.dim + j) * self.dim;
        self.sc[base..base + self.dim].to_vec()
    }

    /// Bilinear extension of the structure constants.
    pub fn bracket(&self, x: &[K], y: &[K]) -> Result<Vec<K>> {
        if x.len() != self.dim || y.len() != self.dim {
            return Err(Error::DimensionMismatch(format!(
                "bracket of vectors of lengths {} and {} in dimension {}",
                x.len(),
                y.len(),
                self.dim
            )));
        }
        for v in x.iter().chain(y) {
            self.field.check_same(&v.field())?;
        }
        let mut out = vec![K::zero(&self.field); self.dim];
        for i in 0..self.dim {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if y[j].is_zero() {
                    continue;
                }
                let coef = x[i].mul(&y[j]);
                for k in 0..self.dim {
                    let c = self.sc(i, j, k);
                    if c.is_zero() {
                        continue;
                    }
                    out[k] = out[k].add(&coef.mul(c));
                }
            }
        }
        Ok(out)
    }

    fn basis_vector(&self, i: usize) -> Vec<K> {
        let mut v = vec![K::zero(&self.field); self.dim];
        v[i] = K::one(&self.field);
        v
    }

    /// Exhaustive identity check over all basis triples.
    pub fn identity_flags(&self) -> IdentityFlags {
        let n = self.dim;
        let mut right = true;
        let mut left = true;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let ei = self.basis_vector(i);
                    let ej = self.basis_vector(j);
                    let ek = self.basis_vector(k);
                    let ij = self.bracket_basis(i, j);
                    let ik = self.bracket_basis(i, k);
                    let jk = self.bracket_basis(j, k);
                    if right {
                        // [[i,j],k] = [[i,k],j] + [i,[j,k]]
                        let lhs = self.bracket(&ij, &ek).unwrap();
                        let r1 = self.bracket(&ik, &ej).unwrap();
                        let r2 = self.bracket(&ei, &jk).unwrap();
                        if (0..n).any(|m| lhs[m] != r1[m].add(&r2[m])) {
                            right = false;
                        }
                    }
                    if left {
                        // [i,[j,k]] = [[i,j],k] + [j,[i,k]]
                        let lhs = self.bracket(&ei, &jk).unwrap();
                        let r1 = self.bracket(&ij, &ek).unwrap();
                        let r2 = self.bracket(&ej, &ik).unwrap();
                        if (0..n).any(|m| lhs[m] != r1[m].add(&r2[m])) {
                            left = false;
                        }
                    }
                    if !right && !left {
                        break;
                    }
                }
            }
        }
        let mut antisymmetric = true;
        'outer: for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if *self.sc(i, j, k) != self.sc(j, i, k).neg() {
                        antisymmetric = false;
                        break 'outer;
                    }
                }
            }
        }
        IdentityFlags {
            right_leibniz: right,
            left_leibniz: left,
            symmetric: right && left,
            antisymmetric,
            // over char != 2, antisymmetry plus the right identity gives Jacobi
            lie: right && antisymmetric,
        }
    }

    pub fn require_right_leibniz(&self) -> Result<()> {
        if self.identity_flags().right_leibniz {
            Ok(())
        } else {
            Err(Error::IdentityViolation("right"))
        }
    }

    pub fn require_left_leibniz(&self) -> Result<()> {
        if self.identity_flags().left_leibniz {
            Ok(())
        } else {
            Err(Error::IdentityViolation("left"))
        }
    }

    /// Opposite algebra, `[x,y]^op = [y,x]`.
    pub fn opposite(&self) -> Algebra<K> {
        let n = self.dim;
        let mut sc = vec![K::zero(&self.field); n * n * n];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    sc[(i * n + j) * n + k] = self.sc(j, i, k).clone();
                }
            }
        }
        Algebra {
            field: self.field,
            dim: n,
            sc,
            labels: self.labels.clone(),
        }
    }

    /// Matrix of right multiplication `ad_x = [-, x]` acting on columns.
    pub fn ad(&self, x: &[K]) -> Result<Matrix<K>> {
        let n = self.dim;
        let mut m = Matrix::zero(self.field, n, n);
        for i in 0..n {
            let col = self.bracket(&self.basis_vector(i), x)?;
            for k in 0..n {
                *m.at_mut(k, i) = col[k].clone();
            }
        }
        Ok(m)
    }

    /// Matrix of left multiplication `Ad_x = [x, -]` acting on columns.
    pub fn ad_left(&self, x: &[K]) -> Result<Matrix<K>> {
        let n = self.dim;
        let mut m = Matrix::zero(self.field, n, n);
        for i in 0..n {
            let col = self.bracket(x, &self.basis_vector(i))?;
            for k in 0..n {
                *m.at_mut(k, i) = col[k].clone();
            }
        }
        Ok(m)
    }

    /// Left center `{x : [x, L] = 0}`.
    pub fn left_center(&self) -> Subspace<K> {
        // rows indexed by (j, k): sum_i x_i c[i][j][k] = 0
        let n = self.dim;
        let m = Matrix::from_fn(self.field, n * n, n, |row, i| {
            let (j, k) = (row / n, row % n);
            self.sc(i, j, k).clone()
        });
        nullspace(&m)
    }

    /// Right center `{x : [L, x] = 0}`.
    pub fn right_center(&self) -> Subspace<K> {
        let n = self.dim;
        let m = Matrix::from_fn(self.field, n * n, n, |row, i| {
            let (j, k) = (row / n, row % n);
            self.sc(j, i, k).clone()
        });
        nullspace(&m)
    }

    /// Full center, left ∩ right.
    pub fn center(&self) -> Subspace<K> {
        self.left_center()
            .intersect(&self.right_center())
            .expect("same ambient")
    }

    /// Lie-center `{x : [x,y] + [y,x] = 0 for all y}`.
    pub fn lie_center(&self) -> Subspace<K> {
        let n = self.dim;
        let m = Matrix::from_fn(self.field, n * n, n, |row, i| {
            let (j, k) = (row / n, row % n);
            self.sc(i, j, k).add(self.sc(j, i, k))
        });
        nullspace(&m)
    }

    /// All four centers at once.
    pub fn centers(&self) -> Centers<K> {
        Centers {
            left: self.left_center(),
            right: self.right_center(),
            center: self.center(),
            lie_center: self.lie_center(),
        }
    }

    /// `span{ [a, b] : a in basis(A), b in basis(B) }`.
    pub fn product_subspace(&self, a: &Subspace<K>, b: &Subspace<K>) -> Result<Subspace<K>> {
        self.field.check_same(&a.field())?;
        self.field.check_same(&b.field())?;
        if a.ambient_dim() != self.dim || b.ambient_dim() != self.dim {
            return Err(Error::DimensionMismatch("product_subspace ambient".into()));
        }
        let mut vectors = Vec::new();
        for x in a.basis_vectors() {
            for y in b.basis_vectors() {
                vectors.push(self.bracket(&x, &y)?);
            }
        }
        Ok(Subspace::from_vectors(self.field, self.dim, &vectors))
    }

    /// Least `S' ⊇ S` with `[S', L] + [L, S'] ⊆ S'` (iterated to a fixpoint).
    pub fn ideal_closure(&self, s: &Subspace<K>) -> Result<Subspace<K>> {
        let full = Subspace::full(self.field, self.dim);
        let mut cur = s.clone();
        loop {
            let grown = cur
                .sum(&self.product_subspace(&cur, &full)?)?
                .sum(&self.product_subspace(&full, &cur)?)?;
            if grown.dim() == cur.dim() {
                return Ok(grown);
            }
            cur = grown;
        }
    }

    pub fn is_ideal(&self, s: &Subspace<K>) -> Result<bool> {
        let full = Subspace::full(self.field, self.dim);
        let sides = self
            .product_subspace(s, &full)?
            .sum(&self.product_subspace(&full, s)?)?;
        sides.leq(s)
    }

    /// Leibniz kernel: the ideal closure of the span of all squares. Over
    /// char != 2 that span is generated by `[e_i, e_i]` and the polarized
    /// `[e_i, e_j] + [e_j, e_i]`.
    pub fn leibniz_kernel(&self) -> Result<Subspace<K>> {
        self.require_right_leibniz()?;
        let n = self.dim;
        let mut gens = Vec::new();
        for i in 0..n {
            gens.push(self.bracket_basis(i, i));
            for j in (i + 1)..n {
                let ij = self.bracket_basis(i, j);
                let ji = self.bracket_basis(j, i);
                gens.push((0..n).map(|k| ij[k].add(&ji[k])).collect());
            }
        }
        let span = Subspace::from_vectors(self.field, n, &gens);
        self.ideal_closure(&span)
    }

    /// Lower-central or derived series dimensions until stabilization.
    pub fn series(&self, kind: SeriesKind) -> Result<SeriesReport> {
        self.require_right_leibniz()?;
        let full = Subspace::full(self.field, self.dim);
        let mut dims = vec![self.dim];
        let mut cur = full.clone();
        loop {
            let next = match kind {
                SeriesKind::LowerCentral => self.product_subspace(&cur, &full)?,
                SeriesKind::Derived => self.product_subspace(&cur, &cur)?,
            };
            let d = next.dim();
            dims.push(d);
            if d == 0 || d == cur.dim() {
                break;
            }
            cur = next;
        }
        let terminates = *dims.last().unwrap() == 0;
        let class = if terminates {
            Some(dims.iter().position(|&d| d == 0).unwrap())
        } else {
            None
        };
        Ok(SeriesReport {
            kind,
            dims,
            terminates_at_zero: terminates,
            class,
        })
    }

    pub fn is_nilpotent(&self) -> Result<bool> {
        Ok(self.series(SeriesKind::LowerCentral)?.terminates_at_zero)
    }

    pub fn is_solvable(&self) -> Result<bool> {
        Ok(self.series(SeriesKind::Derived)?.terminates_at_zero)
    }

    /// Derived subalgebra `[L, L]`.
    pub fn derived_subalgebra(&self) -> Subspace<K> {
        let full = Subspace::full(self.field, self.dim);
        self.product_subspace(&full, &full).expect("same field")
    }

    /// Quotient by a (verified) ideal, in the basis given by the standard
    /// coordinates off the ideal's pivot columns, in increasing order.
    pub fn quotient(&self, ideal: &Subspace<K>) -> Result<Algebra<K>> {
        if !self.is_ideal(ideal)? {
            return Err(Error::Inconsistency("quotient by a non-ideal".into()));
        }
        let pivots = ideal.pivot_columns();
        let complement: Vec<usize> = (0..self.dim).filter(|c| !pivots.contains(c)).collect();
        let m = complement.len();
        let mut sc = vec![K::zero(&self.field); m * m * m];
        for (a, &ia) in complement.iter().enumerate() {
            for (b, &ib) in complement.iter().enumerate() {
                let reduced = ideal.reduce(&self.bracket_basis(ia, ib));
                for (c, &ic) in complement.iter().enumerate() {
                    sc[(a * m + b) * m + c] = reduced[ic].clone();
                }
                // everything else must have been absorbed by the ideal
                for &pc in &pivots {
                    debug_assert!(reduced[pc].is_zero());
                }
            }
        }
        Algebra::from_structure_constants(self.field, m, sc)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Centers<K: Scalar> {
    pub left: Subspace<K>,
    pub right: Subspace<K>,
    pub center: Subspace<K>,
    pub lie_center: Subspace<K>,
}
