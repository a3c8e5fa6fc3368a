//! Homomorphism verification, invariant fingerprints, base change, and
//! exhaustive isomorphism search over prime fields.
//!
//! Linear maps are matrices whose columns are the images of the source
//! basis vectors in target coordinates.

use std::time::Instant;

use crate::algebra::{Algebra, IdentityFlags, SeriesKind};
use crate::error::{Error, Result};
use crate::field::{FieldDesc, Fp, Scalar};
use crate::linalg::Matrix;
use crate::spaces::{
    antiderivation_space, biderivation_space, derivation_space, inner_derivations,
    lie_derivation_space,
};
use crate::subspace::Subspace;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HomCheck {
    pub is_hom: bool,
    pub is_iso: bool,
}

/// Check whether `f` (columns = images of source basis vectors) is an
/// algebra homomorphism `source -> target`, and an isomorphism.
pub fn verify_homomorphism<K: Scalar>(
    source: &Algebra<K>,
    target: &Algebra<K>,
    f: &Matrix<K>,
) -> Result<HomCheck> {
    source.field().check_same(&target.field())?;
    source.field().check_same(&f.field())?;
    if f.cols() != source.dim() || f.rows() != target.dim() {
        return Err(Error::DimensionMismatch(format!(
            "map is {}x{}, expected {}x{}",
            f.rows(),
            f.cols(),
            target.dim(),
            source.dim()
        )));
    }
    let n = source.dim();
    let mut is_hom = true;
    'outer: for i in 0..n {
        for j in 0..n {
            let lhs = f.apply(&source.bracket_basis(i, j))?;
            let rhs = target.bracket(&f.column(i), &f.column(j))?;
            if lhs != rhs {
                is_hom = false;
                break 'outer;
            }
        }
    }
    let is_iso = is_hom && f.rows() == f.cols() && f.is_invertible();
    Ok(HomCheck { is_hom, is_iso })
}

/// Transport the structure constants of `alg` along an invertible map `p`,
/// so that `p : alg -> result` is an isomorphism by construction.
pub fn change_of_basis<K: Scalar>(alg: &Algebra<K>, p: &Matrix<K>) -> Result<Algebra<K>> {
    alg.field().check_same(&p.field())?;
    if p.rows() != alg.dim() || p.cols() != alg.dim() {
        return Err(Error::DimensionMismatch("base change must be square of the algebra dimension".into()));
    }
    let q = p.inverse()?;
    let n = alg.dim();
    let mut sc = vec![K::zero(&alg.field()); n * n * n];
    for a in 0..n {
        for b in 0..n {
            let v = alg.bracket(&q.column(a), &q.column(b))?;
            let w = p.apply(&v)?;
            for k in 0..n {
                sc[(a * n + b) * n + k] = w[k].clone();
            }
        }
    }
    let out = Algebra::from_structure_constants(alg.field(), n, sc)?;
    debug_assert!(verify_homomorphism(alg, &out, p)?.is_iso);
    Ok(out)
}

/// Isomorphism-invariant dimensions, assembled from the structural
/// invariants and the derivation-type spaces.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct Fingerprint {
    pub dim: usize,
    pub flags: IdentityFlags,
    pub leibniz_kernel_dim: usize,
    pub left_center_dim: usize,
    pub right_center_dim: usize,
    pub center_dim: usize,
    pub lie_center_dim: usize,
    pub derived_series_dims: Vec<usize>,
    pub lower_central_dims: Vec<usize>,
    pub nilpotency_class: Option<usize>,
    pub solvability_class: Option<usize>,
    pub der_dim: usize,
    pub ader_dim: usize,
    pub bider_dim: usize,
    pub der_lie_dim: usize,
    pub inn_dim: usize,
}

pub fn fingerprint<K: Scalar>(alg: &Algebra<K>) -> Result<Fingerprint> {
    alg.require_right_leibniz()?;
    let centers = alg.centers();
    let lower = alg.series(SeriesKind::LowerCentral)?;
    let derived = alg.series(SeriesKind::Derived)?;
    Ok(Fingerprint {
        dim: alg.dim(),
        flags: alg.identity_flags(),
        leibniz_kernel_dim: alg.leibniz_kernel()?.dim(),
        left_center_dim: centers.left.dim(),
        right_center_dim: centers.right.dim(),
        center_dim: centers.center.dim(),
        lie_center_dim: centers.lie_center.dim(),
        nilpotency_class: lower.class,
        solvability_class: derived.class,
        derived_series_dims: derived.dims,
        lower_central_dims: lower.dims,
        der_dim: derivation_space(alg).dim(),
        ader_dim: antiderivation_space(alg).dim(),
        bider_dim: biderivation_space(alg).dim(),
        der_lie_dim: lie_derivation_space(alg)?.dim(),
        inn_dim: inner_derivations(alg)?.dim(),
    })
}

/// Outcome of the exhaustive finite-field search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    /// Verified witness, columns = images of source basis vectors.
    Found(Matrix<Fp>),
    /// The whole (pruned) space was exhausted: no isomorphism exists.
    NotIsomorphic,
    /// The deadline expired before exhaustion.
    TimedOut,
}

/// Exhaustive backtracking search for an isomorphism between two right
/// Leibniz algebras over the same prime field. Returns a verified witness
/// or a sound non-existence answer. Candidates are enumerated in
/// lexicographic order of coordinate tuples, so the witness is
/// deterministic.
pub fn find_isomorphism(l: &Algebra<Fp>, m: &Algebra<Fp>) -> Result<Option<Matrix<Fp>>> {
    match find_isomorphism_with_deadline(l, m, None)? {
        SearchOutcome::Found(f) => Ok(Some(f)),
        SearchOutcome::NotIsomorphic => Ok(None),
        SearchOutcome::TimedOut => unreachable!("no deadline was set"),
    }
}

/// As [`find_isomorphism`], with an optional wall-clock deadline.
pub fn find_isomorphism_with_deadline(
    l: &Algebra<Fp>,
    m: &Algebra<Fp>,
    deadline: Option<Instant>,
) -> Result<SearchOutcome> {
    let field = l.field();
    field.check_same(&m.field())?;
    let p = match field {
        FieldDesc::PrimeField { p } => p,
        FieldDesc::Rationals => return Err(Error::InfiniteFieldSearch),
    };
    if l.dim() != m.dim() {
        return Ok(SearchOutcome::NotIsomorphic);
    }
    // fingerprint precheck: isomorphic algebras share every entry
    if fingerprint(l)? != fingerprint(m)? {
        return Ok(SearchOutcome::NotIsomorphic);
    }
    let n = l.dim();
    if n == 0 {
        return Ok(SearchOutcome::Found(Matrix::identity(field, 0)));
    }

    // Derived-series filtrations. An isomorphism maps the t-th derived
    // subalgebra of `l` onto that of `m`, so after adapting the basis of
    // `l` to its filtration, candidates for deep basis vectors range over
    // the matching (smaller) subspace of `m`.
    let l_filtration = derived_filtration(l)?;
    let m_filtration = derived_filtration(m)?;

    // adapted basis: deepest terms first
    let mut adapted: Vec<Vec<Fp>> = Vec::new();
    let mut levels: Vec<usize> = Vec::new(); // filtration index per adapted vector
    let mut span: Subspace<Fp> = Subspace::zero(field, n);
    for (t, sub) in l_filtration.iter().enumerate().rev() {
        for v in sub.basis_vectors() {
            if !span.contains(&v) {
                span = span.sum(&Subspace::from_vectors(field, n, &[v.clone()]))?;
                adapted.push(v);
                levels.push(t);
            }
        }
    }
    debug_assert_eq!(adapted.len(), n);
    let b = Matrix::from_fn(field, n, n, |r, c| adapted[c][r].clone());
    let b_inv = b.inverse()?;
    let l_adapted = change_of_basis(l, &b_inv)?;

    // bracket constraints indexed by the step at which they become checkable
    let mut checks_at: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for a in 0..n {
        for c in 0..n {
            let supp_max = l_adapted
                .bracket_basis(a, c)
                .iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(k, _)| k)
                .max();
            let step = a.max(c).max(supp_max.unwrap_or(0));
            checks_at[step].push((a, c));
        }
    }

    let mut images: Vec<Vec<Fp>> = Vec::with_capacity(n);
    let outcome = search(
        &l_adapted,
        m,
        &m_filtration,
        &levels,
        &checks_at,
        p,
        deadline,
        &mut images,
    )?;
    match outcome {
        SearchOutcome::Found(f_adapted) => {
            let f = f_adapted.mul(&b_inv)?;
            // the witness is always re-verified on the original pair
            let check = verify_homomorphism(l, m, &f)?;
            if !check.is_iso {
                return Err(Error::Inconsistency("search produced an unverified witness".into()));
            }
            Ok(SearchOutcome::Found(f))
        }
        other => Ok(other),
    }
}

fn derived_filtration(alg: &Algebra<Fp>) -> Result<Vec<Subspace<Fp>>> {
    alg.require_right_leibniz()?;
    let mut terms = vec![Subspace::full(alg.field(), alg.dim())];
    loop {
        let last = terms.last().unwrap();
        let next = alg.product_subspace(last, last)?;
        if next.dim() == last.dim() || next.is_zero() {
            if next.dim() != last.dim() {
                terms.push(next);
            }
            return Ok(terms);
        }
        terms.push(next);
    }
}

#[allow(clippy::too_many_arguments)]
fn search(
    l: &Algebra<Fp>,
    m: &Algebra<Fp>,
    m_filtration: &[Subspace<Fp>],
    levels: &[usize],
    checks_at: &[Vec<(usize, usize)>],
    p: u32,
    deadline: Option<Instant>,
    images: &mut Vec<Vec<Fp>>,
) -> Result<SearchOutcome> {
    let n = l.dim();
    let step = images.len();
    if step == n {
        return Ok(SearchOutcome::Found(Matrix::from_fn(
            l.field(),
            n,
            n,
            |r, c| images[c][r],
        )));
    }
    if let Some(d) = deadline {
        if Instant::now() >= d {
            return Ok(SearchOutcome::TimedOut);
        }
    }
    let level = levels[step];
    let candidates = m_filtration
        .get(level)
        .unwrap_or_else(|| m_filtration.last().unwrap());
    let basis = candidates.basis_vectors();
    let k = basis.len();
    let mut coeffs = vec![0u32; k];
    loop {
        // candidate vector from the coefficient tuple
        let mut v = vec![Fp::new(p, 0); n];
        for (r, &c) in coeffs.iter().enumerate() {
            if c != 0 {
                let c = Fp::new(p, c);
                for j in 0..n {
                    v[j] = v[j].add(&basis[r][j].mul(&c));
                }
            }
        }
        if accept_candidate(l, m, images, &v, checks_at)? {
            images.push(v);
            match search(l, m, m_filtration, levels, checks_at, p, deadline, images)? {
                SearchOutcome::NotIsomorphic => {
                    images.pop();
                }
                found_or_timeout => {
                    images.pop();
                    return Ok(found_or_timeout);
                }
            }
        }
        // next tuple in lexicographic order (first coordinate most significant)
        let mut pos = k;
        while pos > 0 {
            pos -= 1;
            coeffs[pos] += 1;
            if coeffs[pos] < p {
                break;
            }
            coeffs[pos] = 0;
            if pos == 0 {
                return Ok(SearchOutcome::NotIsomorphic);
            }
        }
        if k == 0 {
            return Ok(SearchOutcome::NotIsomorphic);
        }
    }
}

fn accept_candidate(
    l: &Algebra<Fp>,
    m: &Algebra<Fp>,
    images: &[Vec<Fp>],
    v: &[Fp],
    checks_at: &[Vec<(usize, usize)>],
) -> Result<bool> {
    let field = l.field();
    let n = l.dim();
    // linear independence with the images chosen so far
    let mut rows: Vec<Vec<Fp>> = images.to_vec();
    rows.push(v.to_vec());
    let rank = Matrix::from_rows(field, n, rows).rank();
    if rank != images.len() + 1 {
        return Ok(false);
    }
    // bracket constraints that became checkable at this step
    let step = images.len();
    let image_at = |i: usize| -> &[Fp] {
        if i == step {
            v
        } else {
            &images[i]
        }
    };
    for &(a, c) in &checks_at[step] {
        let target_bracket = m.bracket(image_at(a), image_at(c))?;
        let mut mapped = vec![Fp::new(match field { FieldDesc::PrimeField { p } => p, _ => unreachable!() }, 0); n];
        for (k, coef) in l.bracket_basis(a, c).iter().enumerate() {
            if coef.is_zero() {
                continue;
            }
            let img = image_at(k);
            for j in 0..n {
                mapped[j] = mapped[j].add(&img[j].mul(coef));
            }
        }
        if mapped != target_bracket {
            return Ok(false);
        }
    }
    Ok(true)
}
