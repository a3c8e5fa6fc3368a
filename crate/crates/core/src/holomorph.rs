//! Semidirect-product constructions: the Lie-holomorph, the classical
//! holomorph of a Lie algebra, the Misra holomorph of a left Leibniz
//! algebra, and the biderivation semidirect product.
//!
//! Basis order of every result: the base algebra first (`~`-vectors), then
//! the canonical RREF basis of the acting space (`bar`-vectors). Published
//! presentations sometimes pick a different basis, so comparisons against
//! them go through isomorphism verification, not raw constant equality.

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::Matrix;
use crate::spaces::{
    self, biderivation_space, derivation_space, lie_derivation_space, space_as_algebra,
};
use crate::subspace::Subspace;

/// A bilinear two-sided action of an algebra `acting` on an algebra `acted`,
/// given per acting basis element: `l[b]` acts from the left, `r[b]` from
/// the right. No compatibility is assumed at construction; identity flags
/// of the product report what actually holds.
pub struct ActionData<K: Scalar> {
    pub acting: Algebra<K>,
    pub acted: Algebra<K>,
    pub left: Vec<Matrix<K>>,
    pub right: Vec<Matrix<K>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HolomorphKind {
    Lie,
    Classical,
    Misra,
    Bider,
}

impl std::fmt::Display for HolomorphKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            HolomorphKind::Lie => "lie",
            HolomorphKind::Classical => "classical",
            HolomorphKind::Misra => "misra",
            HolomorphKind::Bider => "bider",
        };
        write!(f, "{s}")
    }
}

/// A constructed holomorph-style algebra together with its provenance.
pub struct HolomorphResult<K: Scalar> {
    pub algebra: Algebra<K>,
    pub kind: HolomorphKind,
    /// Dimension of the embedded base algebra (first coordinates).
    pub base_dim: usize,
    /// Dimension of the acting space.
    pub acting_dim: usize,
}

impl<K: Scalar> HolomorphResult<K> {
    /// The image of the canonical embedding `i1(x) = (x, 0)`.
    pub fn base_image(&self) -> Subspace<K> {
        let field = self.algebra.field();
        let total = self.algebra.dim();
        let vectors: Vec<Vec<K>> = (0..self.base_dim)
            .map(|i| {
                let mut v = vec![K::zero(&field); total];
                v[i] = K::one(&field);
                v
            })
            .collect();
        Subspace::from_vectors(field, total, &vectors)
    }

    /// `p2 ∘ i2 = id` on the acting summand: structural by the basis-order
    /// convention, checked here for the canonical split extension.
    pub fn projection_section_identity(&self) -> bool {
        // i2(d) = (0, d); p2(x, d) = d. With base-first ordering this is
        // the identity on the last `acting_dim` coordinates.
        self.base_dim + self.acting_dim == self.algebra.dim()
    }
}

/// General semidirect product on `acted ⊕ acting` with the bracket
/// `[(x,b),(y,b')] = ([x,y] + l_b(y) + r_{b'}(x), [b,b'])`.
pub fn semidirect_product<K: Scalar>(action: &ActionData<K>) -> Result<Algebra<K>> {
    let n = action.acted.dim();
    let m = action.acting.dim();
    let field = action.acted.field();
    field.check_same(&action.acting.field())?;
    if action.left.len() != m || action.right.len() != m {
        return Err(Error::DimensionMismatch(
            "one action matrix per acting basis element required".into(),
        ));
    }
    for mat in action.left.iter().chain(&action.right) {
        if mat.rows() != n || mat.cols() != n {
            return Err(Error::DimensionMismatch("action matrices must be n x n".into()));
        }
        field.check_same(&mat.field())?;
    }
    let total = n + m;
    let mut sc = vec![K::zero(&field); total * total * total];
    let mut set = |i: usize, j: usize, v: Vec<K>, off: usize| {
        for (k, c) in v.into_iter().enumerate() {
            sc[(i * total + j) * total + (off + k)] = c;
        }
    };
    // [(e_i, 0), (e_j, 0)] = ([e_i, e_j], 0)
    for i in 0..n {
        for j in 0..n {
            set(i, j, action.acted.bracket_basis(i, j), 0);
        }
    }
    // [(0, f_a), (e_j, 0)] = (l_a(e_j), 0) and [(e_j, 0), (0, f_a)] = (r_a(e_j), 0)
    for a in 0..m {
        for j in 0..n {
            set(n + a, j, action.left[a].column(j), 0);
            set(j, n + a, action.right[a].column(j), 0);
        }
    }
    // [(0, f_a), (0, f_b)] = (0, [f_a, f_b])
    for a in 0..m {
        for b in 0..m {
            set(n + a, n + b, action.acting.bracket_basis(a, b), n);
        }
    }
    Algebra::from_structure_constants(field, total, sc)
}

fn holomorph_action<K: Scalar>(
    acted: &Algebra<K>,
    operators: Vec<Matrix<K>>,
    acting: Algebra<K>,
) -> ActionData<K> {
    let minus_one = K::from_int(&acted.field(), -1);
    let right: Vec<Matrix<K>> = operators.iter().map(|d| d.scale(&minus_one)).collect();
    ActionData {
        acting,
        acted: acted.clone(),
        left: operators,
        right,
    }
}

/// The Lie-holomorph `L ⋊ Der_Lie(L)` with bracket
/// `[(x,d),(y,d')] = ([x,y] + d(y) - d'(x), [d,d'])`.
pub fn lie_holomorph<K: Scalar>(alg: &Algebra<K>) -> Result<HolomorphResult<K>> {
    alg.require_right_leibniz()?;
    let der_lie = lie_derivation_space(alg)?;
    let acting = space_as_algebra(&der_lie)?;
    let action = holomorph_action(alg, der_lie.basis_matrices(), acting);
    let algebra = semidirect_product(&action)?;
    Ok(HolomorphResult {
        algebra,
        kind: HolomorphKind::Lie,
        base_dim: alg.dim(),
        acting_dim: der_lie.dim(),
    })
}

/// The classical holomorph `L ⋊ Der(L)` of a Lie algebra.
pub fn classical_holomorph<K: Scalar>(alg: &Algebra<K>) -> Result<HolomorphResult<K>> {
    if !alg.identity_flags().lie {
        return Err(Error::NotLie);
    }
    let der = derivation_space(alg);
    let acting = space_as_algebra(&der)?;
    let action = holomorph_action(alg, der.basis_matrices(), acting);
    let algebra = semidirect_product(&action)?;
    Ok(HolomorphResult {
        algebra,
        kind: HolomorphKind::Classical,
        base_dim: alg.dim(),
        acting_dim: der.dim(),
    })
}

/// The Misra holomorph of a *left* Leibniz algebra: the product on
/// `L × Der(L)` with `[(x,d),(y,d')] = ([x,y] + d(y), [Ad_x, d'] + [d,d'])`.
/// The base algebra does not embed as an ideal, and no Leibniz identity is
/// guaranteed for the result.
pub fn misra_holomorph<K: Scalar>(alg: &Algebra<K>) -> Result<HolomorphResult<K>> {
    alg.require_left_leibniz()?;
    let field = alg.field();
    let n = alg.dim();
    let der = derivation_space(alg);
    let m = der.dim();
    let mats = der.basis_matrices();
    let acting = space_as_algebra(&der)?;
    let total = n + m;
    let mut sc = vec![K::zero(&field); total * total * total];
    let mut set = |i: usize, j: usize, v: Vec<K>, off: usize| {
        for (k, c) in v.into_iter().enumerate() {
            sc[(i * total + j) * total + (off + k)] = c;
        }
    };
    // coordinates of an operator in the Der basis; for left Leibniz input
    // Ad_x is a derivation, so these always resolve
    let coords = |op: &Matrix<K>| -> Result<Vec<K>> {
        der.basis
            .coordinates(&spaces::vectorize(op))
            .ok_or(Error::NotClosed)
    };
    let e = |i: usize| {
        let mut v = vec![K::zero(&field); n];
        v[i] = K::one(&field);
        v
    };
    for i in 0..n {
        // [(e_i, 0), (e_j, 0)] = ([e_i, e_j], [Ad_{e_i}, 0]) = ([e_i, e_j], 0)
        for j in 0..n {
            set(i, j, alg.bracket_basis(i, j), 0);
        }
        // [(e_i, 0), (0, d_b)] = (0, [Ad_{e_i}, d_b])
        let ad_left = alg.ad_left(&e(i))?;
        for b in 0..m {
            let br = spaces::operator_bracket(&ad_left, &mats[b])?;
            set(i, n + b, coords(&br)?, n);
        }
    }
    for a in 0..m {
        // [(0, d_a), (e_j, 0)] = (d_a(e_j), 0)
        for j in 0..n {
            set(n + a, j, mats[a].column(j), 0);
        }
        // [(0, d_a), (0, d_b)] = (0, [d_a, d_b])
        for b in 0..m {
            set(n + a, n + b, acting.bracket_basis(a, b), n);
        }
    }
    Ok(HolomorphResult {
        algebra: Algebra::from_structure_constants(field, total, sc)?,
        kind: HolomorphKind::Misra,
        base_dim: n,
        acting_dim: m,
    })
}

/// The semidirect product `L ⋊ Bider(L)`: the acting morphism sends a
/// biderivation (d, D) to the action with `l = D`, `r = -d`. A Leibniz
/// algebra only under extra hypotheses (reported by the flags, not
/// guaranteed).
pub fn bider_semidirect<K: Scalar>(alg: &Algebra<K>) -> Result<HolomorphResult<K>> {
    alg.require_right_leibniz()?;
    let bider = biderivation_space(alg);
    let acting = space_as_algebra(&bider)?;
    let minus_one = K::from_int(&alg.field(), -1);
    let mut left = Vec::new();
    let mut right = Vec::new();
    for (d, dd) in bider.basis_pairs() {
        left.push(dd);
        right.push(d.scale(&minus_one));
    }
    let action = ActionData {
        acting,
        acted: alg.clone(),
        left,
        right,
    };
    let algebra = semidirect_product(&action)?;
    Ok(HolomorphResult {
        algebra,
        kind: HolomorphKind::Bider,
        base_dim: alg.dim(),
        acting_dim: bider.dim(),
    })
}
