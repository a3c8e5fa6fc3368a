//! Exact computer algebra for finite-dimensional right Leibniz algebras.
//!
//! The crate computes derivation-type spaces (derivations, anti-derivations,
//! biderivations, Lie-derivations, inner (bi)derivations), centers, series
//! and the Leibniz kernel, builds holomorph-style semidirect products, and
//! verifies or searches for isomorphisms — all over exact scalars: Q with
//! arbitrary-precision rationals, or F_p for an odd prime p. A built-in
//! catalog ships the low-dimensional algebras of the published
//! classification together with expected values that `reproduce` re-derives
//! and checks.
//!
//! Everything mathematical is generic over the scalar type via [`Scalar`];
//! `Q*`/`Fp*` aliases below fix the two concrete instantiations.

pub mod algebra;
pub mod catalog;
pub mod dynamic;
pub mod error;
pub mod expect;
pub mod field;
pub mod fileio;
pub mod holomorph;
pub mod iso;
pub mod linalg;
pub mod report;
pub mod spaces;
pub mod subspace;

pub use algebra::{Algebra, Centers, IdentityFlags, SeriesKind, SeriesReport};
pub use error::{Error, Result};
pub use field::{FieldDesc, Fp, Rat, Scalar};
pub use linalg::Matrix;
pub use subspace::{nullspace, Subspace};

/// Concrete instantiations over Q.
pub type QAlgebra = Algebra<Rat>;
pub type QMatrix = Matrix<Rat>;
pub type QSubspace = Subspace<Rat>;

/// Concrete instantiations over a prime field.
pub type FpAlgebra = Algebra<Fp>;
pub type FpMatrix = Matrix<Fp>;
pub type FpSubspace = Subspace<Fp>;
