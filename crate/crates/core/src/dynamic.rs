//! Runtime dispatch between the two scalar instantiations.
//!
//! Files and CLI arguments carry the field as data, so the entry points
//! parse into [`AnyAlgebra`] and fan out to the generic code via
//! [`crate::with_algebra!`].

use crate::algebra::Algebra;
use crate::error::Result;
use crate::field::{FieldDesc, Fp, Rat};

#[derive(Clone, PartialEq, Eq)]
pub enum AnyAlgebra {
    Q(Algebra<Rat>),
    P(Algebra<Fp>),
}

impl std::fmt::Debug for AnyAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            AnyAlgebra::Q(a) => a.fmt(f),
            AnyAlgebra::P(a) => a.fmt(f),
        }
    }
}

impl From<Algebra<Rat>> for AnyAlgebra {
    fn from(a: Algebra<Rat>) -> AnyAlgebra {
        AnyAlgebra::Q(a)
    }
}

impl From<Algebra<Fp>> for AnyAlgebra {
    fn from(a: Algebra<Fp>) -> AnyAlgebra {
        AnyAlgebra::P(a)
    }
}

impl AnyAlgebra {
    pub fn dim(&self) -> usize {
        match self {
            AnyAlgebra::Q(a) => a.dim(),
            AnyAlgebra::P(a) => a.dim(),
        }
    }

    pub fn field(&self) -> FieldDesc {
        match self {
            AnyAlgebra::Q(a) => a.field(),
            AnyAlgebra::P(a) => a.field(),
        }
    }
}

/// Run one generic expression against the algebra inside an [`AnyAlgebra`].
#[macro_export]
macro_rules! with_algebra {
    ($any:expr, |$alg:ident| $body:expr) => {
        match $any {
            $crate::dynamic::AnyAlgebra::Q($alg) => $body,
            $crate::dynamic::AnyAlgebra::P($alg) => $body,
        }
    };
}

/// Instantiate a catalog entry over a runtime field.
pub fn catalog_get(
    name: &str,
    params: &crate::catalog::Params,
    field: &FieldDesc,
) -> Result<AnyAlgebra> {
    Ok(match field {
        FieldDesc::Rationals => AnyAlgebra::Q(crate::catalog::get::<Rat>(name, params, field)?),
        FieldDesc::PrimeField { .. } => AnyAlgebra::P(crate::catalog::get::<Fp>(name, params, field)?),
    })
}
