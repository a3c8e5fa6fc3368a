//! The built-in expectations suite behind `reproduce`: every quantitative
//! claim of the published classification tables for the catalog algebras,
//! re-derived from scratch and compared.
//!
//! Expected values are recorded exactly as published. Where recomputation
//! disagrees with a published value the record reports a mismatch with a
//! note carrying the recomputed value and the reason; the one documented
//! presentation-sign discrepancy (the 6-dimensional holomorph of `L_3`)
//! is reported as `flagged` after its isomorphism witness verifies.
//!
//! Everything runs over Q. The suite is deterministic: records appear in
//! a fixed order with canonical rendering.

use crate::algebra::{Algebra, SeriesKind};
use crate::catalog::{self, Params};
use crate::error::Result;
use crate::field::{FieldDesc, Rat, Scalar};
use crate::holomorph::{classical_holomorph, lie_holomorph, misra_holomorph};
use crate::iso::verify_homomorphism;
use crate::linalg::Matrix;
use crate::report::{Record, ReproReport, Status};
use crate::spaces::{
    biderivation_space, derivation_space, inner_derivations, lie_derivation_space,
    operator_bracket, vectorize,
};
use crate::subspace::Subspace;

/// Matrix literal: rows of coefficient literals.
type MatLit = &'static [&'static [&'static str]];
/// Vector literal.
type VecLit = &'static [&'static str];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AlgSpec {
    pub name: &'static str,
    pub alpha: Option<&'static str>,
    /// Take the Lie-holomorph of the catalog entry.
    pub hol: bool,
}

impl AlgSpec {
    const fn cat(name: &'static str) -> AlgSpec {
        AlgSpec { name, alpha: None, hol: false }
    }
    const fn cat_a(name: &'static str, alpha: &'static str) -> AlgSpec {
        AlgSpec { name, alpha: Some(alpha), hol: false }
    }
    const fn hol(name: &'static str) -> AlgSpec {
        AlgSpec { name, alpha: None, hol: true }
    }
    const fn hol_a(name: &'static str, alpha: &'static str) -> AlgSpec {
        AlgSpec { name, alpha: Some(alpha), hol: true }
    }

    pub fn subject(&self) -> String {
        let base = match self.alpha {
            Some(a) => format!("{}({})", self.name, a),
            None => self.name.to_string(),
        };
        if self.hol {
            format!("hol_Lie({base})")
        } else {
            base
        }
    }

    pub fn resolve(&self) -> Result<Algebra<Rat>> {
        let params = match self.alpha {
            Some(a) => catalog::params_from(&[("alpha", a)]),
            None => Params::new(),
        };
        let base = catalog::get::<Rat>(self.name, &params, &FieldDesc::Q)?;
        if self.hol {
            Ok(lie_holomorph(&base)?.algebra)
        } else {
            Ok(base)
        }
    }
}

#[derive(Debug, Clone)]
pub enum Kind {
    /// dim Bider(L) equals the published parameter count.
    BiderDim { alg: AlgSpec, expected: usize },
    /// Each published parameter matrix pair, at unit parameters, lies in
    /// the computed biderivation space.
    BiderCerts { alg: AlgSpec, certs: &'static [(MatLit, MatLit)] },
    /// The Lie-center equals the published span exactly.
    LieCenterSpan { alg: AlgSpec, rows: &'static [VecLit] },
    /// dim Der_Lie(L) equals the published value.
    DerLieDim { alg: AlgSpec, expected: usize },
    /// Published Lie-derivation matrices at unit parameters belong to the
    /// computed space.
    DerLieCerts { alg: AlgSpec, mats: &'static [MatLit] },
    /// The Lie-holomorph is a right Leibniz algebra, contains the base as
    /// an ideal, has the predicted dimension, and its quotient by the base
    /// reproduces the Lie-derivation structure constants.
    HolSoundness { alg: AlgSpec },
    /// dim hol_Lie(L) equals the published value.
    HolDim { alg: AlgSpec, expected: usize },
    /// Trivial acting space: hol_Lie(L) has the very structure constants
    /// of L.
    HolEqualsBase { alg: AlgSpec },
    /// Published bracket certificates `[x, y] = value` in the constructed
    /// basis (base vectors first, acting basis after). When every failing
    /// certificate is explained by the given isomorphism witness between
    /// the constructed and published presentations, the record is flagged
    /// rather than mismatched.
    HolBracketCerts {
        alg: AlgSpec,
        certs: &'static [(VecLit, VecLit, VecLit)],
        flag_witness: Option<(MatLit, &'static [(VecLit, VecLit, VecLit)])>,
        note: Option<&'static str>,
    },
    /// Lower-central series dimensions and nilpotency.
    LowerCentral { alg: AlgSpec, expected_dims: &'static [usize], nilpotent: bool },
    /// A published linear map is an isomorphism.
    IsoMap {
        source: AlgSpec,
        target: AlgSpec,
        map: MatLit,
        note: Option<&'static str>,
    },
    /// Two holomorphs have the published pair of derived-subalgebra
    /// dimensions (a non-isomorphism certificate when they differ).
    DerivedDimPair { a: AlgSpec, b: AlgSpec, expected: (usize, usize) },
    /// `a` is distinguished inside `others` by its Lie-center dimension.
    LieCenterDimUnique { a: AlgSpec, others: &'static [AlgSpec], expected: usize },
    /// `a` is distinguished inside `others` by its derived-subalgebra
    /// dimension.
    DerivedDimUnique { a: AlgSpec, others: &'static [AlgSpec], expected: usize },
    /// One algebra is nilpotent, the other is not.
    NilpotencyDiffers { a: AlgSpec, b: AlgSpec },
    /// The catalog entries whose Lie-holomorph has the given dimension.
    HolDimGroup { dim: usize, members: &'static [AlgSpec] },
    /// Strict chain dim Inn < dim Der_Lie < dim Der with published values.
    InnerDerLieDerChain { alg: AlgSpec, expected: (usize, usize, usize) },
    /// An operator bracket certificate inside Der_Lie.
    OperatorBracketCert { alg: AlgSpec, a: MatLit, b: MatLit, expected: MatLit },
    /// The derived subalgebra of a holomorph equals the published span.
    HolDerivedSpan { alg: AlgSpec, rows: &'static [VecLit] },
    /// The Misra holomorph of the 2-dimensional non-abelian Lie algebra
    /// fails antisymmetry and does not contain the base as an ideal.
    MisraContrast,
    /// The classical holomorph of the same algebra is Lie and contains the
    /// base as an ideal.
    ClassicalContrast,
}

#[derive(Debug, Clone)]
pub struct Expectation {
    pub locus: &'static str,
    pub quantity: &'static str,
    pub kind: Kind,
}

fn parse_vec(lits: VecLit) -> Vec<Rat> {
    lits.iter()
        .map(|s| Rat::parse(&FieldDesc::Q, s).expect("expectation literal"))
        .collect()
}

fn parse_mat(lit: MatLit) -> Matrix<Rat> {
    let rows: Vec<Vec<Rat>> = lit.iter().map(|r| parse_vec(r)).collect();
    Matrix::from_rows(FieldDesc::Q, rows[0].len(), rows)
}

fn span_from(rows: &[VecLit], ambient: usize) -> Subspace<Rat> {
    let vectors: Vec<Vec<Rat>> = rows.iter().map(|r| parse_vec(r)).collect();
    Subspace::from_vectors(FieldDesc::Q, ambient, &vectors)
}

fn span_string(s: &Subspace<Rat>) -> String {
    if s.is_zero() {
        return "0".to_string();
    }
    let rows: Vec<String> = s
        .basis_vectors()
        .iter()
        .map(|v| {
            let coords: Vec<String> = v.iter().map(|x| x.literal()).collect();
            format!("({})", coords.join(","))
        })
        .collect();
    format!("span{{{}}}", rows.join(", "))
}

fn vec_string(v: &[Rat]) -> String {
    let coords: Vec<String> = v.iter().map(|x| x.literal()).collect();
    format!("({})", coords.join(","))
}

struct Outcome {
    expected: String,
    computed: String,
    status: Status,
    note: Option<String>,
}

fn ok(expected: impl Into<String>, computed: impl Into<String>) -> Outcome {
    let expected = expected.into();
    let computed = computed.into();
    let status = if expected == computed { Status::Match } else { Status::Mismatch };
    Outcome { expected, computed, status, note: None }
}

impl Expectation {
    pub fn subject(&self) -> String {
        match &self.kind {
            Kind::BiderDim { alg, .. }
            | Kind::BiderCerts { alg, .. }
            | Kind::LieCenterSpan { alg, .. }
            | Kind::DerLieDim { alg, .. }
            | Kind::DerLieCerts { alg, .. }
            | Kind::LowerCentral { alg, .. }
            | Kind::LieCenterDimUnique { a: alg, .. }
            | Kind::DerivedDimUnique { a: alg, .. }
            | Kind::InnerDerLieDerChain { alg, .. }
            | Kind::OperatorBracketCert { alg, .. } => alg.subject(),
            // these take the base algebra but describe its Lie-holomorph
            Kind::HolSoundness { alg }
            | Kind::HolDim { alg, .. }
            | Kind::HolEqualsBase { alg }
            | Kind::HolBracketCerts { alg, .. }
            | Kind::HolDerivedSpan { alg, .. } => {
                AlgSpec { hol: true, ..*alg }.subject()
            }
            Kind::IsoMap { source, target, .. } => {
                format!("{} -> {}", source.subject(), target.subject())
            }
            Kind::DerivedDimPair { a, b, .. } | Kind::NilpotencyDiffers { a, b } => {
                format!("{} vs {}", a.subject(), b.subject())
            }
            Kind::HolDimGroup { dim, .. } => format!("dim {dim} row"),
            Kind::MisraContrast => "misra(lie2)".to_string(),
            Kind::ClassicalContrast => "classical(lie2)".to_string(),
        }
    }

    pub fn evaluate(&self) -> Record {
        let outcome = self.run().unwrap_or_else(|e| Outcome {
            expected: "evaluation".into(),
            computed: format!("error: {e}"),
            status: Status::Mismatch,
            note: None,
        });
        Record {
            locus: self.locus.to_string(),
            subject: self.subject(),
            quantity: self.quantity.to_string(),
            expected: outcome.expected,
            computed: outcome.computed,
            status: outcome.status,
            note: outcome.note,
        }
    }

    fn run(&self) -> Result<Outcome> {
        match &self.kind {
            Kind::BiderDim { alg, expected } => {
                let a = alg.resolve()?;
                let dim = biderivation_space(&a).dim();
                let mut out = ok(expected.to_string(), dim.to_string());
                if out.status == Status::Mismatch {
                    out.note = Some(bider_dim_note(alg.name, alg.alpha).to_string());
                }
                Ok(out)
            }
            Kind::BiderCerts { alg, certs } => {
                let a = alg.resolve()?;
                let space = biderivation_space(&a);
                let mut failing = Vec::new();
                for (i, (d, dd)) in certs.iter().enumerate() {
                    if !space.contains(&parse_mat(d), &parse_mat(dd)) {
                        failing.push(format!("#{}", i + 1));
                    }
                }
                let expected = format!("all {} unit matrices member", certs.len());
                let computed = if failing.is_empty() {
                    expected.clone()
                } else {
                    format!("not members: {}", failing.join(", "))
                };
                let mut out = ok(expected, computed);
                if out.status == Status::Mismatch {
                    out.note = Some(bider_dim_note(alg.name, alg.alpha).to_string());
                }
                Ok(out)
            }
            Kind::LieCenterSpan { alg, rows } => {
                let a = alg.resolve()?;
                let computed = a.lie_center();
                let expected = span_from(rows, a.dim());
                let mut out = ok(span_string(&expected), span_string(&computed));
                if out.status == Status::Mismatch && alg.name == "L_6" {
                    out.note = Some(
                        "the published span is the alpha = 1/4 Lie-center; for alpha != 1/4 \
                         the defining 2x2 system has determinant 4*alpha - 1, leaving span{(1,0,0)}"
                            .to_string(),
                    );
                }
                Ok(out)
            }
            Kind::DerLieDim { alg, expected } => {
                let a = alg.resolve()?;
                let dim = lie_derivation_space(&a)?.dim();
                Ok(ok(expected.to_string(), dim.to_string()))
            }
            Kind::DerLieCerts { alg, mats } => {
                let a = alg.resolve()?;
                let space = lie_derivation_space(&a)?;
                let failing: Vec<String> = mats
                    .iter()
                    .enumerate()
                    .filter(|(_, m)| !space.contains(&parse_mat(m)))
                    .map(|(i, _)| format!("#{}", i + 1))
                    .collect();
                let expected = format!("all {} unit matrices member", mats.len());
                let computed = if failing.is_empty() {
                    expected.clone()
                } else {
                    format!("not members: {}", failing.join(", "))
                };
                Ok(ok(expected, computed))
            }
            Kind::HolSoundness { alg } => {
                let base = alg.resolve()?;
                let hol = lie_holomorph(&base)?;
                let right = hol.algebra.identity_flags().right_leibniz;
                let image = hol.base_image();
                let ideal = hol.algebra.is_ideal(&image)?;
                let quotient = hol.algebra.quotient(&image)?;
                let acting = crate::spaces::space_as_algebra(&lie_derivation_space(&base)?)?;
                let quotient_ok = quotient == acting;
                let dim_ok = hol.algebra.dim() == base.dim() + hol.acting_dim;
                let expected = "right Leibniz, base ideal, quotient = Der_Lie, dim additive";
                let computed = if right && ideal && quotient_ok && dim_ok {
                    expected.to_string()
                } else {
                    format!(
                        "right={right} ideal={ideal} quotient={quotient_ok} dim={dim_ok}"
                    )
                };
                Ok(ok(expected, computed))
            }
            Kind::HolDim { alg, expected } => {
                let base = alg.resolve()?;
                let hol = lie_holomorph(&base)?;
                Ok(ok(expected.to_string(), hol.algebra.dim().to_string()))
            }
            Kind::HolEqualsBase { alg } => {
                let base = alg.resolve()?;
                let hol = lie_holomorph(&base)?;
                let expected = "hol_Lie(L) = L";
                let computed = if hol.algebra == base {
                    expected.to_string()
                } else {
                    format!("dim {} != dim {}", hol.algebra.dim(), base.dim())
                };
                Ok(ok(expected, computed))
            }
            Kind::HolBracketCerts { alg, certs, flag_witness, note } => {
                let base = alg.resolve()?;
                let hol = lie_holomorph(&base)?.algebra;
                let mut failing = Vec::new();
                for (i, (x, y, v)) in certs.iter().enumerate() {
                    let out = hol.bracket(&parse_vec(x), &parse_vec(y))?;
                    if out != parse_vec(v) {
                        failing.push((i, out));
                    }
                }
                let expected = format!("all {} published brackets reproduced", certs.len());
                if failing.is_empty() {
                    return Ok(ok(expected.clone(), expected));
                }
                // a documented sign item downgrades to flagged when the two
                // presentations are explicitly isomorphic
                if let Some((witness, published)) = flag_witness {
                    let published_alg = algebra_from_certs(hol.dim(), published)?;
                    let w = parse_mat(witness);
                    if verify_homomorphism(&hol, &published_alg, &w)?.is_iso {
                        let fails: Vec<String> = failing
                            .iter()
                            .map(|(i, out)| format!("#{} computed {}", i + 1, vec_string(out)))
                            .collect();
                        return Ok(Outcome {
                            expected,
                            computed: fails.join("; "),
                            status: Status::Flagged,
                            note: Some(
                                "presentation differs in sign only; the explicit witness \
                                 verifies the two presentations isomorphic"
                                    .to_string(),
                            ),
                        });
                    }
                }
                let fails: Vec<String> = failing
                    .iter()
                    .map(|(i, out)| format!("#{} computed {}", i + 1, vec_string(out)))
                    .collect();
                Ok(Outcome {
                    expected,
                    computed: fails.join("; "),
                    status: Status::Mismatch,
                    note: note.map(|s| s.to_string()),
                })
            }
            Kind::LowerCentral { alg, expected_dims, nilpotent } => {
                let a = alg.resolve()?;
                let series = a.series(SeriesKind::LowerCentral)?;
                let expected = format!("dims {:?}, nilpotent = {}", expected_dims, nilpotent);
                let computed = format!(
                    "dims {:?}, nilpotent = {}",
                    series.dims, series.terminates_at_zero
                );
                Ok(ok(expected, computed))
            }
            Kind::IsoMap { source, target, map, note } => {
                let s = source.resolve()?;
                let t = target.resolve()?;
                let f = parse_mat(map);
                let check = verify_homomorphism(&s, &t, &f)?;
                let expected = "isomorphism";
                let computed = if check.is_iso {
                    expected.to_string()
                } else if check.is_hom {
                    "homomorphism but not bijective".to_string()
                } else {
                    "not a homomorphism".to_string()
                };
                let mut out = ok(expected, computed);
                if let Some(n) = note {
                    out.note = Some(n.to_string());
                }
                Ok(out)
            }
            Kind::DerivedDimPair { a, b, expected } => {
                let da = a.resolve()?.derived_subalgebra().dim();
                let db = b.resolve()?.derived_subalgebra().dim();
                let mut out = ok(
                    format!("{} vs {}", expected.0, expected.1),
                    format!("{da} vs {db}"),
                );
                if out.status == Status::Mismatch {
                    out.note = Some(
                        "both derived subalgebras are 3-dimensional; non-isomorphy still \
                         holds via nilpotency (see the companion record)"
                            .to_string(),
                    );
                }
                Ok(out)
            }
            Kind::LieCenterDimUnique { a, others, expected } => {
                let da = a.resolve()?.lie_center().dim();
                let other_dims: Vec<usize> = others
                    .iter()
                    .map(|o| Ok(o.resolve()?.lie_center().dim()))
                    .collect::<Result<_>>()?;
                let unique = other_dims.iter().all(|d| d != expected);
                let expected_s = format!("dim {} and unique among the others", expected);
                let computed = if da == *expected && unique {
                    expected_s.clone()
                } else {
                    format!("dim {da}, others {other_dims:?}")
                };
                let mut out = ok(expected_s, computed);
                if out.status == Status::Mismatch {
                    out.note = Some(
                        "every 5-dimensional Lie-holomorph in the suite has a 3-dimensional \
                         Lie-center; this published distinguisher does not hold"
                            .to_string(),
                    );
                }
                Ok(out)
            }
            Kind::DerivedDimUnique { a, others, expected } => {
                let da = a.resolve()?.derived_subalgebra().dim();
                let other_dims: Vec<usize> = others
                    .iter()
                    .map(|o| Ok(o.resolve()?.derived_subalgebra().dim()))
                    .collect::<Result<_>>()?;
                let unique = other_dims.iter().all(|d| d != expected);
                let expected_s = format!("dim {} and unique among the others", expected);
                let computed = if da == *expected && unique {
                    expected_s.clone()
                } else {
                    format!("dim {da}, others {other_dims:?}")
                };
                Ok(ok(expected_s, computed))
            }
            Kind::NilpotencyDiffers { a, b } => {
                let na = a.resolve()?.is_nilpotent()?;
                let nb = b.resolve()?.is_nilpotent()?;
                let expected = "nilpotency differs";
                let computed = if na != nb {
                    expected.to_string()
                } else {
                    format!("both nilpotent = {na}")
                };
                Ok(ok(expected, computed))
            }
            Kind::HolDimGroup { dim, members } => {
                let mut computed: Vec<String> = Vec::new();
                for spec in suite() {
                    let base = spec.resolve()?;
                    if lie_holomorph(&base)?.algebra.dim() == *dim {
                        computed.push(spec.subject());
                    }
                }
                let expected: Vec<String> = members.iter().map(|m| m.subject()).collect();
                Ok(ok(expected.join(", "), computed.join(", ")))
            }
            Kind::InnerDerLieDerChain { alg, expected } => {
                let a = alg.resolve()?;
                let inn = inner_derivations(&a)?;
                let der_lie = lie_derivation_space(&a)?;
                let der = derivation_space(&a);
                let chain = inn.basis.leq(&der_lie.basis)? && der_lie.basis.leq(&der.basis)?;
                let dims = (inn.dim(), der_lie.dim(), der.dim());
                let strict = dims.0 < dims.1 && dims.1 < dims.2;
                let expected_s = format!(
                    "Inn = {} < Der_Lie = {} < Der = {} (strict chain)",
                    expected.0, expected.1, expected.2
                );
                let computed = if chain && strict && dims == *expected {
                    expected_s.clone()
                } else {
                    format!("dims {dims:?}, chain = {chain}")
                };
                Ok(ok(expected_s, computed))
            }
            Kind::OperatorBracketCert { alg, a, b, expected } => {
                let l = alg.resolve()?;
                let space = lie_derivation_space(&l)?;
                let ma = parse_mat(a);
                let mb = parse_mat(b);
                let me = parse_mat(expected);
                let bracket = operator_bracket(&ma, &mb)?;
                let members =
                    space.contains(&ma) && space.contains(&mb) && space.contains(&me);
                let expected_s = "bracket reproduced inside Der_Lie";
                let computed = if bracket == me && members {
                    expected_s.to_string()
                } else {
                    format!(
                        "bracket {:?}, members = {members}",
                        vec_string(&vectorize(&bracket))
                    )
                };
                Ok(ok(expected_s, computed))
            }
            Kind::HolDerivedSpan { alg, rows } => {
                let base = alg.resolve()?;
                let hol = lie_holomorph(&base)?.algebra;
                let computed = hol.derived_subalgebra();
                let expected = span_from(rows, hol.dim());
                Ok(ok(span_string(&expected), span_string(&computed)))
            }
            Kind::MisraContrast => {
                let lie2 = catalog::get::<Rat>("lie2", &Params::new(), &FieldDesc::Q)?;
                let hol = misra_holomorph(&lie2)?;
                let flags = hol.algebra.identity_flags();
                let ideal = hol.algebra.is_ideal(&hol.base_image())?;
                let expected = "not antisymmetric, base not an ideal";
                let computed = if !flags.antisymmetric && !ideal {
                    expected.to_string()
                } else {
                    format!("antisymmetric={} ideal={}", flags.antisymmetric, ideal)
                };
                Ok(ok(expected, computed))
            }
            Kind::ClassicalContrast => {
                let lie2 = catalog::get::<Rat>("lie2", &Params::new(), &FieldDesc::Q)?;
                let hol = classical_holomorph(&lie2)?;
                let flags = hol.algebra.identity_flags();
                let ideal = hol.algebra.is_ideal(&hol.base_image())?;
                let expected = "Lie, base is an ideal";
                let computed = if flags.lie && ideal {
                    expected.to_string()
                } else {
                    format!("lie={} ideal={}", flags.lie, ideal)
                };
                Ok(ok(expected, computed))
            }
        }
    }
}

fn algebra_from_certs(
    dim: usize,
    certs: &[(VecLit, VecLit, VecLit)],
) -> Result<Algebra<Rat>> {
    // the published presentations list brackets of basis vectors only
    let mut brackets = Vec::new();
    for (x, y, v) in certs {
        let xv = parse_vec(x);
        let yv = parse_vec(y);
        let i = xv.iter().position(|c| !c.is_zero()).expect("basis vector");
        let j = yv.iter().position(|c| !c.is_zero()).expect("basis vector");
        debug_assert!(xv[i].is_one() && yv[j].is_one());
        let terms: Vec<(usize, Rat)> = parse_vec(v)
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .collect();
        brackets.push(((i, j), terms));
    }
    Algebra::from_brackets(FieldDesc::Q, dim, &brackets)
}

fn bider_dim_note(name: &str, alpha: Option<&str>) -> &'static str {
    match (name, alpha) {
        ("L_2", Some("2")) => {
            "recomputed dimension is 4: an E12-type anti-derivation exists only at \
             alpha = -1 (the identity forces (alpha+1)*D12 = 0); the published rows for \
             generic alpha and alpha = -1 are exactly swapped"
        }
        ("L_2", Some("-1")) => {
            "recomputed dimension is 5: at alpha = -1 the extra E12-type anti-derivation \
             exists; the published rows for generic alpha and alpha = -1 are exactly swapped"
        }
        ("L_5", _) => {
            "recomputed dimension is 5: the published rotation generator has d(e3) = \
             -alpha*c*e2 but D(e3) = +alpha*c*e2, violating the compatibility \
             [x, d(y)] = [x, D(y)]; compatibility forces the rotation out"
        }
        ("L_7", _) => {
            "recomputed dimension is 7: the published row ties the first rows of d and D, \
             which excludes the inner biderivation (-ad_e2, Ad_e2) = (0, E13); the \
             compatibility cannot see e1-components because e1 is central"
        }
        ("L_11", _) => {
            "recomputed dimension is 6: E12 and E21 are derivations of L_11 and pair with \
             D = 0, but the published row restricts the derivation component to diagonal \
             matrices"
        }
        ("d1", _) => {
            "the published anti-derivation component of the b-direction fails the \
             anti-derivation identity (its first column reads (a+b)/2, (b-a)/2; \
             recomputation forces (a-b)/2, -(a+b)/2); the dimension itself is correct"
        }
        _ => "recomputed value differs from the published table",
    }
}

/// The seventeen suite instances: the thirteen table families at the
/// suite's parameter choices, plus the 2-dimensional algebras.
pub fn suite() -> Vec<AlgSpec> {
    vec![
        AlgSpec::cat("L_A"),
        AlgSpec::cat("L_B"),
        AlgSpec::cat("L_1"),
        AlgSpec::cat_a("L_2", "2"),
        AlgSpec::cat("L_3"),
        AlgSpec::cat("L_4"),
        AlgSpec::cat_a("L_5", "2"),
        AlgSpec::cat_a("L_6", "2"),
        AlgSpec::cat_a("L_6", "1/4"),
        AlgSpec::cat("L_7"),
        AlgSpec::cat("L_8"),
        AlgSpec::cat_a("L_9", "2"),
        AlgSpec::cat_a("L_10", "2"),
        AlgSpec::cat("L_11"),
        AlgSpec::cat("L_12"),
        AlgSpec::cat("L_13"),
        AlgSpec::cat("d1"),
    ]
}

// ---- literal data ----------------------------------------------------

const Z2: VecLit = &["0", "0"];
const E1_2: VecLit = &["1", "0"];
const E1_3: VecLit = &["1", "0", "0"];
const E2_3: VecLit = &["0", "1", "0"];

macro_rules! mat {
    ($($row:expr),+ $(,)?) => {{
        const ROWS: &[VecLit] = &[$($row),+];
        ROWS
    }};
}

// elementary and named matrices used by the certificates, 2x2
const M2_ZERO: MatLit = mat!(Z2, Z2);
const M2_E12: MatLit = mat!(&["0", "1"], Z2);
const M2_A: MatLit = mat!(&["2", "0"], &["0", "1"]); // d-part of the L_A scaling pair
const M2_A2: MatLit = mat!(&["0", "0"], &["0", "1"]);
const M2_LB_A: MatLit = mat!(&["1", "1"], Z2);

// 3x3 helpers
const Z3: VecLit = &["0", "0", "0"];
const M3_ZERO: MatLit = mat!(Z3, Z3, Z3);
const M3_E11: MatLit = mat!(&["1", "0", "0"], Z3, Z3);
const M3_E12: MatLit = mat!(&["0", "1", "0"], Z3, Z3);
const M3_E13: MatLit = mat!(&["0", "0", "1"], Z3, Z3);
const M3_E22: MatLit = mat!(Z3, &["0", "1", "0"], Z3);
const M3_E23: MatLit = mat!(Z3, &["0", "0", "1"], Z3);
const M3_E33: MatLit = mat!(Z3, Z3, &["0", "0", "1"]);
const M3_DIAG110: MatLit = mat!(&["1", "0", "0"], &["0", "1", "0"], Z3);
const M3_DIAG211: MatLit = mat!(&["2", "0", "0"], &["0", "1", "0"], &["0", "0", "1"]);
const M3_DIAG011: MatLit = mat!(Z3, &["0", "1", "0"], &["0", "0", "1"]);

static BIDER_CERTS_LA: &[(MatLit, MatLit)] =
    &[(M2_A, M2_A2), (M2_E12, M2_ZERO), (M2_ZERO, M2_E12)];
static BIDER_CERTS_LB: &[(MatLit, MatLit)] = &[(M2_LB_A, M2_ZERO), (M2_ZERO, M2_E12)];
static BIDER_CERTS_L1: &[(MatLit, MatLit)] = &[
    (
        mat!(&["2", "0", "0"], &["0", "1", "0"], Z3),
        mat!(Z3, &["0", "1", "0"], Z3),
    ),
    (
        mat!(&["0", "1", "0"], &["0", "0", "1"], Z3),
        mat!(&["0", "-1", "0"], &["0", "0", "1"], Z3),
    ),
    (M3_ZERO, M3_E13),
];
static BIDER_CERTS_L2: &[(MatLit, MatLit)] = &[
    (M3_E11, M3_ZERO),
    (M3_E22, M3_E22),
    (M3_E23, M3_E23),
    (M3_ZERO, M3_E12),
    (M3_ZERO, M3_E13),
];
static BIDER_CERTS_L2M1: &[(MatLit, MatLit)] = &[
    (M3_E11, M3_ZERO),
    (M3_E22, M3_E22),
    (M3_E23, M3_E23),
    (M3_ZERO, M3_E13),
];
static BIDER_CERTS_L3: &[(MatLit, MatLit)] = &[
    (M3_E22, M3_E22),
    (M3_E13, M3_ZERO),
    (M3_E23, M3_E23),
    (M3_ZERO, M3_E13),
];
static BIDER_CERTS_L4: &[(MatLit, MatLit)] = &[
    (M3_DIAG211, M3_DIAG011),
    (M3_E12, M3_ZERO),
    (M3_E13, M3_ZERO),
    (M3_ZERO, M3_E12),
    (M3_ZERO, M3_E13),
];
static BIDER_CERTS_L5: &[(MatLit, MatLit)] = &[
    (M3_DIAG211, M3_DIAG011),
    (M3_E12, M3_ZERO),
    (
        mat!(Z3, &["0", "0", "-2"], &["0", "1", "0"]),
        mat!(Z3, &["0", "0", "2"], &["0", "1", "0"]),
    ),
    (M3_E13, M3_ZERO),
    (M3_ZERO, M3_E12),
    (M3_ZERO, M3_E13),
];
// gamma = (4*alpha - 1) / (2*alpha): 7/4 at alpha = 2
static BIDER_CERTS_L6: &[(MatLit, MatLit)] = &[
    (
        mat!(&["7/4", "0", "0"], &["0", "1", "1/2"], &["0", "-1/4", "3/4"]),
        mat!(Z3, &["0", "1", "1/2"], &["0", "-1/4", "3/4"]),
    ),
    (M3_E12, M3_ZERO),
    (M3_E13, M3_ZERO),
    (M3_ZERO, M3_E12),
    (M3_ZERO, M3_E13),
];
// gamma = 0 at alpha = 1/4
static BIDER_CERTS_L6Q: &[(MatLit, MatLit)] = &[
    (
        mat!(Z3, &["0", "1", "1/2"], &["0", "-2", "-1"]),
        mat!(Z3, &["0", "1", "1/2"], &["0", "-2", "-1"]),
    ),
    (M3_E12, M3_ZERO),
    (M3_E13, M3_ZERO),
    (M3_ZERO, M3_E12),
    (M3_ZERO, M3_E13),
];
static BIDER_CERTS_L7: &[(MatLit, MatLit)] = &[
    (M3_DIAG110, M3_ZERO),
    (
        mat!(&["1", "0", "0"], Z3, &["0", "0", "1"]),
        M3_E33,
    ),
    (M3_E12, M3_E12),
    (M3_E13, M3_E13),
    (M3_ZERO, M3_E23),
];
static BIDER_CERTS_L8: &[(MatLit, MatLit)] = &[
    (M3_DIAG110, M3_ZERO),
    (mat!(&["0", "1", "0"], &["1", "0", "0"], Z3), M3_ZERO),
    (M3_ZERO, M3_E13),
    (M3_ZERO, M3_E23),
];
static BIDER_CERTS_L9: &[(MatLit, MatLit)] = &[
    (M3_DIAG110, M3_ZERO),
    (mat!(&["0", "2", "0"], &["1", "0", "0"], Z3), M3_ZERO),
    (M3_ZERO, M3_E13),
    (M3_ZERO, M3_E23),
];
static BIDER_CERTS_L10: &[(MatLit, MatLit)] = &[
    (M3_DIAG110, M3_ZERO),
    (mat!(&["0", "2", "0"], &["1", "1", "0"], Z3), M3_ZERO),
    (M3_ZERO, M3_E13),
    (M3_ZERO, M3_E23),
];
static BIDER_CERTS_L11: &[(MatLit, MatLit)] = &[
    (M3_E11, M3_ZERO),
    (M3_E22, M3_ZERO),
    (M3_ZERO, M3_E13),
    (M3_ZERO, M3_E23),
];
static BIDER_CERTS_L12: &[(MatLit, MatLit)] = &[
    (
        mat!(&["2", "0", "0"], &["0", "3", "0"], &["0", "0", "1"]),
        M3_E33,
    ),
    (mat!(&["0", "0", "1"], &["1", "0", "0"], Z3), M3_ZERO),
    (M3_E23, M3_ZERO),
    (M3_ZERO, M3_E13),
    (M3_ZERO, M3_E23),
];
static BIDER_CERTS_L13: &[(MatLit, MatLit)] = &[
    (mat!(&["1", "0", "1"], &["1", "0", "0"], Z3), M3_ZERO),
    (M3_E23, M3_ZERO),
    (M3_ZERO, M3_E13),
    (M3_ZERO, M3_E23),
];

// 4x4 helpers for d1
const Z4: VecLit = &["0", "0", "0", "0"];
const M4_ZERO: MatLit = mat!(Z4, Z4, Z4, Z4);
const M4_E13: MatLit = mat!(&["0", "0", "1", "0"], Z4, Z4, Z4);
const M4_E41: MatLit = mat!(Z4, Z4, Z4, &["1", "0", "0", "0"]);
const M4_E42: MatLit = mat!(Z4, Z4, Z4, &["0", "1", "0", "0"]);
const M4_E43: MatLit = mat!(Z4, Z4, Z4, &["0", "0", "1", "0"]);

static BIDER_CERTS_D1: &[(MatLit, MatLit)] = &[
    // a: diag(1,1,0,1) with the symmetric half-pair
    (
        mat!(
            &["1", "0", "0", "0"],
            &["0", "1", "0", "0"],
            Z4,
            &["0", "0", "0", "1"]
        ),
        mat!(
            &["1/2", "-1/2", "0", "0"],
            &["-1/2", "1/2", "0", "0"],
            Z4,
            Z4
        ),
    ),
    // b
    (
        mat!(Z4, Z4, &["0", "0", "1", "0"], &["0", "0", "0", "1"]),
        mat!(
            &["1/2", "1/2", "0", "0"],
            &["1/2", "1/2", "0", "0"],
            &["0", "0", "1", "0"],
            Z4
        ),
    ),
    // c and d
    (M4_E13, M4_E13),
    (M4_ZERO, mat!(&["0", "0", "1", "0"], &["0", "0", "1", "0"], Z4, Z4)),
    // a1, a2, a3 live in the derivation slot only
    (M4_E41, M4_ZERO),
    (M4_E42, M4_ZERO),
    (M4_E43, M4_ZERO),
    // b1, b2, b3 in the anti-derivation slot only
    (M4_ZERO, M4_E41),
    (M4_ZERO, M4_E42),
    (M4_ZERO, M4_E43),
];

// Der_Lie certificates from the published proposition
static DERLIE_CERTS_L2: &[MatLit] = &[M3_E22, M3_E23];
static DERLIE_CERTS_L3: &[MatLit] = &[M3_E22, M3_E13, M3_E23];
static DERLIE_CERTS_E12_E13: &[MatLit] = &[M3_E12, M3_E13];
static DERLIE_CERTS_L6Q: &[MatLit] = &[
    mat!(Z3, &["0", "1", "1/2"], &["0", "-2", "-1"]),
    M3_E12,
    M3_E13,
];
static DERLIE_CERTS_E23: &[MatLit] = &[M3_E23];
static DERLIE_CERTS_LA: &[MatLit] = &[M2_E12];
static DERLIE_CERTS_D1: &[MatLit] = &[M4_E13, M4_E41, M4_E42, M4_E43];

// basis vectors of the constructed holomorphs
const H3_1: VecLit = &["1", "0", "0"];
const H3_2: VecLit = &["0", "1", "0"];
const H3_3: VecLit = &["0", "0", "1"];
const H3_M1: VecLit = &["-1", "0", "0"];
const H4_1: VecLit = &["1", "0", "0", "0"];
const H4_2: VecLit = &["0", "1", "0", "0"];
const H4_3: VecLit = &["0", "0", "1", "0"];
const H4_4: VecLit = &["0", "0", "0", "1"];
const H4_M2: VecLit = &["0", "-1", "0", "0"];
const H4_12: VecLit = &["1", "1", "0", "0"];
const H5_1: VecLit = &["1", "0", "0", "0", "0"];
const H5_2: VecLit = &["0", "1", "0", "0", "0"];
const H5_3: VecLit = &["0", "0", "1", "0", "0"];
const H5_4: VecLit = &["0", "0", "0", "1", "0"];
const H5_5: VecLit = &["0", "0", "0", "0", "1"];
const H5_M1: VecLit = &["-1", "0", "0", "0", "0"];
const H5_M2: VecLit = &["0", "-1", "0", "0", "0"];
const H5_2A1: VecLit = &["2", "0", "0", "0", "0"];
const H6_1: VecLit = &["1", "0", "0", "0", "0", "0"];
const H6_2: VecLit = &["0", "1", "0", "0", "0", "0"];
const H6_3: VecLit = &["0", "0", "1", "0", "0", "0"];
const H6_4: VecLit = &["0", "0", "0", "1", "0", "0"];
const H6_5: VecLit = &["0", "0", "0", "0", "1", "0"];
const H6_6: VecLit = &["0", "0", "0", "0", "0", "1"];
const H6_M1: VecLit = &["-1", "0", "0", "0", "0", "0"];
const H6_M2: VecLit = &["0", "-1", "0", "0", "0", "0"];
const H6_Q1: VecLit = &["1/4", "0", "0", "0", "0", "0"];

static HOL_CERTS_LA: &[(VecLit, VecLit, VecLit)] = &[
    (H3_2, H3_2, H3_1),
    (H3_3, H3_2, H3_1),
    (H3_2, H3_3, H3_M1),
];
static HOL_CERTS_L2: &[(VecLit, VecLit, VecLit)] = &[
    (H5_1, H5_3, H5_2A1), // [e1~, e3~] = alpha e1~ at alpha = 2
    (H5_3, H5_2, H5_2),
    (H5_2, H5_3, H5_M2),
    (H5_4, H5_5, H5_5),
    (H5_5, H5_4, &["0", "0", "0", "0", "-1"]),
    (H5_4, H5_2, H5_2),
    (H5_2, H5_4, H5_M2),
    (H5_5, H5_3, H5_2),
    (H5_3, H5_5, H5_M2),
];
static HOL_CERTS_L4: &[(VecLit, VecLit, VecLit)] = &[
    (H5_2, H5_2, H5_1),
    (H5_3, H5_3, H5_1),
    (H5_4, H5_2, H5_1),
    (H5_2, H5_4, H5_M1),
    (H5_5, H5_3, H5_1),
    (H5_3, H5_5, H5_M1),
];
static HOL_CERTS_L5: &[(VecLit, VecLit, VecLit)] = &[
    (H5_2, H5_2, H5_1),
    (H5_3, H5_3, H5_2A1), // alpha = 2
    (H5_4, H5_2, H5_1),
    (H5_2, H5_4, H5_M1),
    (H5_5, H5_3, H5_1),
    (H5_3, H5_5, H5_M1),
];
static HOL_CERTS_L6: &[(VecLit, VecLit, VecLit)] = &[
    (H5_2, H5_2, H5_1),
    (H5_2, H5_3, H5_1),
    (H5_3, H5_3, H5_2A1),
    (H5_4, H5_2, H5_1),
    (H5_2, H5_4, H5_M1),
    (H5_5, H5_3, H5_1),
    (H5_3, H5_5, H5_M1),
];
// basis: e1~, e2~, e3~, ebar12, ebar13, ebar (the combined operator)
static HOL_CERTS_L6Q: &[(VecLit, VecLit, VecLit)] = &[
    (H6_2, H6_2, H6_1),
    (H6_2, H6_3, H6_1),
    (H6_3, H6_3, H6_Q1),
    (H6_6, H6_2, &["0", "1", "-2", "0", "0", "0"]),
    (H6_2, H6_6, &["0", "-1", "2", "0", "0", "0"]),
    (H6_6, H6_3, &["0", "1/2", "-1", "0", "0", "0"]),
    // published chain entry -[e3~, ebar] = e2~ - 2 e3~; forced antisymmetry
    // of the mixed brackets makes it -1/2(e2~ - 2 e3~) instead
    (H6_3, H6_6, &["0", "-1", "2", "0", "0", "0"]),
    (H6_4, H6_2, H6_1),
    (H6_2, H6_4, H6_M1),
    (H6_5, H6_3, H6_1),
    (H6_3, H6_5, H6_M1),
];
static HOL_CERTS_L7: &[(VecLit, VecLit, VecLit)] = &[
    (H5_2, H5_3, H5_1),
    (H5_4, H5_2, H5_1),
    (H5_2, H5_4, H5_M1),
    (H5_5, H5_3, H5_1),
    (H5_3, H5_5, H5_M1),
];
static HOL_CERTS_L12: &[(VecLit, VecLit, VecLit)] = &[
    (H4_1, H4_3, H4_2),
    (H4_3, H4_3, H4_1),
    (H4_4, H4_3, H4_2),
    (H4_3, H4_4, H4_M2),
];
static HOL_CERTS_L13: &[(VecLit, VecLit, VecLit)] = &[
    (H4_1, H4_3, H4_12),
    (H4_3, H4_3, H4_1),
    (H4_4, H4_3, H4_2),
    (H4_3, H4_4, H4_M2),
];
// published presentation of hol_Lie(L_3), including its sign of [e3~, e3~]
static HOL_CERTS_L3: &[(VecLit, VecLit, VecLit)] = &[
    (H6_3, H6_2, H6_2),
    (H6_2, H6_3, H6_M2),
    (H6_3, H6_3, H6_M1), // the documented sign item: recomputation gives +e1~
    (H6_5, H6_6, H6_6),
    (H6_6, H6_5, &["0", "0", "0", "0", "0", "-1"]),
    (H6_4, H6_3, H6_1),
    (H6_3, H6_4, H6_M1),
    (H6_5, H6_2, H6_2),
    (H6_2, H6_5, H6_M2),
    (H6_6, H6_3, H6_2),
    (H6_3, H6_6, H6_M2),
];
static HOL_L3_WITNESS: MatLit = mat!(
    &["-1", "0", "0", "0", "0", "0"],
    &["0", "1", "0", "0", "0", "0"],
    &["0", "0", "1", "0", "0", "0"],
    &["0", "0", "0", "-1", "0", "0"],
    &["0", "0", "0", "0", "1", "0"],
    &["0", "0", "0", "0", "0", "1"]
);

// explicit isomorphism witnesses (columns = images of source basis vectors)
static PHI_R5: MatLit = mat!(
    &["0", "1", "1", "0"],
    &["0", "0", "0", "1"],
    &["1", "0", "0", "0"],
    &["0", "-1", "0", "0"]
);
static PSI_L39: MatLit = mat!(
    &["0", "0", "1", "-1"],
    &["1", "-1", "1", "0"],
    &["0", "0", "0", "1"],
    &["-1", "0", "0", "0"]
);
static REMARK_MAP_PRINTED: MatLit = mat!(
    &["1/4", "0", "0"],
    &["0", "0", "1"],
    &["0", "1", "-1/2"]
);
static REMARK_MAP_CORRECTED: MatLit = mat!(
    &["1/4", "0", "0"],
    &["0", "0", "1/2"],
    &["0", "1", "-1"]
);
static BASIS_CHANGE_L5M1_TO_L7: MatLit = mat!(
    &["1", "0", "0", "0", "0"],
    &["0", "1", "1", "0", "0"],
    &["0", "1", "-1", "0", "0"],
    &["0", "1", "0", "1/2", "1/2"],
    &["0", "0", "0", "1/2", "-1/2"]
);

static FIVE_DIM_HOLS: &[AlgSpec] = &[
    AlgSpec::hol_a("L_2", "2"),
    AlgSpec::hol("L_4"),
    AlgSpec::hol_a("L_5", "2"),
    AlgSpec::hol_a("L_6", "2"),
    AlgSpec::hol("L_7"),
];
static FIVE_DIM_HOLS_EXCEPT_L6: &[AlgSpec] = &[
    AlgSpec::hol_a("L_2", "2"),
    AlgSpec::hol("L_4"),
    AlgSpec::hol_a("L_5", "2"),
    AlgSpec::hol("L_7"),
];

static HOL_DIM2_MEMBERS: &[AlgSpec] = &[AlgSpec::cat("L_B")];
static HOL_DIM3_MEMBERS: &[AlgSpec] = &[
    AlgSpec::cat("L_A"),
    AlgSpec::cat("L_1"),
    AlgSpec::cat("L_8"),
    AlgSpec::cat_a("L_9", "2"),
    AlgSpec::cat_a("L_10", "2"),
    AlgSpec::cat("L_11"),
];
static HOL_DIM4_MEMBERS: &[AlgSpec] = &[AlgSpec::cat("L_12"), AlgSpec::cat("L_13")];
static HOL_DIM5_MEMBERS: &[AlgSpec] = &[
    AlgSpec::cat_a("L_2", "2"),
    AlgSpec::cat("L_4"),
    AlgSpec::cat_a("L_5", "2"),
    AlgSpec::cat_a("L_6", "2"),
    AlgSpec::cat("L_7"),
];
static HOL_DIM6_MEMBERS: &[AlgSpec] = &[AlgSpec::cat("L_3"), AlgSpec::cat_a("L_6", "1/4")];

/// The full expectations suite, in report order.
pub fn expectations() -> Vec<Expectation> {
    let mut out = Vec::new();

    // --- biderivation dimensions (published theorem) -------------------
    let bider_dims: &[(AlgSpec, usize, &[(MatLit, MatLit)])] = &[
        (AlgSpec::cat("L_1"), 3, BIDER_CERTS_L1),
        (AlgSpec::cat_a("L_2", "2"), 5, BIDER_CERTS_L2),
        (AlgSpec::cat_a("L_2", "-1"), 4, BIDER_CERTS_L2M1),
        (AlgSpec::cat("L_3"), 4, BIDER_CERTS_L3),
        (AlgSpec::cat("L_4"), 5, BIDER_CERTS_L4),
        (AlgSpec::cat_a("L_5", "2"), 6, BIDER_CERTS_L5),
        (AlgSpec::cat_a("L_6", "2"), 5, BIDER_CERTS_L6),
        (AlgSpec::cat_a("L_6", "1/4"), 5, BIDER_CERTS_L6Q),
        (AlgSpec::cat("L_7"), 5, BIDER_CERTS_L7),
        (AlgSpec::cat("L_8"), 4, BIDER_CERTS_L8),
        (AlgSpec::cat_a("L_9", "2"), 4, BIDER_CERTS_L9),
        (AlgSpec::cat_a("L_10", "2"), 4, BIDER_CERTS_L10),
        (AlgSpec::cat("L_11"), 4, BIDER_CERTS_L11),
        (AlgSpec::cat("L_12"), 5, BIDER_CERTS_L12),
        (AlgSpec::cat("L_13"), 4, BIDER_CERTS_L13),
        (AlgSpec::cat("L_A"), 3, BIDER_CERTS_LA),
        (AlgSpec::cat("L_B"), 2, BIDER_CERTS_LB),
        (AlgSpec::cat("d1"), 10, BIDER_CERTS_D1),
    ];
    for (alg, dim, certs) in bider_dims {
        out.push(Expectation {
            locus: "bider-table",
            quantity: "dim Bider",
            kind: Kind::BiderDim { alg: *alg, expected: *dim },
        });
        out.push(Expectation {
            locus: "bider-table",
            quantity: "displayed matrices member",
            kind: Kind::BiderCerts { alg: *alg, certs },
        });
    }

    // --- Lie-centers ----------------------------------------------------
    let zlie: &[(AlgSpec, &[VecLit])] = &[
        (AlgSpec::cat("L_1"), &[]),
        (AlgSpec::cat_a("L_2", "2"), &[E2_3]),
        (AlgSpec::cat("L_3"), &[E1_3, E2_3]),
        (AlgSpec::cat("L_4"), &[E1_3]),
        (AlgSpec::cat_a("L_5", "2"), &[E1_3]),
        (AlgSpec::cat_a("L_6", "2"), &[E1_3, &["0", "1", "-2"]]),
        (AlgSpec::cat_a("L_6", "1/4"), &[E1_3, &["0", "1", "-2"]]),
        (AlgSpec::cat("L_7"), &[E1_3]),
        (AlgSpec::cat("L_8"), &[]),
        (AlgSpec::cat_a("L_9", "2"), &[]),
        (AlgSpec::cat_a("L_10", "2"), &[]),
        (AlgSpec::cat("L_11"), &[]),
        (AlgSpec::cat("L_12"), &[E2_3]),
        (AlgSpec::cat("L_13"), &[E2_3]),
        (AlgSpec::cat("L_A"), &[E1_2]),
        (AlgSpec::cat("L_B"), &[]),
        (AlgSpec::cat("d1"), &[&["1", "0", "0", "0"], &["0", "0", "0", "1"]]),
    ];
    for (alg, rows) in zlie {
        out.push(Expectation {
            locus: "lie-center-table",
            quantity: "Z_Lie span",
            kind: Kind::LieCenterSpan { alg: *alg, rows },
        });
    }

    // --- Lie-derivations -------------------------------------------------
    let derlie: &[(AlgSpec, usize, &[MatLit])] = &[
        (AlgSpec::cat("L_1"), 0, &[]),
        (AlgSpec::cat_a("L_2", "2"), 2, DERLIE_CERTS_L2),
        (AlgSpec::cat_a("L_2", "-1"), 2, DERLIE_CERTS_L2),
        (AlgSpec::cat("L_3"), 3, DERLIE_CERTS_L3),
        (AlgSpec::cat("L_4"), 2, DERLIE_CERTS_E12_E13),
        (AlgSpec::cat_a("L_5", "2"), 2, DERLIE_CERTS_E12_E13),
        (AlgSpec::cat_a("L_6", "2"), 2, DERLIE_CERTS_E12_E13),
        (AlgSpec::cat_a("L_6", "1/4"), 3, DERLIE_CERTS_L6Q),
        (AlgSpec::cat("L_7"), 2, DERLIE_CERTS_E12_E13),
        (AlgSpec::cat("L_8"), 0, &[]),
        (AlgSpec::cat_a("L_9", "2"), 0, &[]),
        (AlgSpec::cat_a("L_10", "2"), 0, &[]),
        (AlgSpec::cat("L_11"), 0, &[]),
        (AlgSpec::cat("L_12"), 1, DERLIE_CERTS_E23),
        (AlgSpec::cat("L_13"), 1, DERLIE_CERTS_E23),
        (AlgSpec::cat("L_A"), 1, DERLIE_CERTS_LA),
        (AlgSpec::cat("L_B"), 0, &[]),
        (AlgSpec::cat("d1"), 4, DERLIE_CERTS_D1),
    ];
    for (alg, dim, mats) in derlie {
        out.push(Expectation {
            locus: "lie-derivation-table",
            quantity: "dim Der_Lie",
            kind: Kind::DerLieDim { alg: *alg, expected: *dim },
        });
        if !mats.is_empty() {
            out.push(Expectation {
                locus: "lie-derivation-table",
                quantity: "displayed matrices member",
                kind: Kind::DerLieCerts { alg: *alg, mats },
            });
        }
    }

    // --- holomorph soundness and dimensions ------------------------------
    let hol_dims: &[(AlgSpec, usize)] = &[
        (AlgSpec::cat("L_A"), 3),
        (AlgSpec::cat("L_B"), 2),
        (AlgSpec::cat("L_1"), 3),
        (AlgSpec::cat_a("L_2", "2"), 5),
        (AlgSpec::cat("L_3"), 6),
        (AlgSpec::cat("L_4"), 5),
        (AlgSpec::cat_a("L_5", "2"), 5),
        (AlgSpec::cat_a("L_6", "2"), 5),
        (AlgSpec::cat_a("L_6", "1/4"), 6),
        (AlgSpec::cat("L_7"), 5),
        (AlgSpec::cat("L_8"), 3),
        (AlgSpec::cat_a("L_9", "2"), 3),
        (AlgSpec::cat_a("L_10", "2"), 3),
        (AlgSpec::cat("L_11"), 3),
        (AlgSpec::cat("L_12"), 4),
        (AlgSpec::cat("L_13"), 4),
        (AlgSpec::cat("d1"), 8),
    ];
    for (alg, dim) in hol_dims {
        out.push(Expectation {
            locus: "holomorph-table",
            quantity: "soundness",
            kind: Kind::HolSoundness { alg: *alg },
        });
        out.push(Expectation {
            locus: "holomorph-table",
            quantity: "dim hol_Lie",
            kind: Kind::HolDim { alg: *alg, expected: *dim },
        });
    }
    for name in ["L_1", "L_8", "L_11"] {
        out.push(Expectation {
            locus: "holomorph-table",
            quantity: "hol_Lie(L) = L",
            kind: Kind::HolEqualsBase { alg: AlgSpec::cat(name) },
        });
    }
    for (name, alpha) in [("L_9", "2"), ("L_10", "2")] {
        out.push(Expectation {
            locus: "holomorph-table",
            quantity: "hol_Lie(L) = L",
            kind: Kind::HolEqualsBase { alg: AlgSpec::cat_a(name, alpha) },
        });
    }
    out.push(Expectation {
        locus: "holomorph-table",
        quantity: "hol_Lie(L) = L",
        kind: Kind::HolEqualsBase { alg: AlgSpec::cat("L_B") },
    });

    // --- published holomorph brackets ------------------------------------
    let hol_certs: &[(AlgSpec, &[(VecLit, VecLit, VecLit)])] = &[
        (AlgSpec::cat("L_A"), HOL_CERTS_LA),
        (AlgSpec::cat_a("L_2", "2"), HOL_CERTS_L2),
        (AlgSpec::cat("L_4"), HOL_CERTS_L4),
        (AlgSpec::cat_a("L_5", "2"), HOL_CERTS_L5),
        (AlgSpec::cat_a("L_6", "2"), HOL_CERTS_L6),
        (AlgSpec::cat("L_7"), HOL_CERTS_L7),
        (AlgSpec::cat("L_12"), HOL_CERTS_L12),
        (AlgSpec::cat("L_13"), HOL_CERTS_L13),
    ];
    for (alg, certs) in hol_certs {
        out.push(Expectation {
            locus: "holomorph-table",
            quantity: "published brackets",
            kind: Kind::HolBracketCerts {
                alg: *alg,
                certs,
                flag_witness: None,
                note: None,
            },
        });
    }
    out.push(Expectation {
        locus: "holomorph-table",
        quantity: "published brackets",
        kind: Kind::HolBracketCerts {
            alg: AlgSpec::cat_a("L_6", "1/4"),
            certs: HOL_CERTS_L6Q,
            flag_witness: None,
            note: Some(
                "the published chain gives -[e3~, ebar] = e2~ - 2e3~, but mixed brackets \
                 are antisymmetric by construction, forcing [e3~, ebar] = -[ebar, e3~] = \
                 -1/2(e2~ - 2e3~); the chain entry is off by a factor 2",
            ),
        },
    });
    out.push(Expectation {
        locus: "holomorph-table",
        quantity: "published brackets",
        kind: Kind::HolBracketCerts {
            alg: AlgSpec::cat("L_3"),
            certs: HOL_CERTS_L3,
            flag_witness: Some((HOL_L3_WITNESS, HOL_CERTS_L3)),
            note: None,
        },
    });

    // --- series of the 4-dimensional holomorphs --------------------------
    out.push(Expectation {
        locus: "holomorph-table",
        quantity: "lower central series",
        kind: Kind::LowerCentral {
            alg: AlgSpec::hol("L_12"),
            expected_dims: &[4, 2, 1, 0],
            nilpotent: true,
        },
    });
    out.push(Expectation {
        locus: "holomorph-table",
        quantity: "lower central series",
        kind: Kind::LowerCentral {
            alg: AlgSpec::hol("L_13"),
            expected_dims: &[4, 2, 1, 1],
            nilpotent: false,
        },
    });

    // --- explicit isomorphisms -------------------------------------------
    out.push(Expectation {
        locus: "iso-witnesses",
        quantity: "phi is an isomorphism",
        kind: Kind::IsoMap {
            source: AlgSpec::cat("R5"),
            target: AlgSpec::hol("L_12"),
            map: PHI_R5,
            note: None,
        },
    });
    out.push(Expectation {
        locus: "iso-witnesses",
        quantity: "psi is an isomorphism",
        kind: Kind::IsoMap {
            source: AlgSpec::cat("L39"),
            target: AlgSpec::hol("L_13"),
            map: PSI_L39,
            note: None,
        },
    });
    out.push(Expectation {
        locus: "iso-witnesses",
        quantity: "map as published",
        kind: Kind::IsoMap {
            source: AlgSpec::hol("L_A"),
            target: AlgSpec::cat_a("L_6", "1/4"),
            map: REMARK_MAP_PRINTED,
            note: Some(
                "as published the map sends [ebar12, e2~] = e1~ to [e2 - 1/2 e3, e3] = \
                 7/8 e1 instead of 1/4 e1; see the corrected-witness record",
            ),
        },
    });
    out.push(Expectation {
        locus: "iso-witnesses",
        quantity: "corrected witness",
        kind: Kind::IsoMap {
            source: AlgSpec::hol("L_A"),
            target: AlgSpec::cat_a("L_6", "1/4"),
            map: REMARK_MAP_CORRECTED,
            note: Some("ebar12 -> 1/2 e2 - e3 repairs the published map"),
        },
    });
    out.push(Expectation {
        locus: "iso-witnesses",
        quantity: "change of basis is an isomorphism",
        kind: Kind::IsoMap {
            source: AlgSpec::hol_a("L_5", "-1"),
            target: AlgSpec::hol("L_7"),
            map: BASIS_CHANGE_L5M1_TO_L7,
            note: None,
        },
    });

    // --- non-isomorphism certificates ------------------------------------
    out.push(Expectation {
        locus: "non-iso",
        quantity: "nilpotency distinguishes",
        kind: Kind::NilpotencyDiffers {
            a: AlgSpec::hol("L_12"),
            b: AlgSpec::hol("L_13"),
        },
    });
    out.push(Expectation {
        locus: "non-iso",
        quantity: "derived dims 2 vs 3",
        kind: Kind::DerivedDimPair {
            a: AlgSpec::hol("L_3"),
            b: AlgSpec::hol_a("L_6", "1/4"),
            expected: (2, 3),
        },
    });
    out.push(Expectation {
        locus: "non-iso",
        quantity: "nilpotency distinguishes",
        kind: Kind::NilpotencyDiffers {
            a: AlgSpec::hol("L_3"),
            b: AlgSpec::hol_a("L_6", "1/4"),
        },
    });
    out.push(Expectation {
        locus: "non-iso",
        quantity: "derived dim 3 unique",
        kind: Kind::DerivedDimUnique {
            a: AlgSpec::hol_a("L_2", "2"),
            others: &FIVE_DIM_HOLS[1..],
            expected: 3,
        },
    });
    out.push(Expectation {
        locus: "non-iso",
        quantity: "Lie-center dim 4 unique",
        kind: Kind::LieCenterDimUnique {
            a: AlgSpec::hol_a("L_6", "2"),
            others: FIVE_DIM_HOLS_EXCEPT_L6,
            expected: 4,
        },
    });

    // --- classification rows ----------------------------------------------
    for (dim, members) in [
        (2usize, HOL_DIM2_MEMBERS),
        (3, HOL_DIM3_MEMBERS),
        (4, HOL_DIM4_MEMBERS),
        (5, HOL_DIM5_MEMBERS),
        (6, HOL_DIM6_MEMBERS),
    ] {
        out.push(Expectation {
            locus: "classification-rows",
            quantity: "entries with this holomorph dimension",
            kind: Kind::HolDimGroup { dim, members },
        });
    }

    // --- the 4-dimensional two-step nilpotent example ----------------------
    out.push(Expectation {
        locus: "dieudonne-example",
        quantity: "Inn < Der_Lie < Der",
        kind: Kind::InnerDerLieDerChain {
            alg: AlgSpec::cat("d1"),
            expected: (2, 4, 6),
        },
    });
    out.push(Expectation {
        locus: "dieudonne-example",
        quantity: "[e41, e13] = e43",
        kind: Kind::OperatorBracketCert {
            alg: AlgSpec::cat("d1"),
            a: M4_E41,
            b: M4_E13,
            expected: M4_E43,
        },
    });
    out.push(Expectation {
        locus: "dieudonne-example",
        quantity: "derived subalgebra of the holomorph",
        kind: Kind::HolDerivedSpan {
            alg: AlgSpec::cat("d1"),
            rows: &[
                &["1", "0", "0", "0", "0", "0", "0", "0"],
                &["0", "0", "0", "1", "0", "0", "0", "0"],
                &["0", "0", "0", "0", "0", "0", "0", "1"],
            ],
        },
    });

    // --- holomorph-style contrasts -----------------------------------------
    out.push(Expectation {
        locus: "misra-contrast",
        quantity: "antisymmetry and ideal embedding fail",
        kind: Kind::MisraContrast,
    });
    out.push(Expectation {
        locus: "misra-contrast",
        quantity: "classical holomorph is Lie with ideal base",
        kind: Kind::ClassicalContrast,
    });

    out
}

/// Evaluate the whole suite. `workers <= 1` means sequential; with more
/// workers the evaluation fans out, but records are always assembled in
/// suite order, so the report is byte-deterministic either way.
pub fn run_reproduce(workers: usize) -> ReproReport {
    let exps = expectations();
    let records: Vec<Record> = if workers <= 1 {
        exps.iter().map(|e| e.evaluate()).collect()
    } else {
        let n = exps.len();
        let mut slots: Vec<Option<Record>> = vec![None; n];
        let next = std::sync::atomic::AtomicUsize::new(0);
        let slots_mutex = std::sync::Mutex::new(&mut slots);
        std::thread::scope(|scope| {
            for _ in 0..workers.min(n) {
                scope.spawn(|| loop {
                    let i = next.fetch_add(1, std::sync::atomic::Ordering::SeqCst);
                    if i >= n {
                        break;
                    }
                    let record = exps[i].evaluate();
                    let mut guard = slots_mutex.lock().unwrap();
                    guard[i] = Some(record);
                });
            }
        });
        slots.into_iter().map(|r| r.expect("all slots filled")).collect()
    };
    ReproReport::new(records)
}
