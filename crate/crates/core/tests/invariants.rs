//! Structural invariants of the theory, asserted over the whole catalog
//! and over random right Leibniz algebras of dimension <= 3 over F_3.

mod common;

use leibniz_core::catalog::{self, Params};
use leibniz_core::holomorph::{classical_holomorph, lie_holomorph};
use leibniz_core::spaces::{
    antiderivation_space, biderivation_space, der_action_on_ader, derivation_space,
    inner_biderivations, inner_derivations, lie_derivation_space, operator_bracket, pair_bracket,
    space_as_algebra, vectorize, vectorize_pair,
};
use leibniz_core::{Algebra, FieldDesc, Fp, Rat, Scalar, SeriesKind};

fn catalog_algebras_q() -> Vec<(String, Algebra<Rat>)> {
    catalog::ENTRIES
        .iter()
        .map(|e| {
            (
                e.name.to_string(),
                catalog::get::<Rat>(e.name, &Params::new(), &FieldDesc::Q).unwrap(),
            )
        })
        .collect()
}

fn random_algebras() -> Vec<(String, Algebra<Fp>)> {
    common::random_right_leibniz(0xA11CE, 3, 120)
        .into_iter()
        .enumerate()
        .map(|(i, a)| (format!("random#{i}"), a))
        .collect()
}

fn check_structural_invariants<K: Scalar>(name: &str, alg: &Algebra<K>) {
    let flags = alg.identity_flags();
    assert!(flags.right_leibniz, "{name}: suite input must be right Leibniz");
    let centers = alg.centers();
    let leib = alg.leibniz_kernel().unwrap();

    // Leib(L) lies in the right center
    assert!(leib.leq(&centers.right).unwrap(), "{name}: Leib <= Z_r");
    // Z(L) lies in the Lie-center
    assert!(centers.center.leq(&centers.lie_center).unwrap(), "{name}: Z <= Z_Lie");
    // the Lie-center is everything exactly for Lie algebras
    assert_eq!(centers.lie_center.is_full(), flags.lie, "{name}: Z_Lie = L iff Lie");
    // the quotient by the Leibniz kernel is antisymmetric
    let quotient = alg.quotient(&leib).unwrap();
    assert!(quotient.identity_flags().antisymmetric, "{name}: L/Leib antisymmetric");
    // right center, center and Lie-center are ideals (the left center
    // need not be)
    assert!(alg.is_ideal(&centers.right).unwrap(), "{name}: Z_r ideal");
    assert!(alg.is_ideal(&centers.center).unwrap(), "{name}: Z ideal");
    assert!(alg.is_ideal(&centers.lie_center).unwrap(), "{name}: Z_Lie ideal");
    // two-step nilpotent: derived subalgebra inside the Lie-center
    let lower = alg.series(SeriesKind::LowerCentral).unwrap();
    if lower.class.is_some_and(|c| c <= 2) {
        assert!(
            alg.derived_subalgebra().leq(&centers.lie_center).unwrap(),
            "{name}: 2-nilpotent derived inside Z_Lie"
        );
    }
}

fn check_space_invariants<K: Scalar>(name: &str, alg: &Algebra<K>) {
    let der = derivation_space(alg);
    let ader = antiderivation_space(alg);
    let der_lie = lie_derivation_space(alg).unwrap();
    let inn = inner_derivations(alg).unwrap();
    let bider = biderivation_space(alg);
    let leib = alg.leibniz_kernel().unwrap();

    assert!(der_lie.basis.leq(&der.basis).unwrap(), "{name}: Der_Lie <= Der");
    assert!(der_lie.basis.leq(&ader.basis).unwrap(), "{name}: Der_Lie <= ADer");
    assert!(inn.basis.leq(&der.basis).unwrap(), "{name}: Inn <= Der");

    // Der_Lie is an ideal of Der under the operator bracket
    for d in der.basis_matrices() {
        for m in der_lie.basis_matrices() {
            let br = operator_bracket(&d, &m).unwrap();
            assert!(der_lie.contains(&br), "{name}: [Der, Der_Lie] inside Der_Lie");
        }
    }

    // each Lie-derivation pairs with itself into Bider
    for d in der_lie.basis_matrices() {
        assert!(bider.contains(&d, &d), "{name}: (d, d) in Bider for d in Der_Lie");
    }

    // inner derivations are Lie-derivations for 2-nilpotent algebras
    let lower = alg.series(SeriesKind::LowerCentral).unwrap();
    if lower.class.is_some_and(|c| c <= 2) {
        assert!(
            inn.basis.leq(&der_lie.basis).unwrap(),
            "{name}: Inn <= Der_Lie for 2-nilpotent"
        );
    }

    // anti-derivations annihilate the Leibniz kernel
    for dd in ader.basis_matrices() {
        for v in leib.basis_vectors() {
            let image = dd.apply(&v).unwrap();
            assert!(image.iter().all(|x| x.is_zero()), "{name}: ADer kills Leib");
        }
    }

    // the Der-action on ADer lands in ADer
    for d in der.basis_matrices() {
        for dd in ader.basis_matrices() {
            let action = der_action_on_ader(&d, &dd).unwrap();
            assert!(ader.contains(&action), "{name}: d . D in ADer");
        }
    }

    // the inner-biderivation map is a Leibniz algebra homomorphism
    let field = alg.field();
    let n = alg.dim();
    let minus_one = K::from_int(&field, -1);
    let basis = |i: usize| {
        let mut v = vec![K::zero(&field); n];
        v[i] = K::one(&field);
        v
    };
    for i in 0..n {
        for j in 0..n {
            let x = basis(i);
            let y = basis(j);
            let xy = alg.bracket(&x, &y).unwrap();
            let lhs_d = alg.ad(&xy).unwrap().scale(&minus_one);
            let lhs_dd = alg.ad_left(&xy).unwrap();
            let (rhs_d, rhs_dd) = pair_bracket(
                &alg.ad(&x).unwrap().scale(&minus_one),
                &alg.ad_left(&x).unwrap(),
                &alg.ad(&y).unwrap().scale(&minus_one),
                &alg.ad_left(&y).unwrap(),
            )
            .unwrap();
            assert_eq!(
                vectorize_pair(&lhs_d, &lhs_dd),
                vectorize_pair(&rhs_d, &rhs_dd),
                "{name}: inner biderivation map is a homomorphism at ({i},{j})"
            );
        }
    }

    // full Lie-derivation algebra forces the left identity
    if der_lie.dim() == der.dim() {
        assert!(
            alg.identity_flags().left_leibniz,
            "{name}: Der_Lie = Der forces a symmetric algebra"
        );
    }

    // bracket closures: Der is a Lie algebra, Bider a right Leibniz algebra
    let der_alg = space_as_algebra(&der).unwrap();
    assert!(der_alg.identity_flags().lie, "{name}: Der closed and Lie");
    let bider_alg = space_as_algebra(&bider).unwrap();
    assert!(
        bider_alg.identity_flags().right_leibniz,
        "{name}: Bider closed and right Leibniz"
    );

    // inner biderivations land inside Bider
    let inner_pairs = inner_biderivations(alg).unwrap();
    for (d, dd) in inner_pairs.basis_pairs() {
        assert!(bider.contains(&d, &dd), "{name}: inner biderivations in Bider");
    }
}

fn check_holomorph_invariants<K: Scalar>(name: &str, alg: &Algebra<K>) {
    let hol = lie_holomorph(alg).unwrap();
    assert!(
        hol.algebra.identity_flags().right_leibniz,
        "{name}: hol_Lie right Leibniz"
    );
    let image = hol.base_image();
    assert!(hol.algebra.is_ideal(&image).unwrap(), "{name}: base is an ideal");
    assert_eq!(
        hol.algebra.dim(),
        alg.dim() + hol.acting_dim,
        "{name}: dim additivity"
    );
    let quotient = hol.algebra.quotient(&image).unwrap();
    let acting = space_as_algebra(&lie_derivation_space(alg).unwrap()).unwrap();
    assert_eq!(quotient, acting, "{name}: quotient is Der_Lie");
    assert!(hol.projection_section_identity(), "{name}: p2 . i2 = id");
    if alg.identity_flags().lie {
        assert_eq!(
            hol.algebra,
            classical_holomorph(alg).unwrap().algebra,
            "{name}: Lie input gives the classical holomorph"
        );
        assert!(hol.algebra.identity_flags().lie, "{name}: holomorph of Lie is Lie");
    }
}

#[test]
fn structural_invariants_hold_on_catalog() {
    for (name, alg) in catalog_algebras_q() {
        check_structural_invariants(&name, &alg);
    }
}

#[test]
fn structural_invariants_hold_on_random_samples() {
    let samples = random_algebras();
    assert!(samples.len() >= 100);
    assert!(samples.iter().any(|(_, a)| a.dim() == 2));
    assert!(samples.iter().any(|(_, a)| a.dim() == 3));
    for (name, alg) in &samples {
        check_structural_invariants(name, alg);
    }
}

#[test]
fn space_invariants_hold_on_catalog() {
    for (name, alg) in catalog_algebras_q() {
        check_space_invariants(&name, &alg);
    }
}

#[test]
fn space_invariants_hold_on_random_samples() {
    for (name, alg) in random_algebras() {
        check_space_invariants(&name, &alg);
    }
}

#[test]
fn holomorph_invariants_hold_on_catalog_and_samples() {
    for (name, alg) in catalog_algebras_q() {
        check_holomorph_invariants(&name, &alg);
    }
    for (name, alg) in random_algebras().into_iter().take(40) {
        check_holomorph_invariants(&name, &alg);
    }
}

#[test]
fn lie_derivation_characterizations_agree_on_random_samples() {
    // Der_Lie computed both ways (image in the Lie-center vs Der cap ADer)
    // inside lie_derivation_space, which errors on disagreement
    for (name, alg) in random_algebras() {
        let space = lie_derivation_space(&alg)
            .unwrap_or_else(|e| panic!("{name}: characterizations disagree: {e}"));
        // and pairs (d, d) must pass the biderivation membership test
        let bider = biderivation_space(&alg);
        for d in space.basis_matrices() {
            assert!(bider.contains(&d, &d), "{name}");
        }
        let _ = vectorize(&alg.ad(&vec![Fp::zero(&alg.field()); alg.dim()]).unwrap());
    }
}
