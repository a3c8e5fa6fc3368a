//! Acceptance suite: one test per numbered criterion, each printing one
//! PASS/FAIL line per checked item (`--nocapture` shows them on success).
//!
//! Several published table entries are internally inconsistent — the
//! recomputation proves them incompatible with the defining identities —
//! so the criteria that pin those published values fail here, with the
//! recomputed value in the failure message. The discrepancies are listed
//! in the reproduction report (`leibniz reproduce`) with explanatory
//! notes; everything else is green.

mod common;

use std::fmt::Display;
use std::time::{Duration, Instant};

use leibniz_core::catalog::{self, params_from, Params};
use leibniz_core::expect::{run_reproduce, suite};
use leibniz_core::holomorph::{bider_semidirect, classical_holomorph, lie_holomorph, misra_holomorph};
use leibniz_core::iso::{find_isomorphism, find_isomorphism_with_deadline, SearchOutcome};
use leibniz_core::report::{Record, Status};
use leibniz_core::spaces::{
    antiderivation_space, biderivation_space, der_action_on_ader, derivation_space,
    inner_derivations, lie_derivation_space, pair_bracket, space_as_algebra, vectorize_pair,
};
use leibniz_core::{Algebra, FieldDesc, Fp, Rat, Scalar, SeriesKind};

struct Criterion {
    number: u32,
    failures: Vec<String>,
}

impl Criterion {
    fn new(number: u32) -> Criterion {
        Criterion { number, failures: Vec::new() }
    }

    fn item(&mut self, label: &str, ok: bool, detail: impl Display) {
        let verdict = if ok { "PASS" } else { "FAIL" };
        println!("{verdict} criterion {}: {label} ({detail})", self.number);
        if !ok {
            self.failures.push(format!("{label}: {detail}"));
        }
    }

    fn record(&mut self, r: &Record) {
        let ok = r.status == Status::Match;
        let label = format!("{} / {} / {}", r.locus, r.subject, r.quantity);
        let detail = format!("expected {}; computed {}", r.expected, r.computed);
        self.item(&label, ok, detail);
    }

    fn finish(self) {
        assert!(
            self.failures.is_empty(),
            "criterion {} has {} failing item(s):\n  {}",
            self.number,
            self.failures.len(),
            self.failures.join("\n  ")
        );
    }
}

fn records_where(pred: impl Fn(&Record) -> bool) -> Vec<Record> {
    run_reproduce(1)
        .records
        .into_iter()
        .filter(|r| pred(r))
        .collect()
}

fn get_f(name: &str, alpha: Option<&str>, p: u32) -> Algebra<Fp> {
    let field = FieldDesc::prime(p).unwrap();
    let params = match alpha {
        Some(a) => params_from(&[("alpha", a)]),
        None => Params::new(),
    };
    catalog::get::<Fp>(name, &params, &field).unwrap()
}

#[test]
fn criterion_01_biderivation_dimensions() {
    let mut c = Criterion::new(1);
    let records = records_where(|r| r.locus == "bider-table" && r.subject != "d1");
    assert_eq!(records.len(), 34);
    for r in &records {
        c.record(r);
    }
    c.finish();
}

#[test]
fn criterion_02_lie_centers() {
    let mut c = Criterion::new(2);
    let records = records_where(|r| r.locus == "lie-center-table");
    assert_eq!(records.len(), 17);
    for r in &records {
        c.record(r);
    }
    c.finish();
}

#[test]
fn criterion_03_lie_derivations() {
    let mut c = Criterion::new(3);
    for r in records_where(|r| r.locus == "lie-derivation-table" && r.quantity == "dim Der_Lie") {
        c.record(&r);
    }
    // the two characterizations agree on the whole suite ...
    for spec in suite() {
        let alg = spec.resolve().unwrap();
        let both = lie_derivation_space(&alg);
        c.item(
            &format!("characterizations agree on {}", spec.subject()),
            both.is_ok(),
            both.err().map(|e| e.to_string()).unwrap_or_else(|| "identical".into()),
        );
    }
    // ... and on at least 100 random right Leibniz algebras over F_3
    // (lie_derivation_space recomputes both routes and errors on any
    // disagreement)
    let samples = common::random_right_leibniz(0xC3, 3, 110);
    let mut agreed = 0usize;
    for alg in &samples {
        if lie_derivation_space(alg).is_ok() {
            agreed += 1;
        }
    }
    c.item(
        "characterizations agree on random samples",
        agreed == samples.len() && samples.len() >= 100,
        format!("{agreed}/{} samples", samples.len()),
    );
    c.finish();
}

#[test]
fn criterion_04_holomorph_soundness_and_dims() {
    let mut c = Criterion::new(4);
    for r in records_where(|r| {
        (r.locus == "holomorph-table"
            && matches!(r.quantity.as_str(), "soundness" | "dim hol_Lie" | "hol_Lie(L) = L"))
            || r.locus == "classification-rows"
    }) {
        c.record(&r);
    }
    c.finish();
}

#[test]
fn criterion_05_isomorphisms_and_distinctions() {
    let mut c = Criterion::new(5);
    for r in records_where(|r| r.locus == "iso-witnesses" && r.quantity != "corrected witness") {
        c.record(&r);
    }
    for r in records_where(|r| {
        r.locus == "non-iso"
            && (r.subject == "hol_Lie(L_12) vs hol_Lie(L_13)"
                || r.quantity == "derived dims 2 vs 3"
                || r.quantity == "derived dim 3 unique"
                || r.quantity == "Lie-center dim 4 unique")
    }) {
        c.record(&r);
    }
    c.finish();
}

#[test]
fn criterion_06_minus_one_square_searches() {
    let mut c = Criterion::new(6);
    let budget = Duration::from_secs(10);

    let l4 = get_f("L_4", None, 5);
    let l54 = get_f("L_5", Some("4"), 5);
    let started = Instant::now();
    let witness = find_isomorphism(&l4, &l54).unwrap();
    let took = started.elapsed();
    c.item(
        "L_4 ~ L_5(4) over F5 (witness found)",
        witness.is_some() && took < budget,
        format!("{:?}", took),
    );

    let l52 = get_f("L_5", Some("2"), 5);
    let started = Instant::now();
    let none = find_isomorphism(&l4, &l52).unwrap();
    let took = started.elapsed();
    c.item(
        "L_4 !~ L_5(2) over F5 (exhausted)",
        none.is_none() && took < budget,
        format!("{:?}", took),
    );

    let l4_3 = get_f("L_4", None, 3);
    let l52_3 = get_f("L_5", Some("2"), 3);
    let started = Instant::now();
    let none = find_isomorphism(&l4_3, &l52_3).unwrap();
    let took = started.elapsed();
    c.item(
        "L_4 !~ L_5(2) over F3 (exhausted)",
        none.is_none() && took < budget,
        format!("{:?}", took),
    );

    // stretch: the dim-5 exhaustion over F3, soft-capped; a timeout
    // downgrades to a flagged line instead of a failure
    let hol4 = lie_holomorph(&get_f("L_4", None, 3)).unwrap().algebra;
    let hol7 = lie_holomorph(&get_f("L_7", None, 3)).unwrap().algebra;
    let cap_secs = std::env::var("LEIBNIZ_STRETCH_CAP_SECS")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(600u64);
    let deadline = Instant::now() + Duration::from_secs(cap_secs);
    let started = Instant::now();
    match find_isomorphism_with_deadline(&hol4, &hol7, Some(deadline)).unwrap() {
        SearchOutcome::NotIsomorphic => c.item(
            "stretch: hol_Lie(L_4) !~ hol_Lie(L_7) over F3",
            true,
            format!("exhausted in {:?}", started.elapsed()),
        ),
        SearchOutcome::TimedOut => {
            println!(
                "FLAGGED criterion 6: stretch exhaustion timed out after {:?} (soft cap)",
                started.elapsed()
            );
        }
        SearchOutcome::Found(_) => c.item(
            "stretch: hol_Lie(L_4) !~ hol_Lie(L_7) over F3",
            false,
            "unexpected witness",
        ),
    }
    c.finish();
}

#[test]
fn criterion_07_dieudonne_example() {
    let mut c = Criterion::new(7);
    for r in records_where(|r| {
        r.locus == "dieudonne-example"
            || (r.subject == "hol_Lie(d1)" && r.quantity == "dim hol_Lie")
    }) {
        c.record(&r);
    }
    c.finish();
}

#[test]
fn criterion_08_property_suites() {
    let mut c = Criterion::new(8);
    let mut catalog_q: Vec<(String, Algebra<Rat>)> = catalog::ENTRIES
        .iter()
        .map(|e| {
            (
                e.name.to_string(),
                catalog::get::<Rat>(e.name, &Params::new(), &FieldDesc::Q).unwrap(),
            )
        })
        .collect();
    catalog_q.retain(|(_, a)| a.identity_flags().right_leibniz);
    let randoms: Vec<(String, Algebra<Fp>)> = common::random_right_leibniz(0xC8, 3, 100)
        .into_iter()
        .enumerate()
        .map(|(i, a)| (format!("random#{i}"), a))
        .collect();

    let mut violations: Vec<String> = Vec::new();
    fn sweep<K: Scalar>(violations: &mut Vec<String>, name: &str, alg: &Algebra<K>) {
        let centers = alg.centers();
        let leib = alg.leibniz_kernel().unwrap();
        if !leib.leq(&centers.right).unwrap() {
            violations.push(format!("{name}: Leib not inside Z_r"));
        }
        if !centers.center.leq(&centers.lie_center).unwrap() {
            violations.push(format!("{name}: Z not inside Z_Lie"));
        }
        if centers.lie_center.is_full() != alg.identity_flags().lie {
            violations.push(format!("{name}: Z_Lie = L iff Lie fails"));
        }
        let der = derivation_space(alg);
        let ader = antiderivation_space(alg);
        let der_lie = lie_derivation_space(alg).unwrap();
        let bider = biderivation_space(alg);
        for dd in ader.basis_matrices() {
            for v in leib.basis_vectors() {
                if !dd.apply(&v).unwrap().iter().all(|x| x.is_zero()) {
                    violations.push(format!("{name}: ADer does not kill Leib"));
                }
            }
        }
        match space_as_algebra(&bider) {
            Ok(alg_b) => {
                if !alg_b.identity_flags().right_leibniz {
                    violations.push(format!("{name}: Bider not right Leibniz"));
                }
            }
            Err(e) => violations.push(format!("{name}: Bider not closed: {e}")),
        }
        match space_as_algebra(&der) {
            Ok(alg_d) => {
                if !alg_d.identity_flags().lie {
                    violations.push(format!("{name}: Der not Lie"));
                }
            }
            Err(e) => violations.push(format!("{name}: Der not closed: {e}")),
        }
        // inner-biderivation map is a homomorphism
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
                let xy = alg.bracket(&basis(i), &basis(j)).unwrap();
                let lhs = vectorize_pair(
                    &alg.ad(&xy).unwrap().scale(&minus_one),
                    &alg.ad_left(&xy).unwrap(),
                );
                let (rd, rdd) = pair_bracket(
                    &alg.ad(&basis(i)).unwrap().scale(&minus_one),
                    &alg.ad_left(&basis(i)).unwrap(),
                    &alg.ad(&basis(j)).unwrap().scale(&minus_one),
                    &alg.ad_left(&basis(j)).unwrap(),
                )
                .unwrap();
                if lhs != vectorize_pair(&rd, &rdd) {
                    violations.push(format!("{name}: inner biderivation map not a homomorphism"));
                }
            }
        }
        for d in der.basis_matrices() {
            for dd in ader.basis_matrices() {
                if !ader.contains(&der_action_on_ader(&d, &dd).unwrap()) {
                    violations.push(format!("{name}: d.D not an anti-derivation"));
                }
            }
        }
        let lower = alg.series(SeriesKind::LowerCentral).unwrap();
        if lower.class.is_some_and(|cl| cl <= 2) {
            let inn = inner_derivations(alg).unwrap();
            if !inn.basis.leq(&der_lie.basis).unwrap() {
                violations.push(format!("{name}: Inn not inside Der_Lie though 2-nilpotent"));
            }
        }
        if der_lie.dim() == der.dim() && !alg.identity_flags().left_leibniz {
            violations.push(format!("{name}: Der_Lie = Der but not symmetric"));
        }
    }
    for (name, alg) in &catalog_q {
        sweep(&mut violations, name, alg);
    }
    for (name, alg) in &randoms {
        sweep(&mut violations, name, alg);
    }
    c.item(
        "property sweep over catalog and random samples",
        violations.is_empty(),
        format!(
            "{} algebras checked, violations: {:?}",
            catalog_q.len() + randoms.len(),
            violations
        ),
    );

    // the footnote case: Z(L_B) = 0 makes the biderivation semidirect
    // product a right Leibniz algebra
    let lb = catalog::get::<Rat>("L_B", &Params::new(), &FieldDesc::Q).unwrap();
    let s = bider_semidirect(&lb).unwrap();
    c.item(
        "bider_semidirect(L_B) right Leibniz",
        s.algebra.identity_flags().right_leibniz,
        format!("dim {}", s.algebra.dim()),
    );
    c.finish();
}

#[test]
fn criterion_09_misra_contrast() {
    let mut c = Criterion::new(9);
    let lie2 = catalog::get::<Rat>("lie2", &Params::new(), &FieldDesc::Q).unwrap();
    let mis = misra_holomorph(&lie2).unwrap();
    let flags = mis.algebra.identity_flags();
    c.item(
        "misra holomorph fails antisymmetry",
        !flags.antisymmetric && !flags.lie,
        format!("antisymmetric = {}", flags.antisymmetric),
    );
    c.item(
        "misra holomorph: base not an ideal",
        !mis.algebra.is_ideal(&mis.base_image()).unwrap(),
        "checked",
    );
    let cls = classical_holomorph(&lie2).unwrap();
    c.item(
        "classical holomorph is Lie",
        cls.algebra.identity_flags().lie,
        format!("dim {}", cls.algebra.dim()),
    );
    c.item(
        "classical holomorph: base is an ideal",
        cls.algebra.is_ideal(&cls.base_image()).unwrap(),
        "checked",
    );
    c.finish();
}

#[test]
fn criterion_10_reproduction_report() {
    let mut c = Criterion::new(10);
    let bin = env!("CARGO_BIN_EXE_leibniz");
    let first = std::process::Command::new(bin).arg("reproduce").output().unwrap();
    let second = std::process::Command::new(bin)
        .arg("reproduce")
        .env("LEIBNIZ_WORKERS", "3")
        .output()
        .unwrap();
    c.item(
        "byte-deterministic across runs and worker counts",
        first.stdout == second.stdout,
        format!("{} bytes", first.stdout.len()),
    );
    let report = run_reproduce(1);
    let flagged: Vec<&Record> = report
        .records
        .iter()
        .filter(|r| r.status == Status::Flagged)
        .collect();
    c.item(
        "flagged is exactly the documented bracket-sign item",
        flagged.len() == 1 && flagged[0].subject == "hol_Lie(L_3)",
        format!("{} flagged", flagged.len()),
    );
    let mismatches: Vec<String> = report
        .records
        .iter()
        .filter(|r| r.status == Status::Mismatch)
        .map(|r| format!("{} / {}", r.subject, r.quantity))
        .collect();
    c.item(
        "every expectation matched (exit 0)",
        first.status.code() == Some(0) && mismatches.is_empty(),
        format!(
            "exit {:?}; {} mismatches: {}",
            first.status.code(),
            mismatches.len(),
            mismatches.join("; ")
        ),
    );
    c.finish();
}
