//! Acceptance gate: one test per criterion, each printing a pass line.
//! Everything is exact; a single mismatched rational fails the gate.

use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use spinspec::engine::{enumerate_spectrum, oracle_validate};
use spinspec::rational::{binomial, rat, ratio, Rational};
use spinspec::rep::weyl_dimension;
use spinspec::spaces::{
    dirac_squared, enumerate_labels, k_dimension, killing_eigenvalue, label_to_weight, make_space,
    r_squared_closed, r_squared_from_casimir, s12_constituents, s12_tm_constituents,
    s32_constituents, FamilyLabel, Parity, SpaceKind, SpaceModel, Sector,
};
use spinspec::Integer;

fn spaces_for(kind: SpaceKind, ns: &[usize]) -> Vec<SpaceModel> {
    ns.iter().map(|&n| make_space(kind, n).unwrap()).collect()
}

fn shift_constant(space: &SpaceModel) -> Rational {
    let nn = space.real_dim as i64;
    ratio(nn - 8, nn) * &space.scal_eighth
}

#[test]
fn criterion_1_sphere_closed_forms() {
    let started = Instant::now();
    for space in spaces_for(SpaceKind::Sphere, &[3, 4, 5, 6, 7, 8, 9, 10, 11, 12]) {
        let n = space.n as i64;
        let scale = ratio((n - 2) * (n - 2), n * n);
        for set in [
            enumerate_labels(&space, Sector::ImP, 30),
            enumerate_labels(&space, Sector::KerPStar, 30),
        ] {
            for (label, _) in &set.labels {
                let w = label_to_weight(&space, label).unwrap();
                match label {
                    FamilyLabel::SphereSpinor { k, .. } => {
                        let base = ratio(2 * k + n, 2);
                        assert_eq!(
                            r_squared_from_casimir(&space, Sector::ImP, &w).unwrap(),
                            &scale * &base * &base,
                            "sphere n={n} spinor k={k}"
                        );
                    }
                    FamilyLabel::SphereRarita { l, .. } => {
                        let base = ratio(2 * (l + 1) + n, 2);
                        assert_eq!(
                            r_squared_from_casimir(&space, Sector::KerPStar, &w).unwrap(),
                            &base * &base,
                            "sphere n={n} rarita l={l}"
                        );
                    }
                    other => panic!("unexpected sphere label {other}"),
                }
            }
        }
    }
    let elapsed = started.elapsed();
    assert!(elapsed.as_secs_f64() < 10.0, "took {elapsed:?}");
    println!("criterion 1 (sphere closed forms, n=3..12, index<=30, {elapsed:?}): PASS");
}

#[test]
fn criterion_2_sphere_multiplicities() {
    let two = |n: usize| BigInt::one() << ((n + 1) / 2);
    for space in spaces_for(SpaceKind::Sphere, &[5, 6, 7, 8, 9, 10, 11, 12]) {
        let n = space.n as i64;
        for k in 0..=20i64 {
            let line = &enumerate_spectrum(&space, Sector::FullSpinor, k).unwrap();
            let got = line
                .iter()
                .find(|l| {
                    l.contributors
                        .iter()
                        .any(|(lab, _, _)| matches!(lab, FamilyLabel::SphereSpinor { k: kk, .. } if *kk == k))
                })
                .unwrap()
                .multiplicity
                .clone();
            let expected = two(space.n) * binomial((k + n - 1) as u64, k as u64);
            assert_eq!(got, expected, "sphere n={n} spinor k={k}");
        }
        for l in 0..=20i64 {
            let mut total = Integer::from(0);
            for p in [Some(Parity::Plus), Some(Parity::Minus), None] {
                let label = FamilyLabel::SphereRarita { l, parity: p };
                if let Ok(w) = label_to_weight(&space, &label) {
                    total += weyl_dimension(&w, &space.group).unwrap();
                }
            }
            let expected = Rational::from(two(space.n))
                * ratio((n - 2) * (l + n + 1) * (l + 1), (l + n) * (l + 2))
                * Rational::from(binomial((l + n) as u64, (l + 1) as u64));
            assert!(expected.is_integer());
            assert_eq!(total, expected.to_integer(), "sphere n={n} rarita l={l}");
        }
    }
    // spot values at n = 7
    let s7 = make_space(SpaceKind::Sphere, 7).unwrap();
    let imp = enumerate_spectrum(&s7, Sector::ImP, 1).unwrap();
    assert_eq!(imp.last().unwrap().multiplicity, BigInt::from(112));
    let kerp = enumerate_spectrum(&s7, Sector::KerPStar, 1).unwrap();
    assert_eq!(kerp[0].multiplicity, BigInt::from(320));
    assert_eq!(kerp[1].multiplicity, BigInt::from(1680));
    println!("criterion 2 (sphere multiplicities, n=5..12, index<=20): PASS");
}

fn assert_closed_equals_casimir(space: &SpaceModel, cutoff: i64) {
    for (sector, expected_shift) in [
        (Sector::FullSpinor, space.scal_eighth.clone()),
        (Sector::KerPStar, shift_constant(space)),
    ] {
        let set = enumerate_labels(space, sector, cutoff);
        assert!(
            !set.labels.is_empty(),
            "{}:{} {sector} produced no labels",
            space.kind,
            space.n
        );
        for (label, _) in &set.labels {
            let w = label_to_weight(space, label).unwrap();
            let closed = r_squared_closed(space, sector, label).unwrap();
            let cas = spinspec::rep::casimir_eigenvalue(&w, &space.group, &space.form).unwrap();
            assert_eq!(
                closed,
                &cas + &expected_shift,
                "{}:{} {sector} {label}",
                space.kind,
                space.n
            );
        }
    }
}

#[test]
fn criterion_3_cp_closed_forms() {
    for space in spaces_for(SpaceKind::ComplexProjective, &[3, 5, 7]) {
        assert_closed_equals_casimir(&space, 20);
    }
    // spot value: the lowest Ker P* plus-family component on CP^3
    let c3 = make_space(SpaceKind::ComplexProjective, 3).unwrap();
    let label = FamilyLabel::CpPlus {
        k: 0,
        eps: 0,
        eps1: 0,
        l: 0,
    };
    let w = label_to_weight(&c3, &label).unwrap();
    assert_eq!(
        r_squared_closed(&c3, Sector::KerPStar, &label).unwrap(),
        rat(20)
    );
    assert_eq!(
        spinspec::rep::casimir_eigenvalue(&w, &c3.group, &c3.form).unwrap(),
        rat(21)
    );
    assert_eq!(shift_constant(&c3), rat(-1));
    println!("criterion 3 (CP^n closed forms, n=3,5,7, l<=20): PASS");
}

#[test]
fn criterion_4_hp_closed_forms() {
    for space in spaces_for(SpaceKind::QuaternionicProjective, &[2, 3, 4, 5, 6]) {
        assert_closed_equals_casimir(&space, 20);
    }
    let h2 = make_space(SpaceKind::QuaternionicProjective, 2).unwrap();
    let label = FamilyLabel::HpLambda { m: 1, l: 0, eps: 1 };
    assert_eq!(dirac_squared(&h2, &label).unwrap(), ratio(5, 4));
    for m in 2..=20i64 {
        let label = FamilyLabel::HpTilde { m, l: 0, eps: 0 };
        assert_eq!(
            r_squared_closed(&h2, Sector::KerPStar, &label).unwrap(),
            ratio(m * m + 5 * m + 4, 8),
            "hpn:2 tilde m={m}"
        );
    }
    println!("criterion 4 (HP^n closed forms, n=2..6, m<=20): PASS");
}

#[test]
fn criterion_5_constant_shift_invariant() {
    for space in [
        spaces_for(SpaceKind::Sphere, &[3, 4, 5, 6, 7, 8, 9, 10]),
        spaces_for(SpaceKind::ComplexProjective, &[3, 5, 7]),
        spaces_for(SpaceKind::QuaternionicProjective, &[2, 3, 4, 5, 6]),
    ]
    .concat()
    {
        let shift = shift_constant(&space);
        let scale = {
            let nn = space.real_dim as i64;
            ratio((nn - 2) * (nn - 2), nn * nn)
        };
        for (label, _) in &enumerate_labels(&space, Sector::KerPStar, 10).labels {
            let w = label_to_weight(&space, label).unwrap();
            let cas = spinspec::rep::casimir_eigenvalue(&w, &space.group, &space.form).unwrap();
            assert_eq!(
                r_squared_closed(&space, Sector::KerPStar, label).unwrap() - cas,
                shift,
                "{}:{} {label}",
                space.kind,
                space.n
            );
        }
        for (label, _) in &enumerate_labels(&space, Sector::ImP, 10).labels {
            assert_eq!(
                r_squared_closed(&space, Sector::ImP, label).unwrap(),
                &scale * dirac_squared(&space, label).unwrap(),
                "{}:{} {label}",
                space.kind,
                space.n
            );
        }
    }
    println!("criterion 5 (constant-shift and Im P scaling invariants): PASS");
}

#[test]
fn criterion_6_branching_oracle_equivalence() {
    let started = Instant::now();
    for (kind, n) in [
        (SpaceKind::Sphere, 4),
        (SpaceKind::Sphere, 5),
        (SpaceKind::ComplexProjective, 3),
        (SpaceKind::QuaternionicProjective, 2),
    ] {
        let space = make_space(kind, n).unwrap();
        let report = oracle_validate(&space, 8).unwrap();
        let failures: Vec<_> = report.checks.iter().filter(|c| !c.passed).collect();
        assert!(failures.is_empty(), "{kind}:{n} failed: {failures:?}");
    }
    let elapsed = started.elapsed();
    assert!(elapsed.as_secs_f64() < 60.0, "took {elapsed:?}");
    println!("criterion 6 (branching oracle equivalence, level 8, {elapsed:?}): PASS");
}

#[test]
fn criterion_7_bundle_bookkeeping() {
    for (kind, n) in [
        (SpaceKind::Sphere, 3),
        (SpaceKind::ComplexProjective, 3),
        (SpaceKind::QuaternionicProjective, 2),
    ] {
        let space = make_space(kind, n).unwrap();
        let nn = space.real_dim as i64;
        let half = BigInt::one() << (space.real_dim / 2);
        let sum = |ws: Vec<spinspec::Weight>| -> Integer {
            ws.iter().map(|w| k_dimension(&space, w).unwrap()).sum()
        };
        assert_eq!(sum(s12_constituents(&space)), half.clone(), "{kind}:{n} S_1/2");
        assert_eq!(
            sum(s32_constituents(&space)),
            BigInt::from(nn - 1) * &half,
            "{kind}:{n} S_3/2"
        );
        assert_eq!(
            sum(s12_tm_constituents(&space)),
            BigInt::from(nn) * &half,
            "{kind}:{n} S_1/2 x TM"
        );
    }
    println!("criterion 7 (bundle dimension bookkeeping at smallest parameters): PASS");
}

#[test]
fn criterion_8_kernel_properties() {
    // strict positivity of Ker P* in real dimension > 8
    for space in [
        spaces_for(SpaceKind::Sphere, &[9, 10, 11, 12]),
        spaces_for(SpaceKind::ComplexProjective, &[5, 7]),
        spaces_for(SpaceKind::QuaternionicProjective, &[3, 4]),
    ]
    .concat()
    {
        for line in enumerate_spectrum(&space, Sector::KerPStar, 30).unwrap() {
            assert!(
                line.eigenvalue.is_positive(),
                "{}:{} nonpositive {}",
                space.kind,
                space.n,
                line.eigenvalue
            );
        }
    }
    // Killing constant attained exactly at the sphere's k=0 component
    for space in [
        spaces_for(SpaceKind::Sphere, &[3, 4, 5, 6, 7, 8, 9]),
        spaces_for(SpaceKind::ComplexProjective, &[3, 5, 7]),
        spaces_for(SpaceKind::QuaternionicProjective, &[2, 3, 4]),
    ]
    .concat()
    {
        let killing = killing_eigenvalue(&space);
        let hits: Vec<_> = enumerate_labels(&space, Sector::FullSpinor, 30)
            .labels
            .into_iter()
            .filter(|(label, _)| dirac_squared(&space, label).unwrap() == killing)
            .map(|(label, _)| label)
            .collect();
        match space.kind {
            SpaceKind::Sphere => {
                let n = space.n as i64;
                assert_eq!(killing, ratio(n * n, 4));
                assert!(
                    !hits.is_empty()
                        && hits
                            .iter()
                            .all(|l| matches!(l, FamilyLabel::SphereSpinor { k: 0, .. })),
                    "sphere:{n} hits {hits:?}"
                );
            }
            _ => assert!(hits.is_empty(), "{}:{} hits {hits:?}", space.kind, space.n),
        }
    }
    println!("criterion 8 (Ker P* positivity for N>8, Killing detection): PASS");
}

#[test]
fn criterion_9_determinism() {
    let bin = env!("CARGO_BIN_EXE_spinspec");
    let invocations: &[&[&str]] = &[
        &["spectrum", "--space", "sphere:7", "--sector", "ker-pstar", "--cutoff", "1", "--format", "csv"],
        &["spectrum", "--space", "sphere:7", "--sector", "im-p", "--cutoff", "1", "--format", "csv"],
        &["spectrum", "--space", "cpn:3", "--sector", "dirac", "--cutoff", "8", "--format", "json"],
        &["spectrum", "--space", "hpn:2", "--sector", "ker-pstar", "--cutoff", "8", "--format", "table"],
        &["verify", "--space", "hpn:2", "--cutoff", "12"],
        &["verify", "--space", "sphere:9", "--cutoff", "12"],
        &["branch", "--group", "sp:2", "--lambda", "1,1,0", "--mu", "0;1,1"],
        &["dim", "--group", "D4", "--weight", "3/2,1/2,1/2,1/2"],
    ];
    for args in invocations {
        let run = || std::process::Command::new(bin).args(*args).output().unwrap();
        let (a, b) = (run(), run());
        assert!(a.status.success(), "{args:?} failed: {a:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?} stdout differs between runs");
        assert_eq!(a.stderr, b.stderr, "{args:?} stderr differs between runs");
    }
    println!("criterion 9 (byte-identical reruns of every command): PASS");
}
