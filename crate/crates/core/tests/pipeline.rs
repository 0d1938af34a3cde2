use casimir_core::casimir::{adjoint_action, generator_labels};
use casimir_core::projectors::{dimensions, expected_dims, generic_roots, so8_tensors};
use casimir_core::rational::{int, q};
use casimir_core::tensorspace::{parse_sparse, to_sparse_string};
use casimir_core::verify::{run_duality_check, run_suite};
use casimir_core::vogel::{cross_check, CheckMode};
use casimir_core::{
    make_spec, make_spec_with, projector_system, CasimirBundle, Error, Family, Level, Limits,
};

#[test]
fn sp4_end_to_end() {
    let spec = make_spec(Family::Symplectic, 4).unwrap();
    let bundle = CasimirBundle::new(&spec).unwrap();
    let system = projector_system(&bundle).unwrap();
    assert_eq!(dimensions(&system).unwrap(), [35, 10, 1, 14, 35, 5]);

    let roots = generic_roots(spec.m());
    for (item, root) in system.items.iter().zip(roots) {
        assert_eq!(item.eigenvalue, Some(root));
        let lhs = bundle.c_ad.compose(&item.operator).unwrap();
        assert_eq!(lhs, item.operator.scale(root), "{}", item.label);
    }

    let labels = generator_labels(&spec);
    assert_eq!(labels.len(), spec.adjoint_dim());
    for &(i, j) in &labels {
        let action = adjoint_action(&spec, i, j).unwrap();
        assert!(action.commutator(&bundle.c_ad).unwrap().is_zero());
    }
    assert!(cross_check(&system, CheckMode::Strict).passed());
}

#[test]
fn sparse_export_round_trips() {
    let spec = make_spec(Family::Orthogonal, 5).unwrap();
    let bundle = CasimirBundle::new(&spec).unwrap();
    let text = to_sparse_string(&bundle.c_plus);
    assert!(text.starts_with("SPARSEOP n=5 k=4 nnz="));
    assert_eq!(parse_sparse(&text).unwrap(), bundle.c_plus);
}

#[test]
fn so8_tensor_relations() {
    let spec = make_spec(Family::Orthogonal, 8).unwrap();
    let (a4, e4) = so8_tensors(&spec).unwrap();
    let e2 = e4.compose(&e4).unwrap();
    assert_eq!(e2, a4);
    assert_eq!(e2.compose(&e4).unwrap(), e4);
    assert_eq!(a4.trace(), int(70));
    assert_eq!(e4.trace(), int(0));

    let bundle = CasimirBundle::new(&spec).unwrap();
    let system = projector_system(&bundle).unwrap();
    assert_eq!(dimensions(&system).unwrap(), [350, 28, 1, 35, 35, 35, 300]);
    let thirds = system
        .items
        .iter()
        .filter(|item| item.eigenvalue == Some(q(-1, 3)))
        .count();
    assert_eq!(thirds, 3);
}

#[test]
fn full_suites_pass_for_small_algebras() {
    for (family, n) in [
        (Family::Orthogonal, 3),
        (Family::Orthogonal, 4),
        (Family::Symplectic, 2),
        (Family::Symplectic, 4),
    ] {
        let spec = make_spec(family, n).unwrap();
        let rec = run_suite(&spec, Level::Full);
        assert!(rec.passed(), "{}", rec.to_text());
    }
}

#[test]
fn duality_rows() {
    for n in [4, 6, 8, 10, 12] {
        let rec = run_duality_check(n);
        assert!(rec.passed(), "{}", rec.to_text());
    }
    assert!(!run_duality_check(5).passed());
}

#[test]
fn expected_dims_sum_to_square() {
    for m in (-12..=12).filter(|m| *m != 2 && *m != 0) {
        let d = m * (m - 1) / 2;
        assert_eq!(expected_dims(m).iter().sum::<i64>(), d * d, "M={m}");
    }
}

#[test]
fn limits_are_enforced() {
    let limits = Limits { max_n: 6 };
    assert_eq!(
        make_spec_with(Family::Orthogonal, 7, &limits),
        Err(Error::DimensionTooLarge { n: 7, max: 6 })
    );
    assert!(make_spec_with(Family::Orthogonal, 6, &limits).is_ok());
    assert_eq!(
        make_spec(Family::Symplectic, 3),
        Err(Error::SymplecticOddDimension(3))
    );
}
