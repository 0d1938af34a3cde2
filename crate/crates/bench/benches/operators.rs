use std::hint::black_box;

use casimir_core::poly::Poly;
use casimir_core::projectors::{char_coefficients, OperatorPowers};
use casimir_core::{make_spec, projector_system, CasimirBundle, Family};
use criterion::{criterion_group, criterion_main, Criterion};

fn bundle(c: &mut Criterion) {
    let mut group = c.benchmark_group("bundle");
    group.sample_size(10);
    for (family, n) in [(Family::Orthogonal, 6), (Family::Symplectic, 8)] {
        let spec = make_spec(family, n).unwrap();
        group.bench_function(spec.to_string(), |b| {
            b.iter(|| CasimirBundle::new(black_box(&spec)).unwrap())
        });
    }
    group.finish();
}

fn compose(c: &mut Criterion) {
    let mut group = c.benchmark_group("c_plus_squared");
    group.sample_size(10);
    for (family, n) in [(Family::Orthogonal, 8), (Family::Symplectic, 10)] {
        let spec = make_spec(family, n).unwrap();
        let b = CasimirBundle::new(&spec).unwrap();
        group.bench_function(spec.to_string(), |bench| {
            bench.iter(|| black_box(&b.c_plus).compose(&b.c_plus).unwrap())
        });
    }
    group.finish();
}

fn identity_and_projectors(c: &mut Criterion) {
    let mut group = c.benchmark_group("pipeline");
    group.sample_size(10);
    let spec = make_spec(Family::Orthogonal, 7).unwrap();
    let b = CasimirBundle::new(&spec).unwrap();
    group.bench_function("characteristic_identity so(7)", |bench| {
        bench.iter(|| {
            let powers = OperatorPowers::new(&b.c_ad, &b.op_i, 6).unwrap();
            let poly = Poly::new(char_coefficients(spec.m()));
            powers.evaluate(&poly).unwrap()
        })
    });
    group.bench_function("projector_system so(7)", |bench| {
        bench.iter(|| projector_system(black_box(&b)).unwrap())
    });
    group.finish();
}

criterion_group!(benches, bundle, compose, identity_and_projectors);
criterion_main!(benches);
