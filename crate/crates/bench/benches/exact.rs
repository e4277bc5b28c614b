use std::hint::black_box;

use axial_core::algebra::{axis_report, decompose};
use axial_core::axet::{congruence_witness, C2Axet};
use axial_core::catalog::{b6, build_6a, build_6a_generic};
use axial_core::io::{parse_algebra, parse_scalar, serialize_algebra, AlgebraDocument};
use axial_core::linalg::nullspace;
use axial_core::Field;
use criterion::{criterion_group, criterion_main, BatchSize, Criterion};

fn scalars(c: &mut Criterion) {
    let f = Field::function(&Field::rationals(), &["alpha"]).unwrap();
    let gamma = parse_scalar("alpha/(8*(2*alpha-1))", &f).unwrap();
    let beta = parse_scalar("-alpha^2/(4*(2*alpha-1))", &f).unwrap();
    c.bench_function("ratfunc mul+add", |b| b.iter(|| black_box(&(&gamma * &beta) + &gamma)));
    c.bench_function("parse gamma", |b| b.iter(|| parse_scalar(black_box("alpha/(8*(2*alpha-1))"), &f).unwrap()));
}

fn linear_algebra(c: &mut Criterion) {
    let generic = build_6a_generic(&Field::rationals()).unwrap();
    let ad = generic.algebra.adjoint(&generic.algebra.basis(b6(0))).unwrap();
    let alpha = generic.law.alpha().clone();
    c.bench_function("6A generic nullspace of ad - alpha", |b| b.iter(|| nullspace(black_box(&ad.shift(&alpha)))));

    let q = Field::rationals();
    let special = build_6a(&q.rational(1, 4).unwrap()).unwrap();
    let b0 = special.algebra.basis(b6(0));
    c.bench_function("6A(1/4) decompose b_0", |b| b.iter(|| decompose(&special.algebra, black_box(&b0), &special.law).unwrap()));
    c.bench_function("6A(1/4) axis report b_0", |b| {
        b.iter(|| axis_report(&special.algebra, black_box(&b0), &special.law).unwrap())
    });
}

fn axets(c: &mut Criterion) {
    c.bench_function("skew(64) closure a_0, a_1", |b| {
        b.iter_batched(
            || C2Axet::skew(64).unwrap(),
            |x| x.closure(&[x.point_of_label(0).unwrap(), x.point_of_label(1).unwrap()]).unwrap(),
            BatchSize::SmallInput,
        )
    });
    c.bench_function("witnesses q = 1024", |b| {
        b.iter(|| (1..4096u64).step_by(2).map(|t| congruence_witness(1024, t).unwrap()).sum::<u64>())
    });
}

fn documents(c: &mut Criterion) {
    let doc = AlgebraDocument::from(&build_6a_generic(&Field::rationals()).unwrap());
    let text = serialize_algebra(&doc);
    c.bench_function("serialize 6A generic", |b| b.iter(|| serialize_algebra(black_box(&doc))));
    c.bench_function("parse 6A generic", |b| b.iter(|| parse_algebra(black_box(&text)).unwrap()));
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(20);
    targets = scalars, linear_algebra, axets, documents
}
criterion_main!(benches);
