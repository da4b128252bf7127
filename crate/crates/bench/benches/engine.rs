//! Benchmarks for the hot paths: truncated-series products, the closed-form
//! generating functions, stratum enumeration, and the projector algebra.
//! Everything is exact arithmetic, so these mostly track BigInt traffic.

use criterion::{criterion_group, criterion_main, BatchSize, Criterion};
use semismall_bench::{e8_context, line, plane};
use semismall_core::{
    compose, decompose_parabolic, decompose_wreath, goettsche_series, mumford_projector,
    parabolic_chis, parabolic_series, realize_in_mode, RealizationMode,
};

fn bench_series(c: &mut Criterion) {
    let x = plane();
    let d = line();
    c.bench_function("goettsche_poincare_t10", |b| {
        b.iter(|| goettsche_series(&x, 10, RealizationMode::Poincare).unwrap())
    });
    c.bench_function("parabolic_hodge_t6_s4", |b| {
        b.iter(|| parabolic_series(&x, &d, 6, &[4], RealizationMode::Hodge).unwrap())
    });
    c.bench_function("parabolic_euler_two_flags_t5_s3", |b| {
        b.iter(|| parabolic_series(&x, &d, 5, &[3, 3], RealizationMode::Euler).unwrap())
    });
}

fn bench_strata(c: &mut Criterion) {
    let x = plane();
    let d = line();
    c.bench_function("parabolic_chis_6_4", |b| {
        b.iter(|| parabolic_chis(6, &[4]))
    });
    c.bench_function("decompose_parabolic_4_2_2", |b| {
        b.iter(|| decompose_parabolic(4, &[2, 2], &x, &d).unwrap())
    });
    c.bench_function("realize_parabolic_4_2_2_hodge", |b| {
        let dec = decompose_parabolic(4, &[2, 2], &x, &d).unwrap();
        b.iter(|| realize_in_mode(&dec.sum, RealizationMode::Hodge).unwrap())
    });
    c.bench_function("decompose_wreath_3_6", |b| {
        b.iter(|| decompose_wreath(3, 6))
    });
}

fn bench_projectors(c: &mut Criterion) {
    let ctx = e8_context();
    c.bench_function("mumford_projector_e8", |b| {
        b.iter(|| mumford_projector(&ctx).unwrap())
    });
    c.bench_function("e8_projector_square", |b| {
        let p = mumford_projector(&ctx).unwrap();
        b.iter_batched(
            || p.clone(),
            |q| compose(&q, &q).unwrap(),
            BatchSize::SmallInput,
        )
    });
}

criterion_group!(benches, bench_series, bench_strata, bench_projectors);
criterion_main!(benches);
