//! Throughput benches for the data-parallel inner loops. With the default
//! `parallel` feature the public entry points run on rayon; the `seq_1thread`
//! variants pin a one-worker pool for comparison. Build with
//! `--no-default-features` to measure the fully sequential fallback.

use std::sync::Arc;

use criterion::{criterion_group, criterion_main, Criterion};

use cliffspace::clifford::{multiplication_matrix, QuadricFamily};
use cliffspace::graded::{kernel_character, AlgebraPresentation, PresentedAlgebra};
use cliffspace::linalg::rat_int;
use cliffspace::maximal::build_b;
use cliffspace::minimal::{toric_presentation, ToricParameters};

fn mode() -> &'static str {
    if cfg!(feature = "parallel") {
        "parallel"
    } else {
        "sequential"
    }
}

#[cfg(feature = "parallel")]
fn one_thread_pool() -> rayon::ThreadPool {
    rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .unwrap()
}

fn bench_multiplication_matrix(c: &mut Criterion) {
    let family = Arc::new(QuadricFamily::universal(3));
    let mut group = c.benchmark_group("multiplication_matrix_n3_d4");
    group.sample_size(20);
    group.bench_function(mode(), |b| {
        b.iter(|| multiplication_matrix(&family, 4));
    });
    #[cfg(feature = "parallel")]
    group.bench_function("seq_1thread", |b| {
        let pool = one_thread_pool();
        b.iter(|| pool.install(|| multiplication_matrix(&family, 4)));
    });
    group.finish();
}

fn bench_presented_build(c: &mut Criterion) {
    let presentation = toric_presentation(&ToricParameters {
        n: 3,
        q: rat_int(-1),
    });
    let build = |p: &AlgebraPresentation| PresentedAlgebra::build(p.clone(), 7).unwrap();
    let mut group = c.benchmark_group("presented_algebra_toric_n3_d7");
    group.sample_size(10);
    group.bench_function(mode(), |b| b.iter(|| build(&presentation)));
    #[cfg(feature = "parallel")]
    group.bench_function("seq_1thread", |b| {
        let pool = one_thread_pool();
        b.iter(|| pool.install(|| build(&presentation)));
    });
    group.finish();
}

fn bench_kernel_character(c: &mut Criterion) {
    let alg = build_b(3, 4);
    let mut group = c.benchmark_group("quartic_kernel_character_n3");
    group.sample_size(20);
    group.bench_function(mode(), |b| {
        b.iter(|| kernel_character(&alg, 4, 42));
    });
    #[cfg(feature = "parallel")]
    group.bench_function("seq_1thread", |b| {
        let pool = one_thread_pool();
        b.iter(|| pool.install(|| kernel_character(&alg, 4, 42)));
    });
    group.finish();
}

criterion_group!(
    benches,
    bench_multiplication_matrix,
    bench_presented_build,
    bench_kernel_character
);
criterion_main!(benches);
