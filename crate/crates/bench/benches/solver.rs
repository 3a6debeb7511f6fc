use std::hint::black_box;

use cartan_bench::{g2_combined_seed, so_with_first};
use cartan_core::linalg::{nullspace, rref, RMatrix};
use cartan_core::solver::{rank_and_cartan, SearchBudget};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn bench_rref(c: &mut Criterion) {
    // dense integer matrix with a nontrivial kernel
    let rows: Vec<Vec<i64>> = (0..24)
        .map(|i| (0..32).map(|j| ((i * 7 + j * 3) % 11) as i64 - 5).collect())
        .collect();
    let m = RMatrix::from_i64_rows(&rows);
    c.bench_function("rref 24x32", |b| b.iter(|| rref(black_box(&m))));
    c.bench_function("nullspace 24x32", |b| b.iter(|| nullspace(black_box(&m))));
}

fn bench_ad_kernel(c: &mut Criterion) {
    let mut group = c.benchmark_group("ad_kernel");
    for t in [9, 16, 32] {
        let (alg, seed) = so_with_first(t);
        group.bench_with_input(BenchmarkId::new("so", t), &t, |b, _| {
            b.iter(|| alg.ad_kernel(black_box(&seed[0])).unwrap())
        });
    }
    group.finish();
}

fn bench_rank(c: &mut Criterion) {
    let budget = SearchBudget::default();
    let mut group = c.benchmark_group("rank_and_cartan");
    group.sample_size(10);
    for t in [6, 9, 16] {
        let (alg, seed) = so_with_first(t);
        group.bench_with_input(BenchmarkId::new("so", t), &t, |b, _| {
            b.iter(|| rank_and_cartan(&alg, black_box(&seed), &budget).unwrap())
        });
    }
    let (g2, seed) = g2_combined_seed();
    group.bench_function("g2", |b| {
        b.iter(|| rank_and_cartan(&g2, black_box(&seed), &budget).unwrap())
    });
    group.finish();
}

criterion_group!(benches, bench_rref, bench_ad_kernel, bench_rank);
criterion_main!(benches);
