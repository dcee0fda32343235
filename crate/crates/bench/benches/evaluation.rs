//! Benchmarks of the evaluation kernels and the mid-level pipelines:
//! Z(t) on both paths, the theta phase, a complete zero scan over the
//! first Gram blocks, and the explicit-formula zero sum with its tail.

use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use zcosmo_core::{find_zeros, theta, z_eval, zero_sum, EvalConfig, EvalPath};

fn bench_z_eval(c: &mut Criterion) {
    let oracle = EvalConfig { path: EvalPath::EulerMaclaurin, ..EvalConfig::default() };
    // relaxed target so the asymptotic path answers at every height here
    let asymptotic = EvalConfig {
        path: EvalPath::RiemannSiegel,
        rs_correction_order: 2,
        target_abs_error: 1.0,
        ..EvalConfig::default()
    };
    let mut group = c.benchmark_group("z_eval");
    for &t in &[100.5, 1000.2, 10_000.2] {
        group.bench_with_input(BenchmarkId::new("oracle", t as u64), &t, |b, &t| {
            b.iter(|| z_eval(black_box(t), &oracle).unwrap());
        });
        group.bench_with_input(BenchmarkId::new("asymptotic", t as u64), &t, |b, &t| {
            b.iter(|| z_eval(black_box(t), &asymptotic).unwrap());
        });
    }
    group.finish();
}

fn bench_theta(c: &mut Criterion) {
    let mut group = c.benchmark_group("theta");
    for &t in &[25.0, 1000.2, 100_000.2] {
        group.bench_with_input(BenchmarkId::from_parameter(t as u64), &t, |b, &t| {
            b.iter(|| theta(black_box(t)));
        });
    }
    group.finish();
}

fn bench_zero_scan(c: &mut Criterion) {
    let cfg = EvalConfig::default();
    let mut group = c.benchmark_group("zero_scan");
    group.sample_size(10);
    group.bench_function("heights_to_100", |b| {
        b.iter(|| find_zeros(0.05, 100.0, &cfg).unwrap());
    });
    group.bench_function("heights_to_500", |b| {
        b.iter(|| find_zeros(0.05, 500.0, &cfg).unwrap());
    });
    group.finish();
}

fn bench_zero_sum(c: &mut Criterion) {
    let cfg = EvalConfig::default();
    let table = find_zeros(0.05, 2000.0, &cfg).unwrap();
    let mut group = c.benchmark_group("zero_sum_cutoff_2t");
    for &t in &[100.3, 500.3, 990.3] {
        group.bench_with_input(BenchmarkId::from_parameter(t as u64), &t, |b, &t| {
            b.iter(|| zero_sum(black_box(t), &table, 2.0 * t).unwrap());
        });
    }
    group.finish();
}

criterion_group!(benches, bench_z_eval, bench_theta, bench_zero_scan, bench_zero_sum);
criterion_main!(benches);
