use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use longcycle::oracle::{pair_histogram, plane_histogram, sweep_fixed_diagonal, SweepOptions};
use longcycle_bench::{balanced, mixed_diagonal};

fn pairs(c: &mut Criterion) {
    let mut group = c.benchmark_group("pair_histogram");
    group.sample_size(10);
    for n in [6, 7, 8] {
        group.bench_with_input(BenchmarkId::new("serial", n), &n, |b, &n| {
            b.iter(|| pair_histogram(n, SweepOptions::single_threaded()).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("parallel", n), &n, |b, &n| {
            b.iter(|| pair_histogram(n, SweepOptions::default()).unwrap())
        });
    }
    group.finish();
}

fn alpha_refinement(c: &mut Criterion) {
    let sweep = pair_histogram(8, SweepOptions::default()).unwrap();
    let mut group = c.benchmark_group("alpha_table");
    for m in [2, 3, 4] {
        let alpha = balanced(8, m);
        group.bench_with_input(BenchmarkId::from_parameter(m), &alpha, |b, alpha| {
            b.iter(|| sweep.alpha_table(alpha).unwrap())
        });
    }
    group.finish();
}

fn plane(c: &mut Criterion) {
    let mut group = c.benchmark_group("plane_histogram");
    group.sample_size(10);
    for n in [4, 5, 6] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| plane_histogram(n, SweepOptions::default()).unwrap())
        });
    }
    group.finish();
}

fn fixed_diagonal(c: &mut Criterion) {
    let mut group = c.benchmark_group("fixed_diagonal");
    group.sample_size(10);
    for n in [6, 7, 8] {
        let diagonal = mixed_diagonal(n);
        group.bench_with_input(BenchmarkId::from_parameter(n), &diagonal, |b, d| {
            b.iter(|| sweep_fixed_diagonal(d, None, SweepOptions::default()).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, pairs, alpha_refinement, plane, fixed_diagonal);
criterion_main!(benches);
