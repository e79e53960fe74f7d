use core::hint::black_box;
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use qjacobi_core::{eval_recurrence, eval_sum, eval_sum_compensated, ParamPair};

fn bench_recurrence(c: &mut Criterion) {
    let mut group = c.benchmark_group("eval_recurrence");
    let params = ParamPair::new(0.93, -1.9).unwrap();
    for n in [5usize, 10, 15, 20] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| eval_recurrence(black_box(n), black_box(&params), black_box(0.375)))
        });
    }
    group.finish();
}

fn bench_sum(c: &mut Criterion) {
    let mut group = c.benchmark_group("eval_sum");
    let params = ParamPair::new(0.93, -1.9).unwrap();
    for n in [5usize, 10, 15, 20] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| eval_sum(black_box(n), black_box(&params), black_box(0.375)))
        });
    }
    group.finish();
}

fn bench_sum_compensated(c: &mut Criterion) {
    let mut group = c.benchmark_group("eval_sum_compensated");
    let params = ParamPair::new(0.93, -1.9).unwrap();
    for n in [5usize, 10, 15, 20] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| eval_sum_compensated(black_box(n), black_box(&params), black_box(0.375)))
        });
    }
    group.finish();
}

criterion_group!(benches, bench_recurrence, bench_sum, bench_sum_compensated);
criterion_main!(benches);
