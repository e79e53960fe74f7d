use core::hint::black_box;
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use qjacobi_core::{
    check_claim, check_lemma15, mixed_relation_residual, ClaimId, ParamPair, RelationId,
};

fn bench_lemma15(c: &mut Criterion) {
    let mut group = c.benchmark_group("check_lemma15");
    let params = ParamPair::new(0.93, -1.9).unwrap();
    for n in [5usize, 10, 20] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| check_lemma15(black_box(n), black_box(&params)))
        });
    }
    group.finish();
}

fn bench_claims(c: &mut Criterion) {
    let mut group = c.benchmark_group("check_claim");
    let params = ParamPair::new(0.93, -1.9).unwrap();
    for claim in [ClaimId::Thm21, ClaimId::CorNonInterlace, ClaimId::Thm43, ClaimId::Eq45] {
        group.bench_with_input(BenchmarkId::from_parameter(claim), &claim, |b, &claim| {
            b.iter(|| check_claim(black_box(claim), black_box(10), black_box(&params), None, None))
        });
    }
    group.finish();
}

fn bench_relation_residual(c: &mut Criterion) {
    let mut group = c.benchmark_group("mixed_relation_residual");
    let params = ParamPair::new(2.35, -1.5).unwrap();
    for relation in [RelationId::R217, RelationId::Rfo, RelationId::Rn2b4] {
        group.bench_with_input(BenchmarkId::from_parameter(relation), &relation, |b, &r| {
            b.iter(|| mixed_relation_residual(black_box(r), black_box(10), black_box(&params), black_box(0.4)))
        });
    }
    group.finish();
}

criterion_group!(benches, bench_lemma15, bench_claims, bench_relation_residual);
criterion_main!(benches);
