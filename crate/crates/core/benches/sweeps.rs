//! Criterion benches comparing the sequential and parallel sweep paths on
//! representative workloads, plus the hot kernels they are built from.
//!
//! With `--no-default-features` every job count falls back to the
//! sequential path, which is the baseline being compared against.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use qfloor_core::classnum::{class_number_dirichlet_uncached, discriminant_of};
use qfloor_core::floorsum::{rem_sq_sum, sqrt_sum};
use qfloor_core::identities::sweep;

fn bench_sweeps(c: &mut Criterion) {
    // Warm the class-number memo once so job counts are compared on the
    // same footing.
    sweep("conj-7.3b", 4000, 1).unwrap();

    let mut group = c.benchmark_group("sweep");
    group.sample_size(10);
    for (id, max) in [("conj-7.3b", 4000u64), ("prop-2.1a", 1500), ("lemma-2.3", 1500)] {
        for jobs in [1usize, 8] {
            group.bench_with_input(BenchmarkId::new(format!("{id}-max{max}"), jobs), &jobs, |b, &jobs| {
                b.iter(|| {
                    let s = sweep(id, max, jobs).unwrap();
                    assert_eq!(s.counterexamples_total, 0);
                    black_box(s.cases_checked)
                })
            });
        }
    }
    group.finish();
}

fn bench_kernels(c: &mut Criterion) {
    c.bench_function("sqrt_sum-100k", |b| b.iter(|| black_box(sqrt_sum(black_box(100_000)))));
    c.bench_function("rem_sq_sum-1M", |b| {
        b.iter(|| black_box(rem_sq_sum(black_box(1_000_003), black_box(1_000_002))))
    });
    let d = discriminant_of(-999_983).unwrap();
    c.bench_function("class-number-1M", |b| {
        b.iter(|| black_box(class_number_dirichlet_uncached(black_box(d)).unwrap().h))
    });
}

criterion_group!(benches, bench_sweeps, bench_kernels);
criterion_main!(benches);
