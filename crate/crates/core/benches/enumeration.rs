//! Sequential vs. data-parallel timings for the search core.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use biop_core::enumerate::{
    brute_force_biop_search, enumerate_nat_by_length_with, lunar_pool, records_nat_with,
    SearchConfig,
};
use biop_core::ring::RingId;

fn modes() -> Vec<(&'static str, SearchConfig)> {
    vec![
        ("seq", SearchConfig::sequential()),
        ("par", SearchConfig::default()),
    ]
}

fn bench_length_enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate_by_length");
    for n in [40u64, 80, 120] {
        for (mode, cfg) in modes() {
            group.bench_with_input(BenchmarkId::new(mode, n), &n, |b, &n| {
                b.iter(|| enumerate_nat_by_length_with(n, &cfg).unwrap())
            });
        }
    }
    group.finish();
}

fn bench_records(c: &mut Criterion) {
    let mut group = c.benchmark_group("records");
    group.sample_size(10);
    for (mode, cfg) in modes() {
        group.bench_function(BenchmarkId::new(mode, 60), |b| {
            b.iter(|| records_nat_with(60, &cfg).unwrap())
        });
    }
    group.finish();
}

fn bench_lunar_brute_force(c: &mut Criterion) {
    let mut group = c.benchmark_group("lunar_brute_force");
    group.sample_size(10);
    let pool = lunar_pool(2);
    for (mode, cfg) in modes() {
        group.bench_function(BenchmarkId::new(mode, "2digit_len3"), |b| {
            b.iter(|| brute_force_biop_search(RingId::Lunar, &pool, 3, &cfg).unwrap())
        });
    }
    group.finish();
}

criterion_group!(
    benches,
    bench_length_enumeration,
    bench_records,
    bench_lunar_brute_force
);
criterion_main!(benches);
