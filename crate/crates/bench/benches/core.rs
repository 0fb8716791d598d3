use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use laplace2sq_bench::{HARD_SEMIPRIMES, SMOOTH, SPLIT_PRIMES};
use laplace2sq_core::{construct, enumerate_reps, factorize, multiplicity_nd, split_prime};

fn factorization(c: &mut Criterion) {
    let mut g = c.benchmark_group("factorize");
    for n in SMOOTH.into_iter().chain(HARD_SEMIPRIMES) {
        g.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| b.iter(|| factorize(black_box(n))));
    }
    g.finish();
}

fn splitting(c: &mut Criterion) {
    let mut g = c.benchmark_group("split_prime");
    for p in SPLIT_PRIMES {
        g.bench_with_input(BenchmarkId::from_parameter(p), &p, |b, &p| b.iter(|| split_prime(black_box(p))));
    }
    g.finish();
}

fn enumeration(c: &mut Criterion) {
    let mut g = c.benchmark_group("enumerate_reps");
    for n in SMOOTH {
        let f = factorize(n).unwrap();
        g.bench_with_input(BenchmarkId::from_parameter(n), &f, |b, f| b.iter(|| enumerate_reps(black_box(f))));
    }
    g.finish();
}

fn construction(c: &mut Criterion) {
    let mut g = c.benchmark_group("construct");
    for n in [4u64, 21, 60] {
        g.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| b.iter(|| construct(black_box(n))));
    }
    g.finish();
}

fn higher_dimensions(c: &mut Criterion) {
    let mut g = c.benchmark_group("multiplicity_nd");
    for (lambda, d) in [(2000u64, 3u32), (500, 4)] {
        g.bench_function(format!("{lambda}_d{d}"), |b| b.iter(|| multiplicity_nd(black_box(lambda), d)));
    }
    g.finish();
}

criterion_group!(benches, factorization, splitting, enumeration, construction, higher_dimensions);
criterion_main!(benches);
