use std::hint::black_box;

use abelsq_core::ogden::{MarkedWitness, Refuter, SearchConfig, VerifyConfig};
use abelsq_core::words::{is_abelian_square, is_uneven_word};
use abelsq_core::{build_witness, parse_r, verify_theorem_instance, Decomposition, Strategy};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn words(c: &mut Criterion) {
    let mut group = c.benchmark_group("words");
    for n in [5, 7] {
        let z = build_witness(n).unwrap();
        group.bench_with_input(BenchmarkId::new("is_abelian_square", n), &z, |b, z| {
            b.iter(|| is_abelian_square(black_box(z)))
        });
        group.bench_with_input(BenchmarkId::new("parse_r", n), &z, |b, z| {
            b.iter(|| parse_r(black_box(z)))
        });
        group.bench_with_input(BenchmarkId::new("is_uneven_word", n), &z, |b, z| {
            b.iter(|| is_uneven_word(black_box(z)))
        });
    }
    group.finish();
}

fn refutation(c: &mut Criterion) {
    let mut group = c.benchmark_group("refute");
    for n in [5, 8] {
        let z = MarkedWitness::new(n).unwrap();
        let refuter = Refuter::new(&z, SearchConfig::default());
        let start = 4 * (n as usize - 1);
        // a whole w4 block needs the large factorial exponent
        let pump = Decomposition::new([start, start + 4, start + 4, start + 4], z.len()).unwrap();
        group.bench_with_input(BenchmarkId::new("w4_block", n), &pump, |b, d| {
            b.iter(|| refuter.refute(black_box(d)).unwrap())
        });
        let far = z.coloring.green.end;
        let long = Decomposition::new([start, start + 4, far, far + 3], z.len()).unwrap();
        group.bench_with_input(BenchmarkId::new("x_in_black", n), &long, |b, d| {
            b.iter(|| refuter.refute(black_box(d)).unwrap())
        });
    }
    group.bench_function("index_n8", |b| {
        let z = MarkedWitness::new(8).unwrap();
        b.iter(|| Refuter::new(black_box(&z), SearchConfig::default()))
    });
    group.finish();
}

fn sweeps(c: &mut Criterion) {
    let mut group = c.benchmark_group("sweep");
    group.sample_size(10);
    for window in [10, 20] {
        group.bench_with_input(BenchmarkId::new("window", window), &window, |b, &window| {
            b.iter(|| {
                verify_theorem_instance(
                    5,
                    &[Strategy::ExhaustiveWindow { window }],
                    &VerifyConfig::default(),
                )
                .unwrap()
            })
        });
    }
    group.bench_function("random_10k", |b| {
        b.iter(|| {
            verify_theorem_instance(
                5,
                &[Strategy::Random {
                    seed: 7,
                    count: 10_000,
                }],
                &VerifyConfig::default(),
            )
            .unwrap()
        })
    });
    group.finish();
}

criterion_group!(benches, words, refutation, sweeps);
criterion_main!(benches);
