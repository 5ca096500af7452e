use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use fibward_core::snowflake::{bn_square_factorizations, boundary_word, build_polyomino};
use fibward_core::tiling::certificates;
use fibward_core::word::{characteristic_word, fib_word_prefix};

fn factorizations(c: &mut Criterion) {
    let mut g = c.benchmark_group("bn_square_factorizations");
    for (i, n) in [(2, 3), (3, 3), (5, 3), (2, 4)] {
        let b = boundary_word(n, i).unwrap();
        g.bench_with_input(BenchmarkId::new(format!("i={i}"), b.len()), &b, |bench, b| {
            bench.iter(|| bn_square_factorizations(black_box(b)).unwrap())
        });
    }
    g.finish();
}

fn fill(c: &mut Criterion) {
    let mut g = c.benchmark_group("build_polyomino");
    for (i, n) in [(2, 3), (5, 3), (2, 5)] {
        let b = boundary_word(n, i).unwrap();
        g.bench_with_input(BenchmarkId::new(format!("i={i}"), b.len()), &b, |bench, b| {
            bench.iter(|| build_polyomino(black_box(b)).unwrap())
        });
    }
    g.finish();
}

fn tiling(c: &mut Criterion) {
    let p = build_polyomino(&boundary_word(2, 3).unwrap()).unwrap();
    c.bench_function("certificates i=3 n=2", |bench| bench.iter(|| certificates(black_box(&p)).unwrap()));
}

fn words(c: &mut Criterion) {
    let mut g = c.benchmark_group("prefix of f^[3]");
    for len in [10_000usize, 100_000] {
        g.bench_with_input(BenchmarkId::new("characteristic_word", len), &len, |bench, &len| {
            bench.iter(|| characteristic_word(3, len).unwrap())
        });
        g.bench_with_input(BenchmarkId::new("fib_word_prefix", len), &len, |bench, &len| {
            bench.iter(|| fib_word_prefix(3, len).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, factorizations, fill, tiling, words);
criterion_main!(benches);
