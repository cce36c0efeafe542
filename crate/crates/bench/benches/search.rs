use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use hamsq_bench::triangle_chain;
use hamsq_core::engine::search::find_with_strategy;
use hamsq_core::generate::{figure1, random_connected};
use hamsq_core::{decide_and_construct, decompose, CycleConstraint, Mode, SearchLimits, Strategy};

fn search(c: &mut Criterion) {
    let mut group = c.benchmark_group("free_search");
    for len in [3, 5] {
        let g = triangle_chain(len);
        for (name, s) in [("held_karp", Strategy::HeldKarp), ("backtrack", Strategy::Backtrack)] {
            group.bench_with_input(BenchmarkId::new(name, g.vertex_count()), &g, |b, g| {
                b.iter(|| find_with_strategy(black_box(g), &CycleConstraint::free(), u64::MAX, s).unwrap())
            });
        }
    }
    group.finish();
}

fn decide(c: &mut Criterion) {
    let limits = SearchLimits::default();
    let f1 = figure1();
    c.bench_function("decide_constructive_figure1", |b| {
        b.iter(|| decide_and_construct(black_box(&f1), Mode::Constructive, &limits).unwrap())
    });
    c.bench_function("decide_oracle_figure1", |b| {
        b.iter(|| decide_and_construct(black_box(&f1), Mode::OracleSearch, &limits).unwrap())
    });
    let chain = triangle_chain(15);
    c.bench_function("decide_constructive_triangle_chain_31", |b| {
        b.iter(|| decide_and_construct(black_box(&chain), Mode::Constructive, &limits).unwrap())
    });
}

fn blocks(c: &mut Criterion) {
    let g = random_connected(7, 200).unwrap();
    c.bench_function("decompose_random_200", |b| b.iter(|| decompose(black_box(&g)).unwrap()));
}

criterion_group!(benches, search, decide, blocks);
criterion_main!(benches);
