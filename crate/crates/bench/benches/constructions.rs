use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use eqnsd::generate::{complete, random_bipartite, random_tree};
use eqnsd::{
    colour_bipartite_total, colour_complete_edge, colour_complete_total, colour_forest_edge,
    exact_value, extend_edge_to_total, verify_edge, Mode, SearchConfig,
};

fn complete_edge(c: &mut Criterion) {
    let mut group = c.benchmark_group("complete_edge");
    for n in [11, 41, 75] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| colour_complete_edge(black_box(n)).unwrap())
        });
    }
    group.finish();
}

fn complete_total(c: &mut Criterion) {
    c.bench_function("complete_total/40", |b| {
        b.iter(|| colour_complete_total(black_box(40)).unwrap())
    });
}

fn forest(c: &mut Criterion) {
    let mut group = c.benchmark_group("forest_edge");
    for n in [50, 300] {
        let t = random_tree(n, 7).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(n), &t, |b, t| {
            b.iter(|| colour_forest_edge(black_box(t)).unwrap())
        });
    }
    group.finish();
}

fn bipartite_total(c: &mut Criterion) {
    let (g, _) = random_bipartite(15, 15, 0.5, 3).unwrap();
    c.bench_function("bipartite_total/15x15", |b| {
        b.iter(|| colour_bipartite_total(black_box(&g)).unwrap())
    });
}

fn verify_and_extend(c: &mut Criterion) {
    let g = complete(75).unwrap();
    let col = colour_complete_edge(75).unwrap();
    c.bench_function("verify_edge/K75", |b| {
        b.iter(|| verify_edge(black_box(&g), black_box(&col)).unwrap())
    });
    c.bench_function("extend_to_total/K75", |b| {
        b.iter(|| extend_edge_to_total(black_box(&g), black_box(&col)).unwrap())
    });
}

fn exact(c: &mut Criterion) {
    let mut group = c.benchmark_group("exact_edge");
    group.sample_size(10);
    for n in [4, 5, 6] {
        let g = complete(n).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(n), &g, |b, g| {
            b.iter(|| exact_value(black_box(g), &SearchConfig::new(Mode::Edge, 4)).unwrap())
        });
    }
    group.finish();
}

criterion_group!(
    benches,
    complete_edge,
    complete_total,
    forest,
    bipartite_total,
    verify_and_extend,
    exact
);
criterion_main!(benches);
