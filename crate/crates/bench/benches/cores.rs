use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use rooted_cover::covers::minimal_vertex_covers;
use rooted_cover::graph::Graph;
use rooted_cover::lq::{has_linear_quotients, rooted_power_list};
use rooted_cover::powers::{min_gens_power_brute, min_gens_power_pairs};
use rooted_cover::rooted::{maximal_expression, rooted_list_path, sort_rooted};

fn bench_rooted_list(c: &mut Criterion) {
    c.bench_function("rooted_list_path/14", |b| {
        b.iter(|| rooted_list_path(black_box(14)))
    });
}

fn bench_cover_enumeration(c: &mut Criterion) {
    let g = Graph::path(14).unwrap();
    c.bench_function("minimal_vertex_covers/P_14", |b| {
        b.iter(|| minimal_vertex_covers(black_box(&g)).unwrap())
    });
}

fn bench_power_gens(c: &mut Criterion) {
    let list = rooted_list_path(9);
    c.bench_function("min_gens/P_9^3/brute", |b| {
        b.iter(|| min_gens_power_brute(black_box(&list), 3).unwrap())
    });
    c.bench_function("min_gens/P_9^3/pairs", |b| {
        b.iter(|| min_gens_power_pairs(black_box(&list), 3).unwrap())
    });
}

fn bench_maximal_expression(c: &mut Criterion) {
    let list = rooted_list_path(9);
    let pg = min_gens_power_brute(&list, 3).unwrap();
    let target = pg.minimal.iter().last().unwrap().clone();
    c.bench_function("maximal_expression/P_9^3", |b| {
        b.iter(|| maximal_expression(black_box(&target), &list, 3).unwrap())
    });
}

fn bench_linear_quotients(c: &mut Criterion) {
    let list = rooted_list_path(9);
    let pg = min_gens_power_brute(&list, 2).unwrap();
    let sorted = sort_rooted(&pg.minimal, &list, 2).unwrap();
    c.bench_function("has_linear_quotients/P_9^2", |b| {
        b.iter(|| has_linear_quotients(black_box(&sorted)))
    });
    c.bench_function("verify_main_theorem_pipeline/P_9^2", |b| {
        b.iter(|| {
            let (_, sorted) = rooted_power_list(black_box(9), 2).unwrap();
            has_linear_quotients(&sorted)
        })
    });
}

criterion_group!(
    benches,
    bench_rooted_list,
    bench_cover_enumeration,
    bench_power_gens,
    bench_maximal_expression,
    bench_linear_quotients
);
criterion_main!(benches);
