use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use umlist_bench::{disc_instance, random_planar, staggered_lists};
use umlist_core::colorers::{exact_k_color, DEFAULT_EXACT_GUARD};
use umlist_core::geometry::build_interval_hypergraph;
use umlist_core::intervals::interval_list_size;
use umlist_core::planar::PlanarGraph;
use umlist_core::{find_separator, um_color_from_lists, IntervalColorer};

fn engine_on_intervals(c: &mut Criterion) {
    let mut group = c.benchmark_group("potential_engine_intervals");
    for n in [31usize, 127, 255] {
        let h = build_interval_hypergraph(n).unwrap();
        let lists = staggered_lists(n, interval_list_size(n));
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, _| {
            b.iter(|| um_color_from_lists(black_box(&h), black_box(&lists), &IntervalColorer).unwrap())
        });
    }
    group.finish();
}

fn exact_coloring(c: &mut Criterion) {
    let mut group = c.benchmark_group("exact_k_color_discs");
    for n in [8usize, 12, 16] {
        let h = disc_instance(n, n as u64);
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, _| {
            b.iter(|| exact_k_color(black_box(&h), 4, DEFAULT_EXACT_GUARD).unwrap())
        });
    }
    group.finish();
}

fn separators(c: &mut Criterion) {
    let mut group = c.benchmark_group("find_separator");
    let cases = [
        ("grid_4x4", PlanarGraph::grid(4, 4)),
        ("grid_10x10", PlanarGraph::grid(10, 10)),
        ("random_400", random_planar(400, 7)),
    ];
    for (name, g) in &cases {
        group.bench_function(*name, |b| b.iter(|| find_separator(black_box(g)).unwrap()));
    }
    group.finish();
}

criterion_group!(benches, engine_on_intervals, exact_coloring, separators);
criterion_main!(benches);
