use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use lgtw::appendix::{verify_appendix_c, CMode};
use lgtw::bounds::bounds_report;
use lgtw::congestion::{cutwidth, min_path_congestion, min_tree_congestion};
use lgtw::exact::exact_treewidth;
use lgtw::graph::line_graph;
use lgtw_bench::fixtures;

fn congestion(c: &mut Criterion) {
    let mut group = c.benchmark_group("congestion");
    for (name, g) in fixtures() {
        group.bench_with_input(BenchmarkId::new("tree", &name), &g, |b, g| {
            b.iter(|| min_tree_congestion(black_box(g)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("path", &name), &g, |b, g| {
            b.iter(|| min_path_congestion(black_box(g)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("cutwidth", &name), &g, |b, g| {
            b.iter(|| cutwidth(black_box(g)).unwrap())
        });
    }
    group.finish();
}

fn exact(c: &mut Criterion) {
    let mut group = c.benchmark_group("exact");
    group.sample_size(10);
    for (name, g) in fixtures() {
        let l = line_graph(&g);
        group.bench_with_input(BenchmarkId::new("tw-line", &name), &l, |b, l| {
            b.iter(|| exact_treewidth(black_box(l)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("bounds", &name), &g, |b, g| {
            b.iter(|| bounds_report(black_box(g), false).unwrap())
        });
    }
    group.finish();
}

fn appendix(c: &mut Criterion) {
    let mut group = c.benchmark_group("appendix-c");
    group.sample_size(10);
    group.bench_function("fast-16", |b| b.iter(|| verify_appendix_c(16, CMode::Fast).unwrap()));
    group.bench_function("full-8", |b| b.iter(|| verify_appendix_c(8, CMode::Full).unwrap()));
    group.finish();
}

criterion_group!(benches, congestion, exact, appendix);
criterion_main!(benches);
