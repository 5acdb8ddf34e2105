use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use hellykit::basis_engine::EngineConfig;
use hellykit::helly_hg::{is_hereditary_pq_helly, is_pq_helly};
use hellykit::property::{recognize, recognize_by_engine, Instance, Property};
use hellykit_bench::{coned, graph, hypergraph};

fn hypergraphs(c: &mut Criterion) {
    let mut group = c.benchmark_group("hypergraph");
    for n in [20usize, 60] {
        let h = hypergraph(n, 3 * n, 5, n as u64);
        let cone = coned(&h);
        for (p, q) in [(2, 1), (2, 2), (3, 2)] {
            let id = format!("n{n}_p{p}_q{q}");
            group.bench_with_input(BenchmarkId::new("plain", &id), &h, |b, h| b.iter(|| is_pq_helly(black_box(h), p, q)));
            group.bench_with_input(BenchmarkId::new("plain_coned", &id), &cone, |b, h| {
                b.iter(|| is_pq_helly(black_box(h), p, q))
            });
            group.bench_with_input(BenchmarkId::new("hereditary", &id), &h, |b, h| {
                b.iter(|| is_hereditary_pq_helly(black_box(h), p, q))
            });
        }
    }
    group.finish();
}

fn graphs(c: &mut Criterion) {
    let mut group = c.benchmark_group("graph");
    let config = EngineConfig::default();
    for n in [12usize, 20] {
        let g = graph(n, 0.5, n as u64);
        for property in Property::ALL.into_iter().filter(|p| p.structure != hellykit::property::Structure::Hypergraph) {
            let id = format!("{}_n{n}", property.name());
            group.bench_function(BenchmarkId::new("auto", &id), |b| {
                b.iter(|| recognize(Instance::Graph(black_box(&g)), property, 2, 1, &config))
            });
            group.bench_function(BenchmarkId::new("engine", &id), |b| {
                b.iter(|| recognize_by_engine(Instance::Graph(black_box(&g)), property, 2, 1, &config))
            });
        }
    }
    group.finish();
}

criterion_group!(benches, hypergraphs, graphs);
criterion_main!(benches);
