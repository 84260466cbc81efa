use std::collections::HashSet;
use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion, Throughput};
use proxi_bench::{cmst_input, forest, plane_graph, triangulated, SIZES};
use proxi_core::beta::{build_elimination_forest, contract_forest};
use proxi_core::cmst::extract_cmst_constraints;
use proxi_core::gabriel::gabriel_constraints_in;
use proxi_core::{build_cdt, generate, BetaParam, DynamicTree, Edge};
use rand::Rng;

fn cdt(c: &mut Criterion) {
    let mut g = c.benchmark_group("cdt");
    g.sample_size(10);
    for n in SIZES {
        let f = forest(n);
        g.throughput(Throughput::Elements(n as u64));
        g.bench_with_input(BenchmarkId::from_parameter(n), &f, |b, f| b.iter(|| build_cdt(black_box(f)).unwrap()));
    }
    g.finish();
}

fn cmst_extraction(c: &mut Criterion) {
    let mut g = c.benchmark_group("cmst_extraction");
    g.sample_size(10);
    for n in SIZES {
        let input = cmst_input(n);
        g.throughput(Throughput::Elements(n as u64));
        g.bench_with_input(BenchmarkId::from_parameter(n), &input, |b, i| {
            b.iter(|| extract_cmst_constraints(&i.forest, &i.t_prime, &i.cmst).unwrap())
        });
    }
    g.finish();
}

fn gabriel(c: &mut Criterion) {
    let mut g = c.benchmark_group("gabriel_local_test");
    g.sample_size(10);
    for n in SIZES {
        let (graph, t) = triangulated(plane_graph(n));
        g.throughput(Throughput::Elements(n as u64));
        g.bench_function(BenchmarkId::from_parameter(n), |b| b.iter(|| gabriel_constraints_in(&t, &graph).unwrap()));
    }
    g.finish();
}

fn beta(c: &mut Criterion) {
    let mut g = c.benchmark_group("beta_forest");
    g.sample_size(10);
    for (num, den) in [(1, 1), (3, 2), (2, 1)] {
        let beta = BetaParam::new(num, den).unwrap();
        for n in SIZES {
            let (graph, t) = triangulated(plane_graph(n));
            let e_set: HashSet<Edge> = graph.edges().iter().copied().collect();
            g.throughput(Throughput::Elements(n as u64));
            g.bench_function(BenchmarkId::new(format!("beta={beta}"), n), |b| {
                b.iter(|| {
                    let f = build_elimination_forest(&t, beta).unwrap();
                    contract_forest(&f, &e_set).leaves().len()
                })
            });
        }
    }
    g.finish();
}

fn link_cut(c: &mut Criterion) {
    let mut g = c.benchmark_group("link_cut");
    for n in [1_000usize, 100_000] {
        // A random recursive tree, then path-max queries from random vertices.
        let mut rng = generate::rng(7);
        let parents: Vec<usize> = (1..n).map(|v| rng.gen_range(0..v)).collect();
        let queries: Vec<(usize, usize)> = (0..10_000).map(|_| (rng.gen_range(0..n), rng.gen_range(0..n))).collect();
        let mut dt = DynamicTree::<i64>::new(n);
        for (v, &p) in parents.iter().enumerate() {
            dt.link(v + 1, p, (v as i64 * 7919) % 1_000_003).unwrap();
        }
        g.throughput(Throughput::Elements(queries.len() as u64));
        g.bench_function(BenchmarkId::new("lca_and_maxcost", n), |b| {
            b.iter(|| {
                let mut acc = 0;
                for &(a, q) in &queries {
                    acc ^= dt.lca(a, q).unwrap().unwrap_or(0);
                    // Vertex 0 is the root and has no edge above it.
                    acc ^= dt.maxcost(a).unwrap_or(0);
                }
                black_box(acc)
            })
        });
    }
    g.finish();
}

criterion_group!(benches, cdt, cmst_extraction, gabriel, beta, link_cut);
criterion_main!(benches);
