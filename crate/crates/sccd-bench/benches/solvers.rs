use std::collections::BTreeSet;

use criterion::{criterion_group, criterion_main, BatchSize, Criterion};
use std::hint::black_box;

use sccd_bench::graph_batch;
use sccd_core::bounded_scc::{solve_bsscad, solve_bsscvd};
use sccd_core::one_out_regular::solve_oorvd;
use sccd_core::oracle::random_graph;
use sccd_core::separators::enumerate_important_separators;
use sccd_core::skew::{solve_skew, SkewBackend, SkewSystem};
use sccd_core::{SolveConfig, SolveStats};

fn bench_scc(c: &mut Criterion) {
    let graphs = graph_batch(32, 64, 160, 0x5cc);
    c.bench_function("scc/n64_m160", |b| {
        b.iter(|| {
            for g in &graphs {
                black_box(g.scc());
            }
        })
    });
}

fn bench_important_separators(c: &mut Criterion) {
    let graphs = graph_batch(16, 10, 24, 0x135);
    c.bench_function("important_separators/n10_p4", |b| {
        b.iter(|| {
            for g in &graphs {
                let x: BTreeSet<usize> = [0].into_iter().collect();
                let y: BTreeSet<usize> = [9].into_iter().collect();
                black_box(enumerate_important_separators(g, &x, &y, 4).unwrap());
            }
        })
    });
}

fn skew_instances(count: usize, n: usize, m: usize, k: usize) -> Vec<SkewSystem> {
    (0..count)
        .map(|i| {
            let graph = random_graph(n, m, 0x5e1 + i as u64);
            let sources: Vec<BTreeSet<usize>> = vec![[0].into(), [1].into(), [2].into()];
            let sinks: Vec<BTreeSet<usize>> = vec![[3].into(), [4].into(), [5].into()];
            SkewSystem {
                graph,
                sources,
                sinks,
                budget: k,
            }
        })
        .collect()
}

fn bench_skew(c: &mut Criterion) {
    let systems = skew_instances(16, 12, 30, 3);
    for (name, backend) in [("fpt", SkewBackend::Fpt), ("brute", SkewBackend::Brute)] {
        c.bench_function(&format!("skew/{name}/n12_t3_k3"), |b| {
            b.iter(|| {
                for sys in &systems {
                    black_box(solve_skew(sys, backend, &mut SolveStats::default()));
                }
            })
        });
    }
}

fn bench_solvers(c: &mut Criterion) {
    let cfg = SolveConfig::default();
    let graphs = graph_batch(8, 9, 20, 0xb55);
    c.bench_function("solve_bsscvd/n9_m20_k2_s2", |b| {
        b.iter_batched(
            || graphs.clone(),
            |gs| {
                for g in gs {
                    black_box(solve_bsscvd(&g, 2, 2, &cfg, &mut SolveStats::default()).unwrap());
                }
            },
            BatchSize::SmallInput,
        )
    });
    c.bench_function("solve_oorvd/n9_m20_k2", |b| {
        b.iter_batched(
            || graphs.clone(),
            |gs| {
                for g in gs {
                    black_box(solve_oorvd(&g, 2, &cfg, &mut SolveStats::default()).unwrap());
                }
            },
            BatchSize::SmallInput,
        )
    });
    let arc_graphs = graph_batch(4, 7, 14, 0xa5c);
    c.bench_function("solve_bsscad/n7_m14_k1_s2", |b| {
        b.iter_batched(
            || arc_graphs.clone(),
            |gs| {
                for g in gs {
                    black_box(solve_bsscad(&g, 1, 2, &cfg, &mut SolveStats::default()).unwrap());
                }
            },
            BatchSize::SmallInput,
        )
    });
}

criterion_group!(
    benches,
    bench_scc,
    bench_important_separators,
    bench_skew,
    bench_solvers
);
criterion_main!(benches);
