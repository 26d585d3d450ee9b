//! Shared helpers for the solver benchmarks.

use sccd_core::oracle::random_graph;
use sccd_core::MultiDigraph;

/// A reproducible batch of benchmark graphs.
pub fn graph_batch(count: usize, n: usize, m: usize, seed: u64) -> Vec<MultiDigraph> {
    (0..count)
        .map(|i| random_graph(n, m, seed + i as u64))
        .collect()
}
