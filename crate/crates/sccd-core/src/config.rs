//! Solver configuration and telemetry shared across the solver pipelines.

use thiserror::Error;

use crate::graph::GraphError;
use crate::separators::{CoveringMode, SeparatorError};
use crate::skew::SkewBackend;

#[derive(Debug, Clone)]
pub struct SolveConfig {
    pub covering: CoveringMode,
    pub covering_retries: usize,
    pub seed: u64,
    pub skew_backend: SkewBackend,
}

impl Default for SolveConfig {
    fn default() -> Self {
        SolveConfig {
            covering: CoveringMode::Exhaustive,
            covering_retries: 8,
            seed: 0,
            skew_backend: SkewBackend::Fpt,
        }
    }
}

/// Search counters accumulated over one solve call.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SolveStats {
    pub nodes: u64,
    pub skew_calls: u64,
    pub important_separators: u64,
    pub covering_sets: u64,
}

impl SolveStats {
    pub fn merge(&mut self, other: &SolveStats) {
        self.nodes += other.nodes;
        self.skew_calls += other.skew_calls;
        self.important_separators += other.important_separators;
        self.covering_sets += other.covering_sets;
    }
}

#[derive(Debug, Error)]
pub enum SolveError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Separator(#[from] SeparatorError),
    #[error("brute-force enumeration of {candidates} candidates over sizes up to {budget} exceeds the limit of {limit} subsets")]
    OracleBudget {
        candidates: usize,
        budget: usize,
        limit: usize,
    },
}
