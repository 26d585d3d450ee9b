//! Machine-readable solve reports. Key names are part of the contract.

use serde::{Deserialize, Serialize};

use sccd_core::graph::MultiDigraph;
use sccd_core::{DeletionSet, SolveConfig, SolveStats};

use crate::format::arc_to_triple;

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(untagged)]
pub enum SolutionRepr {
    Vertices { vertices: Vec<usize> },
    Arcs { arcs: Vec<(usize, usize, usize)> },
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct StatsRepr {
    pub nodes: u64,
    pub skew_calls: u64,
    pub important_separators: u64,
    pub covering_sets: u64,
    pub wall_ms: u64,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct ConfigRepr {
    pub covering: String,
    pub covering_retries: usize,
    pub skew_backend: String,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct SolveReport {
    pub problem: String,
    pub n: usize,
    pub m: usize,
    pub k: usize,
    pub s: Option<usize>,
    pub mode: String,
    pub feasible: bool,
    pub solution: Option<SolutionRepr>,
    pub stats: StatsRepr,
    pub seed: u64,
    pub config: ConfigRepr,
}

impl SolveReport {
    #[allow(clippy::too_many_arguments)]
    pub fn build(
        problem: &str,
        g: &MultiDigraph,
        k: usize,
        s: Option<usize>,
        mode: &str,
        solution: Option<&DeletionSet>,
        stats: &SolveStats,
        wall_ms: u64,
        cfg: &SolveConfig,
    ) -> SolveReport {
        let solution_repr = solution.map(|sol| match sol {
            DeletionSet::Vertices(vs) => SolutionRepr::Vertices {
                vertices: vs.iter().map(|v| v + 1).collect(),
            },
            DeletionSet::Arcs(arcs) => SolutionRepr::Arcs {
                arcs: arcs.iter().map(|&a| arc_to_triple(g, a)).collect(),
            },
        });
        SolveReport {
            problem: problem.to_string(),
            n: g.num_vertices(),
            m: g.num_arcs(),
            k,
            s,
            mode: mode.to_string(),
            feasible: solution.is_some(),
            solution: solution_repr,
            stats: StatsRepr {
                nodes: stats.nodes,
                skew_calls: stats.skew_calls,
                important_separators: stats.important_separators,
                covering_sets: stats.covering_sets,
                wall_ms,
            },
            seed: cfg.seed,
            config: ConfigRepr {
                covering: format!("{:?}", cfg.covering).to_lowercase(),
                covering_retries: cfg.covering_retries,
                skew_backend: format!("{:?}", cfg.skew_backend).to_lowercase(),
            },
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_table(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "problem  {}\ninstance n={} m={}\nbudget   k={}{}\nmode     {}\nfeasible {}\n",
            self.problem,
            self.n,
            self.m,
            self.k,
            self.s.map(|s| format!(" s={s}")).unwrap_or_default(),
            self.mode,
            self.feasible,
        ));
        match &self.solution {
            Some(SolutionRepr::Vertices { vertices }) => {
                out.push_str(&format!("solution vertices {vertices:?}\n"));
            }
            Some(SolutionRepr::Arcs { arcs }) => {
                out.push_str(&format!("solution arcs (u, v, occurrence) {arcs:?}\n"));
            }
            None => out.push_str("solution none within budget\n"),
        }
        out.push_str(&format!(
            "stats    nodes={} skew_calls={} important_separators={} covering_sets={} wall_ms={}\n",
            self.stats.nodes,
            self.stats.skew_calls,
            self.stats.important_separators,
            self.stats.covering_sets,
            self.stats.wall_ms,
        ));
        out
    }
}
