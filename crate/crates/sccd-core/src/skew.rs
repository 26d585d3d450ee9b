//! The skew separator subproblem: cut every X_i -> Y_j connection with
//! i >= j, deleting at most k vertices outside all groups.

use std::collections::BTreeSet;

use crate::config::SolveStats;
use crate::graph::{Direction, MultiDigraph, VertexId};
use crate::separators::{bounded_min_cut, BoundedCut};

/// Ordered source groups X_1..X_t and sink groups Y_1..Y_t over one graph.
/// A skew separator avoids every group and cuts X_i -> Y_j for all i >= j.
#[derive(Debug, Clone)]
pub struct SkewSystem {
    pub graph: MultiDigraph,
    pub sources: Vec<BTreeSet<VertexId>>,
    pub sinks: Vec<BTreeSet<VertexId>>,
    pub budget: usize,
}

impl SkewSystem {
    pub fn group_count(&self) -> usize {
        debug_assert_eq!(self.sources.len(), self.sinks.len());
        self.sources.len()
    }

    fn group_vertices(&self) -> BTreeSet<VertexId> {
        self.sources
            .iter()
            .chain(self.sinks.iter())
            .flatten()
            .copied()
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SkewBackend {
    Brute,
    Fpt,
}

pub fn is_skew_separator(sys: &SkewSystem, s_set: &BTreeSet<VertexId>) -> bool {
    let groups = sys.group_vertices();
    if s_set
        .iter()
        .any(|v| groups.contains(v) || !sys.graph.is_vertex(*v))
    {
        return false;
    }
    let h = sys
        .graph
        .delete_vertices(s_set.iter().copied())
        .expect("live separator");
    for i in 0..sys.group_count() {
        let reach = h
            .reach_set(&sys.sources[i], Direction::Forward)
            .expect("live sources");
        for j in 0..=i {
            if sys.sinks[j].iter().any(|y| reach.contains(y)) {
                return false;
            }
        }
    }
    true
}

/// Finds a skew separator of size at most `sys.budget`, or reports that none
/// exists. The brute backend enumerates candidate sets in nondecreasing size
/// (its witness is minimum); the fpt backend runs a min-cut-guided branching
/// over closest-cut vertices, each either deleted or absorbed into a group.
pub fn solve_skew(
    sys: &SkewSystem,
    backend: SkewBackend,
    stats: &mut SolveStats,
) -> Option<BTreeSet<VertexId>> {
    stats.skew_calls += 1;
    let result = match backend {
        SkewBackend::Brute => solve_brute(sys, stats),
        SkewBackend::Fpt => solve_fpt(sys, stats),
    };
    debug_assert!(result.as_ref().is_none_or(|s| is_skew_separator(sys, s)));
    result
}

fn solve_brute(sys: &SkewSystem, stats: &mut SolveStats) -> Option<BTreeSet<VertexId>> {
    let groups = sys.group_vertices();
    let free: Vec<VertexId> = sys
        .graph
        .vertices()
        .filter(|v| !groups.contains(v))
        .collect();
    let mut chosen: Vec<usize> = Vec::new();
    for size in 0..=sys.budget.min(free.len()) {
        if let Some(found) = combos(&free, size, 0, &mut chosen, &mut |set| {
            stats.nodes += 1;
            is_skew_separator(sys, set)
        }) {
            return Some(found);
        }
    }
    None
}

fn combos(
    free: &[VertexId],
    size: usize,
    from: usize,
    chosen: &mut Vec<usize>,
    accept: &mut impl FnMut(&BTreeSet<VertexId>) -> bool,
) -> Option<BTreeSet<VertexId>> {
    if chosen.len() == size {
        let set: BTreeSet<VertexId> = chosen.iter().map(|&i| free[i]).collect();
        return accept(&set).then_some(set);
    }
    for i in from..free.len() {
        chosen.push(i);
        if let Some(found) = combos(free, size, i + 1, chosen, accept) {
            return Some(found);
        }
        chosen.pop();
    }
    None
}

struct FptState {
    graph: MultiDigraph,
    sources: Vec<BTreeSet<VertexId>>,
    sinks: Vec<BTreeSet<VertexId>>,
}

fn solve_fpt(sys: &SkewSystem, stats: &mut SolveStats) -> Option<BTreeSet<VertexId>> {
    let mut state = FptState {
        graph: sys.graph.clone(),
        sources: sys.sources.clone(),
        sinks: sys.sinks.clone(),
    };
    let mut acc = BTreeSet::new();
    let found = fpt_rec(&mut state, sys.budget, &mut acc, stats);
    if found {
        debug_assert!(is_skew_separator(sys, &acc));
        Some(acc)
    } else {
        None
    }
}

/// Smallest sink index with a surviving violating path, if any.
fn first_violated_pair(state: &FptState) -> Option<usize> {
    let t = state.sources.len();
    for j in 0..t {
        let union: BTreeSet<VertexId> = state.sources[j..].iter().flatten().copied().collect();
        if union.is_empty() {
            continue;
        }
        let reach = state
            .graph
            .reach_set(&union, Direction::Forward)
            .expect("live groups");
        if state.sinks[j].iter().any(|y| reach.contains(y)) {
            return Some(j);
        }
    }
    None
}

fn fpt_rec(
    state: &mut FptState,
    k: usize,
    acc: &mut BTreeSet<VertexId>,
    stats: &mut SolveStats,
) -> bool {
    stats.nodes += 1;
    let Some(j) = first_violated_pair(state) else {
        return true;
    };
    if k == 0 {
        return false;
    }
    let union: BTreeSet<VertexId> = state.sources[j..].iter().flatten().copied().collect();
    let protected: BTreeSet<VertexId> = state
        .sources
        .iter()
        .chain(state.sinks.iter())
        .flatten()
        .copied()
        .collect();
    let cut = bounded_min_cut(&state.graph, &union, &state.sinks[j], &protected, k);
    let close = match cut {
        BoundedCut::Uncuttable | BoundedCut::Exceeds => return false,
        BoundedCut::Cut { close, .. } => close,
    };
    debug_assert!(!close.is_empty());
    let v = *close.iter().min().expect("violated pair has positive cut");

    // v is deleted
    let saved = state.graph.clone();
    state.graph = state.graph.delete_vertices([v]).expect("cut vertex live");
    acc.insert(v);
    if fpt_rec(state, k - 1, acc, stats) {
        return true;
    }
    acc.remove(&v);
    state.graph = saved;

    // v survives because everything above j is already cut from it:
    // it behaves like a sink of group j
    state.sinks[j].insert(v);
    if fpt_rec(state, k, acc, stats) {
        return true;
    }
    state.sinks[j].remove(&v);

    // v survives and is still reached from above j: all its connections
    // into Y_1..Y_j must be cut, so it behaves like a source of group j
    state.sources[j].insert(v);
    if fpt_rec(state, k, acc, stats) {
        return true;
    }
    state.sources[j].remove(&v);
    false
}
