//! Brute-force reference solvers and instance generators for differential
//! testing.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bounded_scc::check_bssc;
use crate::config::SolveError;
use crate::graph::{MultiDigraph, VertexId};
use crate::one_out_regular::check_oor;
use crate::problem::{DeletionMode, DeletionSet, ProblemInstance, ProblemKind};

pub const DEFAULT_SUBSET_LIMIT: usize = 2_000_000;

pub fn check_instance(inst: &ProblemInstance, solution: &DeletionSet) -> Result<bool, SolveError> {
    if solution.mode() != inst.mode {
        return Ok(false);
    }
    let ok = match inst.problem {
        ProblemKind::BoundedScc => check_bssc(
            &inst.graph,
            inst.max_component.expect("bssc has s"),
            solution,
        )?,
        ProblemKind::OneOutRegular => check_oor(&inst.graph, solution)?,
    };
    Ok(ok)
}

fn subset_count(n: usize, k: usize) -> Option<usize> {
    let mut total = 0usize;
    let mut binom = 1usize;
    for i in 0..=k.min(n) {
        if i > 0 {
            binom = binom.checked_mul(n - i + 1)?.checked_div(i)?;
        }
        total = total.checked_add(binom)?;
    }
    Some(total)
}

/// Exact minimum deletion set within the budget, by enumerating candidate
/// sets in nondecreasing size and lexicographic order. Arc instances of the
/// bounded-size problem enumerate over capped multiplicities; everything is
/// checked with the real problem checker.
pub fn brute_force(
    inst: &ProblemInstance,
    limit: usize,
) -> Result<Option<DeletionSet>, SolveError> {
    let candidates: Vec<usize> = match inst.mode {
        DeletionMode::Vertex => inst.graph.vertices().collect(),
        DeletionMode::Arc => match inst.problem {
            // parallel arcs beyond k+1 copies can never all be deleted
            ProblemKind::BoundedScc => inst
                .graph
                .cap_multiplicity(inst.budget)
                .arcs()
                .map(|(id, _, _)| id)
                .collect(),
            // capping would merge distinguishable self-loops here; the raw
            // arc space is small enough to enumerate
            ProblemKind::OneOutRegular => inst.graph.arcs().map(|(id, _, _)| id).collect(),
        },
    };
    match subset_count(candidates.len(), inst.budget) {
        Some(total) if total <= limit => {}
        _ => {
            return Err(SolveError::OracleBudget {
                candidates: candidates.len(),
                budget: inst.budget,
                limit,
            })
        }
    }
    let wrap = |ids: &[usize]| -> DeletionSet {
        let set: BTreeSet<usize> = ids.iter().copied().collect();
        match inst.mode {
            DeletionMode::Vertex => DeletionSet::Vertices(set),
            DeletionMode::Arc => DeletionSet::Arcs(set),
        }
    };
    let mut chosen: Vec<usize> = Vec::new();
    for size in 0..=inst.budget.min(candidates.len()) {
        if let Some(found) = combos_rec(&candidates, size, 0, &mut chosen, &mut |ids| {
            check_instance(inst, &wrap(ids))
        })? {
            return Ok(Some(wrap(&found)));
        }
    }
    Ok(None)
}

fn combos_rec(
    cands: &[usize],
    size: usize,
    from: usize,
    chosen: &mut Vec<usize>,
    accept: &mut impl FnMut(&[usize]) -> Result<bool, SolveError>,
) -> Result<Option<Vec<usize>>, SolveError> {
    if chosen.len() == size {
        let picked: Vec<usize> = chosen.iter().map(|&i| cands[i]).collect();
        return Ok(accept(&picked)?.then_some(picked));
    }
    for i in from..cands.len() {
        chosen.push(i);
        if let Some(found) = combos_rec(cands, size, i + 1, chosen, accept)? {
            return Ok(Some(found));
        }
        chosen.pop();
    }
    Ok(None)
}

/// Seeded multigraph with `m` arcs sampled uniformly with replacement over
/// ordered pairs; self-loops and parallel arcs occur naturally.
pub fn random_graph(n: usize, m: usize, seed: u64) -> MultiDigraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let arcs: Vec<(VertexId, VertexId)> = (0..m)
        .map(|_| (rng.gen_range(0..n), rng.gen_range(0..n)))
        .collect();
    MultiDigraph::new(n, arcs).expect("sampled endpoints valid")
}

pub fn random_instance(
    n: usize,
    m: usize,
    seed: u64,
    problem: ProblemKind,
    mode: DeletionMode,
    k: usize,
    s: Option<usize>,
) -> ProblemInstance {
    ProblemInstance {
        graph: random_graph(n, m, seed),
        problem,
        budget: k,
        max_component: s,
        mode,
    }
}

/// Instance generated around a known valid deletion set.
#[derive(Debug, Clone)]
pub struct PlantedInstance {
    pub instance: ProblemInstance,
    pub planted: DeletionSet,
    pub certificate: String,
}

/// Builds a DAG of problem-valid components (cycles and singletons, sized at
/// most `s` for the bounded problem), then plants either k hub vertices with
/// arbitrary incident arcs or k extra arcs. Deleting the planted set always
/// satisfies the checker.
pub fn planted_instance(
    n: usize,
    k: usize,
    s: Option<usize>,
    seed: u64,
    problem: ProblemKind,
    mode: DeletionMode,
) -> PlantedInstance {
    assert!(n > k, "need at least one non-planted vertex");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let max_cycle = match (problem, s) {
        (ProblemKind::BoundedScc, Some(s)) => s,
        (ProblemKind::BoundedScc, None) => 1,
        (ProblemKind::OneOutRegular, _) => usize::MAX,
    };

    let hub_count = if mode == DeletionMode::Vertex { k } else { 0 };
    let mut ids: Vec<VertexId> = (0..n).collect();
    ids.shuffle(&mut rng);
    let hubs: Vec<VertexId> = ids[..hub_count].to_vec();
    let body: Vec<VertexId> = ids[hub_count..].to_vec();

    // partition the body into components in DAG order
    let mut arcs: Vec<(VertexId, VertexId)> = Vec::new();
    let mut components: Vec<Vec<VertexId>> = Vec::new();
    let mut rest = body.as_slice();
    while !rest.is_empty() {
        let want = rng
            .gen_range(1..=3usize.min(rest.len()))
            .min(max_cycle.max(1));
        let (comp, tail) = rest.split_at(want);
        if comp.len() >= 2 {
            for w in comp.windows(2) {
                arcs.push((w[0], w[1]));
            }
            arcs.push((comp[comp.len() - 1], comp[0]));
        }
        components.push(comp.to_vec());
        rest = tail;
    }
    // sparse forward arcs between components
    for i in 0..components.len() {
        for j in i + 1..components.len() {
            if rng.gen_bool(0.25) {
                let u = components[i][rng.gen_range(0..components[i].len())];
                let v = components[j][rng.gen_range(0..components[j].len())];
                arcs.push((u, v));
            }
        }
    }
    let certificate = format!(
        "dag of {} components, sizes {:?}",
        components.len(),
        components.iter().map(|c| c.len()).collect::<Vec<_>>()
    );

    let planted = match mode {
        DeletionMode::Vertex => {
            for &h in &hubs {
                for _ in 0..rng.gen_range(1..=3) {
                    arcs.push((h, ids[rng.gen_range(0..n)]));
                    arcs.push((ids[rng.gen_range(0..n)], h));
                }
            }
            DeletionSet::Vertices(hubs.iter().copied().collect())
        }
        DeletionMode::Arc => {
            let first_extra = arcs.len();
            for _ in 0..k {
                arcs.push((
                    body[rng.gen_range(0..body.len())],
                    body[rng.gen_range(0..body.len())],
                ));
            }
            DeletionSet::Arcs((first_extra..arcs.len()).collect())
        }
    };

    let graph = MultiDigraph::new(n, arcs).expect("generated endpoints valid");
    let instance = ProblemInstance {
        graph,
        problem,
        budget: k,
        max_component: s,
        mode,
    };
    debug_assert!(check_instance(&instance, &planted).unwrap());
    PlantedInstance {
        instance,
        planted,
        certificate,
    }
}
