//! Bounded Size Strong Component Vertex/Arc Deletion: delete at most k
//! vertices (arcs) so that every strong component of the rest has at most
//! s vertices. The s = 1 vertex case is directed feedback vertex set.
//!
//! The vertex solver runs iterative compression; each compression call
//! guesses the intersection with the old solution, builds candidate
//! component vectors for the surviving old-solution vertices, and reduces
//! each vector and ordering to a skew separator instance. The arc solver
//! reduces to the vertex solver by subdividing arcs and blowing vertices up
//! into cliques.

use std::collections::{BTreeMap, BTreeSet};

use crate::config::{SolveConfig, SolveError, SolveStats};
use crate::graph::{ArcId, GraphError, MultiDigraph, VertexId};
use crate::problem::{DeletionMode, DeletionSet, ProblemInstance, ProblemKind};
use crate::skew::{solve_skew, SkewSystem};

/// Instance of the bounded-size strong component deletion problem.
#[derive(Debug, Clone)]
pub struct BsscInstance {
    pub graph: MultiDigraph,
    pub budget: usize,
    pub max_component: usize,
    pub mode: DeletionMode,
}

impl BsscInstance {
    pub fn problem_instance(self) -> ProblemInstance {
        ProblemInstance {
            graph: self.graph,
            problem: ProblemKind::BoundedScc,
            budget: self.budget,
            max_component: Some(self.max_component),
            mode: self.mode,
        }
    }
}

/// True iff every strong component left by the deletion has at most `s`
/// vertices.
pub fn check_bssc(g: &MultiDigraph, s: usize, solution: &DeletionSet) -> Result<bool, GraphError> {
    let h = solution.apply(g)?;
    Ok(h.scc().max_component_size() <= s)
}

/// One candidate component per old-solution vertex: `sets[h]` is the guessed
/// strong component of t_h after deleting the new solution.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct CandidateVector {
    pub sets: Vec<BTreeSet<VertexId>>,
}

/// Shortest qualifying path for growing `c_set`: both endpoints in `c_set`,
/// 1..=cap interior vertices all outside it. Returns the interior sequence.
/// Deterministic: layered BFS in ascending vertex order.
fn qualifying_path(
    g: &MultiDigraph,
    c_set: &BTreeSet<VertexId>,
    cap: usize,
) -> Option<Vec<VertexId>> {
    if cap == 0 {
        return None;
    }
    let n = g.id_limit();
    let mut parent: Vec<Option<VertexId>> = vec![None; n];
    let mut dist = vec![usize::MAX; n];
    let mut layer: Vec<VertexId> = Vec::new();
    for &x in c_set {
        for w in g.out_neighbors(x) {
            if !c_set.contains(&w) && dist[w] == usize::MAX {
                dist[w] = 1;
                layer.push(w);
            }
        }
    }
    layer.sort_unstable();
    layer.dedup();
    let mut d = 1;
    while !layer.is_empty() && d <= cap {
        // closing arc back into the component?
        let terminal = layer
            .iter()
            .copied()
            .find(|&u| g.out_neighbors(u).any(|w| c_set.contains(&w)));
        if let Some(mut u) = terminal {
            let mut interior = vec![u];
            while let Some(p) = parent[u] {
                interior.push(p);
                u = p;
            }
            interior.reverse();
            return Some(interior);
        }
        let mut next: Vec<VertexId> = Vec::new();
        for &u in &layer {
            for w in g.out_neighbors(u) {
                if !c_set.contains(&w) && dist[w] == usize::MAX {
                    dist[w] = d + 1;
                    parent[w] = Some(u);
                    next.push(w);
                }
            }
        }
        next.sort_unstable();
        next.dedup();
        layer = next;
        d += 1;
    }
    None
}

/// Enumerates candidate vectors for the labeled old-solution vertices
/// `t_list`, with deletion budget `k` and component bound `s`.
///
/// Branching state is shared across all positions: a qualifying path for the
/// first growable position either donates one interior vertex to the deleted
/// set (removing it from the working graph) or is absorbed whole into the
/// candidate set. Vectors violating the overlap invariant are pruned; the
/// result is duplicate-free and contains at most (ks + s - 1)! vectors.
pub fn construct_candidate_vectors(
    g: &MultiDigraph,
    t_list: &[VertexId],
    k: usize,
    s: usize,
    stats: &mut SolveStats,
) -> Vec<CandidateVector> {
    let mut sets: Vec<BTreeSet<VertexId>> =
        t_list.iter().map(|&t| [t].into_iter().collect()).collect();
    let t_set: BTreeSet<VertexId> = t_list.iter().copied().collect();
    let mut out: BTreeSet<Vec<BTreeSet<VertexId>>> = BTreeSet::new();
    candidate_rec(g, &t_set, &mut sets, k, s, &mut out, stats);
    out.into_iter()
        .map(|sets| CandidateVector { sets })
        .collect()
}

fn candidate_rec(
    g: &MultiDigraph,
    t_set: &BTreeSet<VertexId>,
    sets: &mut Vec<BTreeSet<VertexId>>,
    budget: usize,
    s: usize,
    out: &mut BTreeSet<Vec<BTreeSet<VertexId>>>,
    stats: &mut SolveStats,
) {
    stats.nodes += 1;
    let found = sets
        .iter()
        .enumerate()
        .find_map(|(h, c)| qualifying_path(g, c, s - c.len()).map(|p| (h, p)));
    let Some((h, interior)) = found else {
        // leaf: overlapping sets must be identical
        for (a, sa) in sets.iter().enumerate() {
            for sb in sets.iter().skip(a + 1) {
                if sa != sb && !sa.is_disjoint(sb) {
                    return;
                }
            }
        }
        debug_assert!(sets.iter().all(|c| {
            let induced = g.induced(c);
            induced.scc().len() == 1
        }));
        out.insert(sets.clone());
        return;
    };

    // branch 1: one interior vertex joins the deletion set
    if budget > 0 {
        let committed: BTreeSet<VertexId> = sets.iter().flatten().copied().collect();
        for &u in interior
            .iter()
            .filter(|u| !t_set.contains(u) && !committed.contains(u))
        {
            let g2 = g.delete_vertices([u]).expect("interior vertex live");
            candidate_rec(&g2, t_set, sets, budget - 1, s, out, stats);
        }
    }
    // branch 2: the whole path is absorbed into the candidate set
    let added: Vec<VertexId> = interior
        .iter()
        .copied()
        .filter(|u| !sets[h].contains(u))
        .collect();
    sets[h].extend(added.iter().copied());
    candidate_rec(g, t_set, sets, budget, s, out, stats);
    for u in added {
        sets[h].remove(&u);
    }
}

/// One representative old-solution vertex per unique candidate set: the
/// smallest-labeled member, consistent across equal sets. Returned in label
/// order.
pub fn representatives(vector: &CandidateVector, t_list: &[VertexId]) -> Vec<VertexId> {
    let mut seen: BTreeSet<&BTreeSet<VertexId>> = BTreeSet::new();
    let mut reps = Vec::new();
    for set in &vector.sets {
        if seen.insert(set) {
            let rep = t_list
                .iter()
                .copied()
                .find(|t| set.contains(t))
                .expect("t_h in C_h");
            if !reps.contains(&rep) {
                reps.push(rep);
            }
        }
    }
    reps
}

/// The graph of a skew reduction: every unique candidate set replaced by an
/// in-vertex t+ and an out-vertex t-.
#[derive(Debug, Clone)]
pub struct SplitGraph {
    pub graph: MultiDigraph,
    pub plus_of: BTreeMap<VertexId, VertexId>,
    pub minus_of: BTreeMap<VertexId, VertexId>,
    /// Plain split-graph vertices back to original vertices.
    pub back_map: BTreeMap<VertexId, VertexId>,
}

/// Builds the skew separator instance for one candidate vector and one
/// permutation of its representatives: sources are the out-vertices and
/// sinks the in-vertices in permutation order, budget `k`.
pub fn build_skew_system(
    g: &MultiDigraph,
    vector: &CandidateVector,
    t_list: &[VertexId],
    perm: &[VertexId],
    k: usize,
) -> (SkewSystem, SplitGraph) {
    let reps = representatives(vector, t_list);
    let mut rep_of_set: BTreeMap<&BTreeSet<VertexId>, VertexId> = BTreeMap::new();
    for set in &vector.sets {
        if !rep_of_set.contains_key(set) {
            let rep = t_list
                .iter()
                .copied()
                .find(|t| set.contains(t))
                .expect("t_h in C_h");
            rep_of_set.insert(set, rep);
        }
    }
    let mut owner: BTreeMap<VertexId, VertexId> = BTreeMap::new(); // vertex -> rep
    for (set, &rep) in &rep_of_set {
        for &v in set.iter() {
            owner.insert(v, rep);
        }
    }

    let mut next_id = 0;
    let mut back_map = BTreeMap::new();
    let mut plain_id: BTreeMap<VertexId, VertexId> = BTreeMap::new();
    for v in g.vertices() {
        if !owner.contains_key(&v) {
            plain_id.insert(v, next_id);
            back_map.insert(next_id, v);
            next_id += 1;
        }
    }
    let mut minus_of = BTreeMap::new();
    let mut plus_of = BTreeMap::new();
    for &rep in &reps {
        minus_of.insert(rep, next_id);
        plus_of.insert(rep, next_id + 1);
        next_id += 2;
    }

    let mut arcs: BTreeSet<(VertexId, VertexId)> = BTreeSet::new();
    for (_, u, v) in g.arcs() {
        let tail = match owner.get(&u) {
            Some(rep) => minus_of[rep],
            None => plain_id[&u],
        };
        let head = match owner.get(&v) {
            Some(rep) => plus_of[rep],
            None => plain_id[&v],
        };
        if let (Some(ru), Some(rv)) = (owner.get(&u), owner.get(&v)) {
            if ru == rv {
                continue; // arc inside one candidate set
            }
        }
        arcs.insert((tail, head));
    }
    let graph = MultiDigraph::new(next_id, arcs.into_iter().collect()).expect("valid ids");

    let sources: Vec<BTreeSet<VertexId>> = perm
        .iter()
        .map(|t| [minus_of[t]].into_iter().collect())
        .collect();
    let sinks: Vec<BTreeSet<VertexId>> = perm
        .iter()
        .map(|t| [plus_of[t]].into_iter().collect())
        .collect();
    let split = SplitGraph {
        graph: graph.clone(),
        plus_of,
        minus_of,
        back_map,
    };
    (
        SkewSystem {
            graph,
            sources,
            sinks,
            budget: k,
        },
        split,
    )
}

/// A direct arc from a source to a sink it must be cut from dooms the system.
fn trivially_infeasible(sys: &SkewSystem) -> bool {
    for i in 0..sys.group_count() {
        for j in 0..=i {
            for &x in &sys.sources[i] {
                for &y in &sys.sinks[j] {
                    if sys.graph.is_vertex(x) && sys.graph.out_neighbors(x).any(|w| w == y) {
                        return true;
                    }
                }
            }
        }
    }
    false
}

fn permutations_lex(items: &[VertexId]) -> Vec<Vec<VertexId>> {
    if items.is_empty() {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for (i, &x) in items.iter().enumerate() {
        let mut rest: Vec<VertexId> = items.to_vec();
        rest.remove(i);
        for mut tail in permutations_lex(&rest) {
            let mut p = vec![x];
            p.append(&mut tail);
            out.push(p);
        }
    }
    out
}

/// Exact decision-plus-witness for the vertex problem: a vertex set of size
/// at most `k` after whose deletion every strong component has at most `s`
/// vertices, or `None` if no such set exists.
pub fn solve_bsscvd(
    g: &MultiDigraph,
    k: usize,
    s: usize,
    cfg: &SolveConfig,
    stats: &mut SolveStats,
) -> Result<Option<BTreeSet<VertexId>>, SolveError> {
    assert!(s >= 1, "component bound must be at least 1");
    let mut live: BTreeSet<VertexId> = BTreeSet::new();
    let mut sol: BTreeSet<VertexId> = BTreeSet::new();
    for v in g.vertices() {
        live.insert(v);
        let gi = g.induced(&live);
        if check_bssc(&gi, s, &DeletionSet::Vertices(sol.clone()))? {
            continue;
        }
        let mut t = sol.clone();
        t.insert(v);
        if t.len() <= k {
            sol = t;
            continue;
        }
        match compress_bssc(&gi, &t, k, s, cfg, stats)? {
            Some(s2) => sol = s2,
            None => return Ok(None),
        }
    }
    debug_assert!(check_bssc(g, s, &DeletionSet::Vertices(sol.clone()))?);
    Ok(Some(sol))
}

/// Compression step: given a solution `t` of size k+1 for `g`, finds a
/// solution of size at most k or proves none exists.
fn compress_bssc(
    g: &MultiDigraph,
    t: &BTreeSet<VertexId>,
    k: usize,
    s: usize,
    cfg: &SolveConfig,
    stats: &mut SolveStats,
) -> Result<Option<BTreeSet<VertexId>>, SolveError> {
    debug_assert_eq!(t.len(), k + 1);
    // cheap exit: dropping a single old-solution vertex may already work
    for drop in t {
        let mut cand = t.clone();
        cand.remove(drop);
        if check_bssc(g, s, &DeletionSet::Vertices(cand.clone()))? {
            return Ok(Some(cand));
        }
    }

    let t_sorted: Vec<VertexId> = t.iter().copied().collect();
    for mask in 0usize..(1 << t_sorted.len()) {
        let t_prime: BTreeSet<VertexId> = t_sorted
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &v)| v)
            .collect();
        if t_prime.len() > k {
            continue;
        }
        let k_d = k - t_prime.len();
        let g_d = g.delete_vertices(t_prime.iter().copied())?;
        let t_d: Vec<VertexId> = t_sorted
            .iter()
            .copied()
            .filter(|v| !t_prime.contains(v))
            .collect();
        let t_d_set: BTreeSet<VertexId> = t_d.iter().copied().collect();
        // no disjoint solution can coexist with an oversized component in G[T]
        if g_d.induced(&t_d_set).scc().max_component_size() > s {
            continue;
        }
        debug_assert!(
            g_d.delete_vertices(t_d.iter().copied())?
                .scc()
                .max_component_size()
                <= s
        );

        for vector in construct_candidate_vectors(&g_d, &t_d, k_d, s, stats) {
            let reps = representatives(&vector, &t_d);
            for perm in permutations_lex(&reps) {
                let (sys, split) = build_skew_system(&g_d, &vector, &t_d, &perm, k_d);
                if trivially_infeasible(&sys) {
                    continue;
                }
                if let Some(sep) = solve_skew(&sys, cfg.skew_backend, stats) {
                    let mut sol: BTreeSet<VertexId> =
                        sep.iter().map(|v| split.back_map[v]).collect();
                    sol.extend(t_prime.iter().copied());
                    // the skew reduction is sound, but never emit unchecked
                    assert!(
                        check_bssc(g, s, &DeletionSet::Vertices(sol.clone()))?,
                        "skew witness failed verification"
                    );
                    return Ok(Some(sol));
                }
            }
        }
    }
    Ok(None)
}

/// Arc-to-vertex transformation: subdivide every arc and blow every vertex
/// up into a bidirected clique of size (k+1)s(s-1) + k + 1. Budget stays k;
/// the component bound becomes (k+1)s^3.
pub struct ArcToVertex {
    pub instance: BsscInstance,
    /// Original arc id per subdivision vertex; `None` for clique vertices.
    pub arc_of_vertex: Vec<Option<ArcId>>,
}

/// Expects parallel arcs already capped at k+1 per ordered pair.
pub fn transform_arc_to_vertex(g: &MultiDigraph, k: usize, s: usize) -> ArcToVertex {
    let s_a = (k + 1) * s * (s - 1);
    let clique = s_a + k + 1;
    let live_vertices: Vec<VertexId> = g.vertices().collect();
    let live_arcs: Vec<(ArcId, VertexId, VertexId)> = g.arcs().collect();
    let n_new = live_vertices.len() * clique + live_arcs.len();
    let mut arc_of_vertex: Vec<Option<ArcId>> = vec![None; n_new];
    let block: BTreeMap<VertexId, usize> = live_vertices
        .iter()
        .enumerate()
        .map(|(i, &v)| (v, i * clique))
        .collect();
    let sub_base = live_vertices.len() * clique;

    let mut arcs: Vec<(VertexId, VertexId)> = Vec::new();
    for &v in &live_vertices {
        let b = block[&v];
        for i in 0..clique {
            for j in 0..clique {
                if i != j {
                    arcs.push((b + i, b + j));
                }
            }
        }
    }
    for (pos, &(id, u, v)) in live_arcs.iter().enumerate() {
        let ua = sub_base + pos;
        arc_of_vertex[ua] = Some(id);
        for i in 0..clique {
            arcs.push((block[&u] + i, ua));
            arcs.push((ua, block[&v] + i));
        }
    }
    let graph = MultiDigraph::new(n_new, arcs).expect("valid construction");
    ArcToVertex {
        instance: BsscInstance {
            graph,
            budget: k,
            max_component: (k + 1) * s * s * s,
            mode: DeletionMode::Vertex,
        },
        arc_of_vertex,
    }
}

/// Vertex-to-arc transformation: split v into v- -> v+ and join neighbors
/// with k+1 parallel arcs. Budget stays k; the bound becomes 2s.
pub struct VertexToArc {
    pub instance: BsscInstance,
    /// Original vertex per split arc id; `None` for the parallel bundles.
    pub vertex_of_arc: Vec<Option<VertexId>>,
}

pub fn transform_vertex_to_arc(g: &MultiDigraph, k: usize, s: usize) -> VertexToArc {
    let live_vertices: Vec<VertexId> = g.vertices().collect();
    let idx: BTreeMap<VertexId, usize> = live_vertices
        .iter()
        .enumerate()
        .map(|(i, &v)| (v, i))
        .collect();
    let minus = |v: VertexId| 2 * idx[&v];
    let plus = |v: VertexId| 2 * idx[&v] + 1;

    let mut arcs: Vec<(VertexId, VertexId)> = Vec::new();
    let mut vertex_of_arc: Vec<Option<VertexId>> = Vec::new();
    for &v in &live_vertices {
        arcs.push((minus(v), plus(v)));
        vertex_of_arc.push(Some(v));
    }
    for &v in &live_vertices {
        let in_neighbors: BTreeSet<VertexId> = g.in_neighbors(v).collect();
        for u in in_neighbors {
            for _ in 0..=k {
                arcs.push((plus(u), minus(v)));
                vertex_of_arc.push(None);
            }
        }
    }
    let graph = MultiDigraph::new(2 * live_vertices.len(), arcs).expect("valid construction");
    VertexToArc {
        instance: BsscInstance {
            graph,
            budget: k,
            max_component: 2 * s,
            mode: DeletionMode::Arc,
        },
        vertex_of_arc,
    }
}

/// Arc version: drop self-loops (they never change a strong component's
/// size, and the clique construction miscounts them), cap multiplicities,
/// transform to the vertex problem, solve, and map subdivision vertices
/// back to arcs.
pub fn solve_bsscad(
    g: &MultiDigraph,
    k: usize,
    s: usize,
    cfg: &SolveConfig,
    stats: &mut SolveStats,
) -> Result<Option<BTreeSet<ArcId>>, SolveError> {
    let loops: Vec<ArcId> = g
        .arcs()
        .filter(|&(_, u, v)| u == v)
        .map(|(id, _, _)| id)
        .collect();
    let capped = g.delete_arcs(loops)?.cap_multiplicity(k);
    let t = transform_arc_to_vertex(&capped, k, s);
    let Some(inner) = solve_bsscvd(&t.instance.graph, k, t.instance.max_component, cfg, stats)?
    else {
        return Ok(None);
    };
    let sol: BTreeSet<ArcId> = inner.iter().filter_map(|&v| t.arc_of_vertex[v]).collect();
    assert!(
        check_bssc(g, s, &DeletionSet::Arcs(sol.clone()))?,
        "arc witness failed verification"
    );
    Ok(Some(sol))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::skew::SkewBackend;

    fn g(n: usize, arcs: &[(usize, usize)]) -> MultiDigraph {
        MultiDigraph::new(n, arcs.to_vec()).unwrap()
    }

    fn set(vs: &[usize]) -> BTreeSet<usize> {
        vs.iter().copied().collect()
    }

    fn bidirected_k4() -> MultiDigraph {
        let mut arcs = Vec::new();
        for u in 0..4 {
            for v in 0..4 {
                if u != v {
                    arcs.push((u, v));
                }
            }
        }
        g(4, &arcs)
    }

    fn verts(s: &BTreeSet<usize>) -> DeletionSet {
        DeletionSet::Vertices(s.clone())
    }

    #[test]
    fn check_k4_two_deletions_suffice_one_does_not() {
        let k4 = bidirected_k4();
        assert!(check_bssc(&k4, 2, &verts(&set(&[0, 1]))).unwrap());
        assert!(check_bssc(&k4, 2, &verts(&set(&[2, 3]))).unwrap());
        assert!(!check_bssc(&k4, 2, &verts(&set(&[0]))).unwrap());
    }

    #[test]
    fn check_dag_is_fine_at_s1() {
        let dag = g(3, &[(0, 1), (0, 2), (1, 2)]);
        assert!(check_bssc(&dag, 1, &verts(&set(&[]))).unwrap());
    }

    #[test]
    fn candidates_s1_single_singleton_vector() {
        let gr = g(4, &[(0, 1), (1, 0), (1, 2), (2, 3)]);
        let vecs = construct_candidate_vectors(&gr, &[0, 2], 1, 1, &mut SolveStats::default());
        assert_eq!(vecs.len(), 1);
        assert_eq!(vecs[0].sets, vec![set(&[0]), set(&[2])]);
    }

    #[test]
    fn candidates_two_cycle_with_spare_vertex() {
        // t1 = 0 in a 2-cycle with u = 1; t2 = 2 isolated; k = 1, s = 2.
        let gr = g(3, &[(0, 1), (1, 0)]);
        let vecs = construct_candidate_vectors(&gr, &[0, 2], 1, 2, &mut SolveStats::default());
        let got: BTreeSet<Vec<BTreeSet<usize>>> = vecs.into_iter().map(|v| v.sets).collect();
        let want: BTreeSet<Vec<BTreeSet<usize>>> =
            [vec![set(&[0]), set(&[2])], vec![set(&[0, 1]), set(&[2])]]
                .into_iter()
                .collect();
        assert_eq!(got, want);
        assert!(got.len() <= 6); // (ks + s - 1)! = 3!
    }

    #[test]
    fn skew_system_from_singleton_vector() {
        // path 3 -> 0 -> 4 -> 1 with T = {0, 1}
        let gr = g(5, &[(3, 0), (0, 4), (4, 1)]);
        let vector = CandidateVector {
            sets: vec![set(&[0]), set(&[1])],
        };
        let (sys, split) = build_skew_system(&gr, &vector, &[0, 1], &[0, 1], 1);
        // plain vertices 2,3,4 come first; arcs attach to the split pairs
        assert_eq!(sys.graph.num_vertices(), 3 + 4);
        let m0 = split.minus_of[&0];
        let p0 = split.plus_of[&0];
        let p1 = split.plus_of[&1];
        let arcs: BTreeSet<(usize, usize)> = sys.graph.arcs().map(|(_, u, v)| (u, v)).collect();
        let v3 = *split.back_map.iter().find(|(_, &o)| o == 3).unwrap().0;
        let v4 = *split.back_map.iter().find(|(_, &o)| o == 4).unwrap().0;
        assert!(arcs.contains(&(v3, p0)));
        assert!(arcs.contains(&(m0, v4)));
        assert!(arcs.contains(&(v4, p1)));
    }

    #[test]
    fn skew_system_merged_two_cycle_has_detached_terminals() {
        // 2-cycle 0 <-> 1 with C = {0, 1}: t+ has no in-arcs, t- no out-arcs
        let gr = g(2, &[(0, 1), (1, 0)]);
        let vector = CandidateVector {
            sets: vec![set(&[0, 1])],
        };
        let (sys, split) = build_skew_system(&gr, &vector, &[0], &[0], 1);
        assert_eq!(sys.graph.num_arcs(), 0);
        assert_eq!(split.back_map.len(), 0);
        let got = solve_skew(&sys, SkewBackend::Brute, &mut SolveStats::default());
        assert_eq!(got, Some(set(&[])));
    }

    #[test]
    fn skew_system_intercomponent_arcs_are_minus_to_plus() {
        // components {0} and {1}, plus arc 0 -> 1
        let gr = g(2, &[(0, 1)]);
        let vector = CandidateVector {
            sets: vec![set(&[0]), set(&[1])],
        };
        let (sys, split) = build_skew_system(&gr, &vector, &[0, 1], &[0, 1], 0);
        let arcs: Vec<(usize, usize)> = sys.graph.arcs().map(|(_, u, v)| (u, v)).collect();
        assert_eq!(arcs, vec![(split.minus_of[&0], split.plus_of[&1])]);
    }

    #[test]
    fn solve_three_cycle_dfvs() {
        let c3 = g(3, &[(0, 1), (1, 2), (2, 0)]);
        let cfg = SolveConfig::default();
        let sol = solve_bsscvd(&c3, 1, 1, &cfg, &mut SolveStats::default())
            .unwrap()
            .unwrap();
        assert_eq!(sol.len(), 1);
        assert!(check_bssc(&c3, 1, &verts(&sol)).unwrap());
    }

    #[test]
    fn solve_k4_feasibility_boundary() {
        let k4 = bidirected_k4();
        let cfg = SolveConfig::default();
        let sol = solve_bsscvd(&k4, 2, 2, &cfg, &mut SolveStats::default()).unwrap();
        assert!(sol.is_some());
        assert!(check_bssc(&k4, 2, &verts(&sol.unwrap())).unwrap());
        assert!(solve_bsscvd(&k4, 1, 2, &cfg, &mut SolveStats::default())
            .unwrap()
            .is_none());
    }

    #[test]
    fn solve_dag_needs_nothing() {
        let dag = g(4, &[(0, 1), (1, 2), (1, 3)]);
        let cfg = SolveConfig::default();
        let sol = solve_bsscvd(&dag, 0, 1, &cfg, &mut SolveStats::default())
            .unwrap()
            .unwrap();
        assert!(sol.is_empty());
    }

    #[test]
    fn arc_to_vertex_arithmetic() {
        // n = 2 with a 2-cycle, k = 1, s = 1: cliques of size 2, 6 vertices
        let gr = g(2, &[(0, 1), (1, 0)]);
        let t = transform_arc_to_vertex(&gr, 1, 1);
        assert_eq!(t.instance.graph.num_vertices(), 6);
        assert_eq!(t.instance.max_component, 2);
        assert_eq!(t.instance.budget, 1);
        // s' formula for k = 1, s = 2
        let t2 = transform_arc_to_vertex(&gr, 1, 2);
        assert_eq!(t2.instance.max_component, 16);
    }

    #[test]
    fn solve_arc_three_cycle() {
        let c3 = g(3, &[(0, 1), (1, 2), (2, 0)]);
        let cfg = SolveConfig::default();
        let sol = solve_bsscad(&c3, 1, 1, &cfg, &mut SolveStats::default())
            .unwrap()
            .unwrap();
        assert_eq!(sol.len(), 1);
    }

    #[test]
    fn solve_arc_two_disjoint_triangles() {
        let gr = g(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]);
        let cfg = SolveConfig::default();
        assert!(solve_bsscad(&gr, 1, 1, &cfg, &mut SolveStats::default())
            .unwrap()
            .is_none());
        let sol = solve_bsscad(&gr, 2, 1, &cfg, &mut SolveStats::default()).unwrap();
        assert!(sol.is_some());
    }

    #[test]
    fn solve_arc_parallel_two_cycle() {
        // 2 parallel arcs each way: one deletion always leaves a cycle, so
        // both copies of one pair must go at s = 1
        let gr = g(2, &[(0, 1), (0, 1), (1, 0), (1, 0)]);
        let cfg = SolveConfig::default();
        assert!(solve_bsscad(&gr, 1, 1, &cfg, &mut SolveStats::default())
            .unwrap()
            .is_none());
        let sol = solve_bsscad(&gr, 2, 1, &cfg, &mut SolveStats::default()).unwrap();
        assert!(sol.is_some());
        // with a single return arc, deleting it alone suffices
        let gr2 = g(2, &[(0, 1), (0, 1), (1, 0)]);
        let sol2 = solve_bsscad(&gr2, 1, 1, &cfg, &mut SolveStats::default())
            .unwrap()
            .unwrap();
        assert_eq!(sol2.len(), 1);
    }

    #[test]
    fn vertex_to_arc_shape() {
        // single vertex with a self-loop: v- -> v+ plus k+1 parallel v+ -> v-
        let gr = g(1, &[(0, 0)]);
        let t = transform_vertex_to_arc(&gr, 2, 3);
        assert_eq!(t.instance.graph.num_vertices(), 2);
        assert_eq!(t.instance.graph.multiplicity(0, 1), 1);
        assert_eq!(t.instance.graph.multiplicity(1, 0), 3);
        assert_eq!(t.instance.max_component, 6);
        // |V(G')| = 2n always
        let gr2 = g(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        assert_eq!(
            transform_vertex_to_arc(&gr2, 1, 2)
                .instance
                .graph
                .num_vertices(),
            8
        );
    }
}
