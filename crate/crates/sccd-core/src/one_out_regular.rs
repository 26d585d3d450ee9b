//! 1-Out-Regular Vertex/Arc Deletion: delete at most k vertices (arcs) so
//! that every non-trivial strong component of the rest is an induced
//! directed cycle.
//!
//! The vertex solver runs iterative compression; each compression call
//! guesses the intersection with the old solution, then covers the shadow of
//! a hypothetical disjoint solution, reduces by the torso operation, and
//! recovers strong components last-to-first along the topological order.
//! The arc solver reduces to the vertex solver on the directed line graph.

use std::collections::{BTreeSet, HashMap, HashSet};

use crate::config::{SolveConfig, SolveError, SolveStats};
use crate::graph::{ArcId, GraphError, MultiDigraph, VertexId};
use crate::problem::{DeletionMode, DeletionSet, ProblemInstance, ProblemKind};
use crate::separators::build_covering_family_counted;

#[derive(Debug, Clone)]
pub struct OorInstance {
    pub graph: MultiDigraph,
    pub budget: usize,
    pub mode: DeletionMode,
}

impl OorInstance {
    pub fn problem_instance(self) -> ProblemInstance {
        ProblemInstance {
            graph: self.graph,
            problem: ProblemKind::OneOutRegular,
            budget: self.budget,
            max_component: None,
            mode: self.mode,
        }
    }
}

/// A strong component is acceptable when it is a single vertex (self-loops
/// on singletons are tolerated) or an induced directed cycle: within the
/// component every vertex has exactly one out-arc and one in-arc, counting
/// parallel arcs and loops.
fn clean_graph(h: &MultiDigraph) -> bool {
    let d = h.scc();
    for comp in &d.components {
        if comp.len() == 1 {
            continue;
        }
        let inside: BTreeSet<VertexId> = comp.iter().copied().collect();
        for &v in comp {
            let out = h.out_neighbors(v).filter(|w| inside.contains(w)).count();
            let inn = h.in_neighbors(v).filter(|w| inside.contains(w)).count();
            if out != 1 || inn != 1 {
                return false;
            }
        }
    }
    true
}

/// True iff every strong component left by the deletion is trivial or an
/// induced directed cycle.
pub fn check_oor(g: &MultiDigraph, solution: &DeletionSet) -> Result<bool, GraphError> {
    Ok(clean_graph(&solution.apply(g)?))
}

/// True iff `g[w]` contains a strong subgraph that is not a simple directed
/// cycle; used to reject covering sets that would overlap any solution.
pub fn contains_forbidden(g: &MultiDigraph, w: &BTreeSet<VertexId>) -> Result<bool, GraphError> {
    for &v in w {
        if !g.is_vertex(v) {
            return Err(GraphError::InvalidVertex(v));
        }
    }
    Ok(!clean_graph(&g.induced(w)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArcQuality {
    Good,
    Bad,
}

/// Digraph on the vertices outside Z whose arcs stand for paths with interior
/// in Z. An arc is good when that path is unique at the arc-sequence level
/// and meets no cycle of G[Z].
#[derive(Debug, Clone)]
pub struct TorsoGraph {
    pub graph: MultiDigraph,
    /// Quality per arc id of `graph`.
    pub quality: Vec<ArcQuality>,
}

impl TorsoGraph {
    fn arc_between(&self, u: VertexId, v: VertexId) -> Option<ArcId> {
        self.graph
            .out_arcs(u)
            .find(|&a| self.graph.arc_ends(a).unwrap().1 == v)
    }
}

/// Builds torso(G, Z). For each ordered pair (u, v) of surviving vertices
/// the interior candidates are the Z-vertices both reachable from u and
/// reaching v inside Z; if any of them lies on a cycle of G[Z] the arc is
/// bad, otherwise the interior is acyclic and paths are counted exactly by
/// dynamic programming over arc multiplicities, saturated at two.
pub fn torso(g: &MultiDigraph, z: &BTreeSet<VertexId>) -> Result<TorsoGraph, GraphError> {
    for &v in z {
        if !g.is_vertex(v) {
            return Err(GraphError::InvalidVertex(v));
        }
    }
    let torso_vertices: Vec<VertexId> = g.vertices().filter(|v| !z.contains(v)).collect();
    let gz = g.induced(z);
    let mut on_z_cycle: BTreeSet<VertexId> = BTreeSet::new();
    for comp in &gz.scc().components {
        if comp.len() >= 2 {
            on_z_cycle.extend(comp.iter().copied());
        }
    }
    for (_, u, v) in gz.arcs() {
        if u == v {
            on_z_cycle.insert(u);
        }
    }

    // forward reach into Z from u, backward reach into Z toward v
    let reach_from = |u: VertexId| -> BTreeSet<VertexId> {
        let mut seen = BTreeSet::new();
        let mut stack: Vec<VertexId> = g.out_neighbors(u).filter(|w| z.contains(w)).collect();
        while let Some(w) = stack.pop() {
            if seen.insert(w) {
                stack.extend(g.out_neighbors(w).filter(|x| z.contains(x)));
            }
        }
        seen
    };
    let reach_to = |v: VertexId| -> BTreeSet<VertexId> {
        let mut seen = BTreeSet::new();
        let mut stack: Vec<VertexId> = g.in_neighbors(v).filter(|w| z.contains(w)).collect();
        while let Some(w) = stack.pop() {
            if seen.insert(w) {
                stack.extend(g.in_neighbors(w).filter(|x| z.contains(x)));
            }
        }
        seen
    };
    let fwd: HashMap<VertexId, BTreeSet<VertexId>> =
        torso_vertices.iter().map(|&u| (u, reach_from(u))).collect();
    let bwd: HashMap<VertexId, BTreeSet<VertexId>> =
        torso_vertices.iter().map(|&v| (v, reach_to(v))).collect();

    let mut arcs: Vec<(VertexId, VertexId)> = Vec::new();
    let mut quality: Vec<ArcQuality> = Vec::new();
    for &u in &torso_vertices {
        for &v in &torso_vertices {
            let interior: BTreeSet<VertexId> = fwd[&u].intersection(&bwd[&v]).copied().collect();
            let direct = g.multiplicity(u, v);
            if interior.is_empty() && direct == 0 {
                continue;
            }
            if interior.iter().any(|w| on_z_cycle.contains(w)) {
                arcs.push((u, v));
                quality.push(ArcQuality::Bad);
                continue;
            }
            // interior is acyclic: count u -> v arc sequences, saturating at 2
            let order: Vec<VertexId> = topo_of_acyclic(g, &interior);
            let mut ways: HashMap<VertexId, usize> = HashMap::new();
            for &w in &interior {
                ways.insert(w, g.multiplicity(u, w).min(2));
            }
            for &w in &order {
                let base = ways[&w];
                if base == 0 {
                    continue;
                }
                let outs: Vec<VertexId> = g
                    .out_neighbors(w)
                    .filter(|x| interior.contains(x))
                    .collect();
                for x in outs {
                    let e = ways.get_mut(&x).unwrap();
                    *e = (*e + base).min(2);
                }
            }
            let mut total = direct.min(2);
            for &w in &interior {
                total = (total + ways[&w] * g.multiplicity(w, v)).min(2);
            }
            debug_assert!(total >= 1);
            arcs.push((u, v));
            quality.push(if total == 1 {
                ArcQuality::Good
            } else {
                ArcQuality::Bad
            });
        }
    }

    let keep: BTreeSet<VertexId> = torso_vertices.iter().copied().collect();
    let full = MultiDigraph::new(g.id_limit(), arcs)?;
    let masked = full.induced(&keep);
    Ok(TorsoGraph {
        graph: masked,
        quality,
    })
}

fn topo_of_acyclic(g: &MultiDigraph, inside: &BTreeSet<VertexId>) -> Vec<VertexId> {
    let mut indeg: HashMap<VertexId, usize> = inside
        .iter()
        .map(|&v| (v, g.in_neighbors(v).filter(|u| inside.contains(u)).count()))
        .collect();
    let mut ready: BTreeSet<VertexId> = inside.iter().copied().filter(|v| indeg[v] == 0).collect();
    let mut order = Vec::with_capacity(inside.len());
    while let Some(&v) = ready.iter().next() {
        ready.remove(&v);
        order.push(v);
        for w in g.out_neighbors(v).filter(|w| inside.contains(w)) {
            let e = indeg.get_mut(&w).unwrap();
            *e -= 1;
            if *e == 0 {
                ready.insert(w);
            }
        }
    }
    debug_assert_eq!(order.len(), inside.len());
    order
}

/// True iff the torso graph minus `deleted` has a strong component that is
/// neither trivial nor a cycle made solely of good arcs.
pub fn detect_fbad(tg: &TorsoGraph, deleted: &BTreeSet<VertexId>) -> Result<bool, GraphError> {
    let h = tg.graph.delete_vertices(deleted.iter().copied())?;
    let d = h.scc();
    for comp in &d.components {
        let inside: BTreeSet<VertexId> = comp.iter().copied().collect();
        if comp.len() == 1 {
            let v = comp[0];
            for a in h.out_arcs(v) {
                if h.arc_ends(a).unwrap().1 == v && tg.quality[a] == ArcQuality::Bad {
                    return Ok(true);
                }
            }
            continue;
        }
        for &v in comp {
            let mut out_within = 0;
            for a in h.out_arcs(v) {
                let (_, head) = h.arc_ends(a).unwrap();
                if inside.contains(&head) {
                    out_within += 1;
                    if head == v || tg.quality[a] == ArcQuality::Bad {
                        return Ok(true);
                    }
                }
            }
            let in_within = h.in_neighbors(v).filter(|u| inside.contains(u)).count();
            if out_within != 1 || in_within != 1 {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// All ways the last strong component (in topological order) could look,
/// given that it must contain a vertex of `t_set` and have every escaping
/// out-neighbor deleted. Each branch is a (component, forced deletions)
/// pair; deletions avoid `forbidden` and cost at most `k`.
///
/// A trivial component {t} forces all out-neighbors of t out; a non-trivial
/// one is walked from t along good arcs, deleting the out-neighbors not on
/// the walk, until the walk closes back at t.
pub fn recover_last_component(
    tg: &TorsoGraph,
    t_set: &BTreeSet<VertexId>,
    forbidden: &BTreeSet<VertexId>,
    k: usize,
) -> Vec<(BTreeSet<VertexId>, BTreeSet<VertexId>)> {
    let mut out: BTreeSet<(BTreeSet<VertexId>, BTreeSet<VertexId>)> = BTreeSet::new();
    let heads = |v: VertexId| -> BTreeSet<VertexId> { tg.graph.out_neighbors(v).collect() };
    for &t in t_set.iter().filter(|&&t| tg.graph.is_vertex(t)) {
        // trivial: the component is {t} and every out-neighbor is deleted
        let d = heads(t);
        if !d.contains(&t) && d.len() <= k && d.iter().all(|w| !forbidden.contains(w)) {
            out.insert(([t].into_iter().collect(), d));
        }
        // non-trivial: walk the cycle
        let mut walk: Vec<VertexId> = vec![t];
        let mut walk_set: BTreeSet<VertexId> = [t].into_iter().collect();
        let mut dels: BTreeSet<VertexId> = BTreeSet::new();
        walk_rec(
            tg,
            t,
            t,
            &mut walk,
            &mut walk_set,
            &mut dels,
            forbidden,
            k,
            &mut out,
        );
    }
    out.into_iter().collect()
}

#[allow(clippy::too_many_arguments)]
fn walk_rec(
    tg: &TorsoGraph,
    t: VertexId,
    cur: VertexId,
    walk: &mut Vec<VertexId>,
    walk_set: &mut BTreeSet<VertexId>,
    dels: &mut BTreeSet<VertexId>,
    forbidden: &BTreeSet<VertexId>,
    k: usize,
    out: &mut BTreeSet<(BTreeSet<VertexId>, BTreeSet<VertexId>)>,
) {
    let heads: BTreeSet<VertexId> = tg.graph.out_neighbors(cur).collect();
    for &succ in &heads {
        if succ != t && walk_set.contains(&succ) {
            continue;
        }
        if dels.contains(&succ) {
            continue;
        }
        let arc = tg.arc_between(cur, succ).expect("head implies arc");
        if tg.quality[arc] == ArcQuality::Bad {
            continue; // the walk arc must be good
        }
        let forced: BTreeSet<VertexId> = heads.iter().copied().filter(|&w| w != succ).collect();
        if forced
            .iter()
            .any(|w| forbidden.contains(w) || walk_set.contains(w))
        {
            continue;
        }
        let added: Vec<VertexId> = forced
            .iter()
            .copied()
            .filter(|w| !dels.contains(w))
            .collect();
        if dels.len() + added.len() > k {
            continue;
        }
        dels.extend(added.iter().copied());
        if succ == t {
            out.insert((walk_set.clone(), dels.clone()));
        } else {
            walk.push(succ);
            walk_set.insert(succ);
            walk_rec(tg, t, succ, walk, walk_set, dels, forbidden, k, out);
            walk.pop();
            walk_set.remove(&succ);
        }
        for w in added {
            dels.remove(&w);
        }
    }
}

type MemoKey = (Vec<u64>, Vec<u64>, usize);

fn mask_of(ids: impl Iterator<Item = VertexId>, words: usize) -> Vec<u64> {
    let mut mask = vec![0u64; words];
    for v in ids {
        mask[v / 64] |= 1 << (v % 64);
    }
    mask
}

/// Exact decision-plus-witness for the vertex problem.
pub fn solve_oorvd(
    g: &MultiDigraph,
    k: usize,
    cfg: &SolveConfig,
    stats: &mut SolveStats,
) -> Result<Option<BTreeSet<VertexId>>, SolveError> {
    // parallel self-loops never change a vertex-deletion verdict
    let norm = g.cap_self_loops();
    let mut live: BTreeSet<VertexId> = BTreeSet::new();
    let mut sol: BTreeSet<VertexId> = BTreeSet::new();
    for v in norm.vertices() {
        live.insert(v);
        let gi = norm.induced(&live);
        if check_oor(&gi, &DeletionSet::Vertices(sol.clone()))? {
            continue;
        }
        let mut t = sol.clone();
        t.insert(v);
        if t.len() <= k {
            sol = t;
            continue;
        }
        match compress_oor(&gi, &t, k, cfg, stats)? {
            Some(s2) => sol = s2,
            None => return Ok(None),
        }
    }
    assert!(
        check_oor(g, &DeletionSet::Vertices(sol.clone()))?,
        "vertex witness failed verification"
    );
    Ok(Some(sol))
}

fn compress_oor(
    g: &MultiDigraph,
    t: &BTreeSet<VertexId>,
    k: usize,
    cfg: &SolveConfig,
    stats: &mut SolveStats,
) -> Result<Option<BTreeSet<VertexId>>, SolveError> {
    debug_assert_eq!(t.len(), k + 1);
    // dropping one old-solution vertex may already work; this subsumes the
    // zero-out-degree observation
    for drop in t {
        let mut cand = t.clone();
        cand.remove(drop);
        if check_oor(g, &DeletionSet::Vertices(cand.clone()))? {
            return Ok(Some(cand));
        }
    }
    let t_sorted: Vec<VertexId> = t.iter().copied().collect();
    let mut memo: HashSet<MemoKey> = HashSet::new();
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
        let g_d = g.delete_vertices(t_prime.iter().copied())?;
        let t_d: BTreeSet<VertexId> = t.iter().copied().filter(|v| !t_prime.contains(v)).collect();
        if let Some(d) = disjoint_oor(&g_d, &t_d, k - t_prime.len(), cfg, stats, &mut memo)? {
            let mut sol = d;
            sol.extend(t_prime.iter().copied());
            assert!(
                check_oor(g, &DeletionSet::Vertices(sol.clone()))?,
                "compression witness failed verification"
            );
            return Ok(Some(sol));
        }
    }
    Ok(None)
}

/// Seeks a solution disjoint from `t_set`, assuming `t_set` is a solution of
/// `g`. One level covers the shadow, builds the torso, recovers one last
/// component, and recurses on the residual graph with a fresh covering.
fn disjoint_oor(
    g: &MultiDigraph,
    t_set: &BTreeSet<VertexId>,
    k: usize,
    cfg: &SolveConfig,
    stats: &mut SolveStats,
    memo: &mut HashSet<MemoKey>,
) -> Result<Option<BTreeSet<VertexId>>, SolveError> {
    stats.nodes += 1;
    if clean_graph(g) {
        return Ok(Some(BTreeSet::new()));
    }
    if t_set.is_empty() {
        return Ok(None); // obstructions left but nothing connects to T
    }
    let words = g.id_limit().div_ceil(64);
    let key: MemoKey = (
        mask_of(g.vertices(), words),
        mask_of(t_set.iter().copied(), words),
        k,
    );
    if memo.contains(&key) {
        return Ok(None);
    }
    let family = build_covering_family_counted(
        g,
        t_set,
        k,
        cfg.covering,
        cfg.seed,
        cfg.covering_retries,
        &mut stats.important_separators,
    )?;
    stats.covering_sets += family.sets.len() as u64;
    for z in &family.sets {
        let mut zt = z.clone();
        zt.extend(t_set.iter().copied());
        if contains_forbidden(g, &zt)? {
            continue;
        }
        let tg = torso(g, z)?;
        for (comp, dels) in recover_last_component(&tg, t_set, t_set, k) {
            let mut removed = comp.clone();
            removed.extend(dels.iter().copied());
            let g_res = g.delete_vertices(removed.iter().copied())?;
            let t_res: BTreeSet<VertexId> = t_set
                .iter()
                .copied()
                .filter(|v| !comp.contains(v))
                .collect();
            if let Some(rest) = disjoint_oor(&g_res, &t_res, k - dels.len(), cfg, stats, memo)? {
                let mut d = dels;
                d.extend(rest);
                return Ok(Some(d));
            }
        }
    }
    memo.insert(key);
    Ok(None)
}

/// Directed line graph: one vertex per arc, an arc (v_a, v_b) whenever the
/// head of a meets the tail of b. The budget carries over unchanged.
pub struct LineGraph {
    pub instance: OorInstance,
    /// Original arc id per line-graph vertex.
    pub arc_of_vertex: Vec<ArcId>,
}

pub fn line_graph_transform(g: &MultiDigraph, k: usize) -> LineGraph {
    let live: Vec<(ArcId, VertexId, VertexId)> = g.arcs().collect();
    let mut arcs: Vec<(VertexId, VertexId)> = Vec::new();
    for (i, &(_, _, head)) in live.iter().enumerate() {
        for (j, &(_, tail, _)) in live.iter().enumerate() {
            if head == tail {
                arcs.push((i, j));
            }
        }
    }
    let graph = MultiDigraph::new(live.len(), arcs).expect("valid construction");
    LineGraph {
        instance: OorInstance {
            graph,
            budget: k,
            mode: DeletionMode::Vertex,
        },
        arc_of_vertex: live.iter().map(|&(id, _, _)| id).collect(),
    }
}

/// Arc version: collapse parallel self-loops, solve the vertex problem on
/// the line graph, map back, and trade loop deletions for cycle-arc
/// deletions where collapsed loops resurface.
pub fn solve_oorad(
    g: &MultiDigraph,
    k: usize,
    cfg: &SolveConfig,
    stats: &mut SolveStats,
) -> Result<Option<BTreeSet<ArcId>>, SolveError> {
    let capped = g.cap_self_loops();
    let lg = line_graph_transform(&capped, k);
    let Some(inner) = solve_oorvd(&lg.instance.graph, k, cfg, stats)? else {
        return Ok(None);
    };
    let mut sol: BTreeSet<ArcId> = inner.iter().map(|&v| lg.arc_of_vertex[v]).collect();
    debug_assert!(check_oor(&capped, &DeletionSet::Arcs(sol.clone()))?);
    repair_loop_witness(g, &mut sol)?;
    assert!(
        check_oor(g, &DeletionSet::Arcs(sol.clone()))?,
        "arc witness failed verification"
    );
    Ok(Some(sol))
}

/// The witness is valid for the loop-capped graph; in the full graph a
/// collapsed parallel loop can resurface inside a surviving cycle. Breaking
/// that cycle instead of deleting its loops keeps the budget: the loop
/// deletions are returned and one cycle arc goes in their place.
fn repair_loop_witness(g: &MultiDigraph, sol: &mut BTreeSet<ArcId>) -> Result<(), GraphError> {
    loop {
        let h = g.delete_arcs(sol.iter().copied())?;
        let d = h.scc();
        let mut changed = false;
        for comp in d.components.iter().filter(|c| c.len() >= 2) {
            let inside: BTreeSet<VertexId> = comp.iter().copied().collect();
            let loop_vertices: Vec<VertexId> = comp
                .iter()
                .copied()
                .filter(|&v| h.out_neighbors(v).any(|w| w == v))
                .collect();
            if loop_vertices.is_empty() {
                continue;
            }
            // un-delete every loop at this component, break the cycle instead
            for &v in comp {
                let dropped: Vec<ArcId> = sol
                    .iter()
                    .copied()
                    .filter(|&a| {
                        g.arc_ends(a)
                            .map(|(t, hd)| t == v && hd == v)
                            .unwrap_or(false)
                    })
                    .collect();
                for a in dropped {
                    sol.remove(&a);
                }
            }
            let w = loop_vertices[0];
            let cycle_arc = h
                .out_arcs(w)
                .find(|&a| {
                    let (_, head) = h.arc_ends(a).unwrap();
                    head != w && inside.contains(&head)
                })
                .expect("non-trivial strong component has an escape arc");
            sol.insert(cycle_arc);
            changed = true;
            break; // recompute components from scratch
        }
        if !changed {
            return Ok(());
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::separators::CoveringMode;

    fn g(n: usize, arcs: &[(usize, usize)]) -> MultiDigraph {
        MultiDigraph::new(n, arcs.to_vec()).unwrap()
    }

    fn set(vs: &[usize]) -> BTreeSet<usize> {
        vs.iter().copied().collect()
    }

    fn verts(vs: &[usize]) -> DeletionSet {
        DeletionSet::Vertices(set(vs))
    }

    fn cfg() -> SolveConfig {
        SolveConfig {
            covering: CoveringMode::Exhaustive,
            ..SolveConfig::default()
        }
    }

    fn triangle_with_chord() -> MultiDigraph {
        // a=0, b=1, c=2: cycle plus chord a -> c
        g(3, &[(0, 1), (1, 2), (2, 0), (0, 2)])
    }

    fn two_triangles_sharing(v: usize) -> MultiDigraph {
        // triangles v,1,2 and v,3,4
        g(5, &[(v, 1), (1, 2), (2, v), (v, 3), (3, 4), (4, v)])
    }

    #[test]
    fn check_plain_cycle_ok() {
        let c3 = g(3, &[(0, 1), (1, 2), (2, 0)]);
        assert!(check_oor(&c3, &verts(&[])).unwrap());
    }

    #[test]
    fn check_triangle_with_chord() {
        let t = triangle_with_chord();
        assert!(!check_oor(&t, &verts(&[])).unwrap());
        // deleting b leaves the 2-cycle a <-> c
        assert!(check_oor(&t, &verts(&[1])).unwrap());
    }

    #[test]
    fn check_shared_vertex_deletion() {
        let t = two_triangles_sharing(0);
        assert!(check_oor(&t, &verts(&[0])).unwrap());
    }

    #[test]
    fn forbidden_detection() {
        let t = triangle_with_chord();
        assert!(contains_forbidden(&t, &set(&[0, 1, 2])).unwrap());
        let c3 = g(3, &[(0, 1), (1, 2), (2, 0)]);
        assert!(!contains_forbidden(&c3, &set(&[0, 1, 2])).unwrap());
        let dag = g(3, &[(0, 1), (1, 2)]);
        assert!(!contains_forbidden(&dag, &set(&[0, 1, 2])).unwrap());
    }

    #[test]
    fn torso_unique_path_is_good() {
        // u=0 -> z=1 -> v=2, Z = {1}
        let gr = g(3, &[(0, 1), (1, 2)]);
        let tg = torso(&gr, &set(&[1])).unwrap();
        let a = tg.arc_between(0, 2).unwrap();
        assert_eq!(tg.quality[a], ArcQuality::Good);
        assert_eq!(tg.graph.num_arcs(), 1);
    }

    #[test]
    fn torso_two_interior_paths_are_bad() {
        // u=0 -> z1=1 -> v=3 and u -> z2=2 -> v
        let gr = g(4, &[(0, 1), (1, 3), (0, 2), (2, 3)]);
        let tg = torso(&gr, &set(&[1, 2])).unwrap();
        let a = tg.arc_between(0, 3).unwrap();
        assert_eq!(tg.quality[a], ArcQuality::Bad);
    }

    #[test]
    fn torso_good_self_loop() {
        // v=0 -> z=1 -> v: unique closed path, no cycle inside G[Z]
        let gr = g(2, &[(0, 1), (1, 0)]);
        let tg = torso(&gr, &set(&[1])).unwrap();
        let a = tg.arc_between(0, 0).unwrap();
        assert_eq!(tg.quality[a], ArcQuality::Good);
    }

    #[test]
    fn torso_keeps_direct_arcs() {
        let gr = g(4, &[(0, 1), (1, 2), (2, 0), (1, 3)]);
        let tg = torso(&gr, &set(&[3])).unwrap();
        for (u, v) in [(0, 1), (1, 2), (2, 0)] {
            assert!(tg.arc_between(u, v).is_some());
        }
    }

    #[test]
    fn torso_z_cycle_taints_the_arc() {
        // u=0 -> z1=1 -> v=3 with z1 on the Z-cycle z1 <-> z2=2
        let gr = g(4, &[(0, 1), (1, 3), (1, 2), (2, 1)]);
        let tg = torso(&gr, &set(&[1, 2])).unwrap();
        let a = tg.arc_between(0, 3).unwrap();
        assert_eq!(tg.quality[a], ArcQuality::Bad);
    }

    fn good_cycle_torso(n: usize) -> TorsoGraph {
        let arcs: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        torso(&g(n, &arcs), &BTreeSet::new()).unwrap()
    }

    #[test]
    fn fbad_good_cycle_is_fine() {
        let tg = good_cycle_torso(3);
        assert!(!detect_fbad(&tg, &BTreeSet::new()).unwrap());
    }

    #[test]
    fn fbad_bad_arc_in_cycle() {
        // parallel arcs make 0 -> 1 bad
        let gr = g(3, &[(0, 1), (0, 1), (1, 2), (2, 0)]);
        let tg = torso(&gr, &BTreeSet::new()).unwrap();
        assert!(detect_fbad(&tg, &BTreeSet::new()).unwrap());
    }

    #[test]
    fn fbad_chord_breaks_cycle_shape() {
        let tg = torso(&triangle_with_chord(), &BTreeSet::new()).unwrap();
        assert!(detect_fbad(&tg, &BTreeSet::new()).unwrap());
        // deleting b repairs it
        assert!(!detect_fbad(&tg, &set(&[1])).unwrap());
    }

    #[test]
    fn recover_pure_cycle_zero_budget() {
        let tg = good_cycle_torso(3);
        let branches = recover_last_component(&tg, &set(&[0]), &set(&[0]), 0);
        assert_eq!(branches, vec![(set(&[0, 1, 2]), set(&[]))]);
    }

    #[test]
    fn recover_trivial_and_cycle_branches() {
        // t=0 with out-arcs to a=1 (cycle back) and b=2 (sink)
        let gr = g(3, &[(0, 1), (1, 0), (0, 2)]);
        let tg = torso(&gr, &BTreeSet::new()).unwrap();
        let branches = recover_last_component(&tg, &set(&[0]), &set(&[0]), 2);
        let want = vec![(set(&[0]), set(&[1, 2])), (set(&[0, 1]), set(&[2]))];
        assert_eq!(branches, want);
    }

    #[test]
    fn recover_prunes_bad_arc_and_t_neighbors() {
        // t=0's only out-neighbor is t'=1 (in T) via a bad (doubled) arc
        let gr = g(2, &[(0, 1), (0, 1)]);
        let tg = torso(&gr, &BTreeSet::new()).unwrap();
        let branches = recover_last_component(&tg, &set(&[0, 1]), &set(&[0, 1]), 2);
        assert!(branches.iter().all(|(comp, _)| !comp.contains(&0)));
        // t' itself has no out-arcs, so it recovers as a trivial component
        assert!(branches.contains(&(set(&[1]), set(&[]))));
    }

    #[test]
    fn solve_plain_cycle_k0() {
        let c3 = g(3, &[(0, 1), (1, 2), (2, 0)]);
        let sol = solve_oorvd(&c3, 0, &cfg(), &mut SolveStats::default())
            .unwrap()
            .unwrap();
        assert!(sol.is_empty());
    }

    #[test]
    fn solve_triangle_with_chord_k1() {
        let t = triangle_with_chord();
        assert!(solve_oorvd(&t, 0, &cfg(), &mut SolveStats::default())
            .unwrap()
            .is_none());
        let sol = solve_oorvd(&t, 1, &cfg(), &mut SolveStats::default())
            .unwrap()
            .unwrap();
        assert_eq!(sol.len(), 1);
        assert!(check_oor(&t, &DeletionSet::Vertices(sol)).unwrap());
    }

    #[test]
    fn solve_two_triangles_k1() {
        let t = two_triangles_sharing(0);
        let sol = solve_oorvd(&t, 1, &cfg(), &mut SolveStats::default())
            .unwrap()
            .unwrap();
        assert!(check_oor(&t, &DeletionSet::Vertices(sol)).unwrap());
    }

    #[test]
    fn line_graph_of_cycle_is_cycle() {
        let c3 = g(3, &[(0, 1), (1, 2), (2, 0)]);
        let lg = line_graph_transform(&c3, 1);
        assert_eq!(lg.instance.graph.num_vertices(), 3);
        assert_eq!(lg.instance.graph.num_arcs(), 3);
        assert!(check_oor(&lg.instance.graph, &verts(&[])).unwrap());
    }

    #[test]
    fn line_graph_of_single_arc_is_isolated() {
        let lg = line_graph_transform(&g(2, &[(0, 1)]), 0);
        assert_eq!(lg.instance.graph.num_vertices(), 1);
        assert_eq!(lg.instance.graph.num_arcs(), 0);
    }

    #[test]
    fn line_graph_indegree_two() {
        // two arcs into vertex 1, one arc out of it
        let gr = g(3, &[(0, 1), (2, 1), (1, 0)]);
        let lg = line_graph_transform(&gr, 0);
        // v_c is the line vertex of arc (1, 0)
        assert_eq!(lg.instance.graph.in_degree(2), 2);
    }

    #[test]
    fn solve_arc_triangle_with_chord() {
        let t = triangle_with_chord();
        assert!(solve_oorad(&t, 0, &cfg(), &mut SolveStats::default())
            .unwrap()
            .is_none());
        let sol = solve_oorad(&t, 1, &cfg(), &mut SolveStats::default())
            .unwrap()
            .unwrap();
        assert_eq!(sol.len(), 1);
    }

    #[test]
    fn solve_arc_plain_cycle_k0() {
        let c3 = g(3, &[(0, 1), (1, 2), (2, 0)]);
        let sol = solve_oorad(&c3, 0, &cfg(), &mut SolveStats::default())
            .unwrap()
            .unwrap();
        assert!(sol.is_empty());
    }

    #[test]
    fn solve_arc_bidirected_triangle() {
        use crate::oracle::{brute_force, DEFAULT_SUBSET_LIMIT};
        use crate::problem::{ProblemInstance, ProblemKind};
        let arcs = [(0, 1), (1, 0), (1, 2), (2, 1), (2, 0), (0, 2)];
        let t = g(3, &arcs);
        // the brute-force oracle pins the budget boundary: one deletion never
        // untangles it, two do (e.g. {0->1, 2->1} leaves 0 <-> 2 clean)
        let minimum = brute_force(
            &ProblemInstance {
                graph: t.clone(),
                problem: ProblemKind::OneOutRegular,
                budget: 6,
                max_component: None,
                mode: DeletionMode::Arc,
            },
            DEFAULT_SUBSET_LIMIT,
        )
        .unwrap()
        .unwrap();
        assert_eq!(minimum.len(), 2);
        assert!(solve_oorad(&t, 1, &cfg(), &mut SolveStats::default())
            .unwrap()
            .is_none());
        let sol = solve_oorad(&t, 2, &cfg(), &mut SolveStats::default()).unwrap();
        assert!(sol.is_some());
    }

    #[test]
    fn solve_arc_parallel_self_loops() {
        // two parallel loops on an isolated vertex are fine as-is
        let gr = g(1, &[(0, 0), (0, 0)]);
        let sol = solve_oorad(&gr, 0, &cfg(), &mut SolveStats::default())
            .unwrap()
            .unwrap();
        assert!(sol.is_empty());
        // loops inside a cycle force a repair swap
        let gr2 = g(2, &[(0, 1), (1, 0), (0, 0), (0, 0)]);
        let sol2 = solve_oorad(&gr2, 1, &cfg(), &mut SolveStats::default()).unwrap();
        assert!(sol2.is_some());
        assert!(check_oor(&gr2, &DeletionSet::Arcs(sol2.unwrap())).unwrap());
    }

    #[test]
    fn torso_contains_the_induced_subgraph() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x7040);
        for _ in 0..200 {
            let n = rng.gen_range(2..=8);
            let m = rng.gen_range(0..=16);
            let arcs: Vec<(usize, usize)> = (0..m)
                .map(|_| (rng.gen_range(0..n), rng.gen_range(0..n)))
                .collect();
            let gr = MultiDigraph::new(n, arcs).unwrap();
            let z: BTreeSet<usize> = (0..n).filter(|_| rng.gen_bool(0.4)).collect();
            let tg = torso(&gr, &z).unwrap();
            for (_, u, v) in gr.arcs() {
                if !z.contains(&u) && !z.contains(&v) {
                    assert!(tg.arc_between(u, v).is_some());
                }
            }
        }
    }

    /// Brute-force optima of an arc instance and of its line graph agree;
    /// parallel self-loops are collapsed first (the one configuration where
    /// the correspondence genuinely fails).
    #[test]
    fn line_graph_preserves_optima() {
        use crate::oracle::{brute_force, random_graph, DEFAULT_SUBSET_LIMIT};
        use crate::problem::{ProblemInstance, ProblemKind};
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x11e);
        for round in 0..120u64 {
            let n = rng.gen_range(2..=7);
            let m = rng.gen_range(0..=12);
            let gr = random_graph(n, m, 0x11e0 + round).cap_self_loops();
            let lg = line_graph_transform(&gr, 0);
            let minimum = |graph: MultiDigraph, mode: DeletionMode| -> Option<usize> {
                let inst = ProblemInstance {
                    graph,
                    problem: ProblemKind::OneOutRegular,
                    budget: 3,
                    max_component: None,
                    mode,
                };
                brute_force(&inst, DEFAULT_SUBSET_LIMIT)
                    .unwrap()
                    .map(|s| s.len())
            };
            assert_eq!(
                minimum(gr, DeletionMode::Arc),
                minimum(lg.instance.graph, DeletionMode::Vertex),
                "round {round}"
            );
        }
    }

    #[test]
    fn randomized_and_none_covering_modes_return_verified_witnesses() {
        use crate::oracle::planted_instance;
        use crate::problem::ProblemKind;
        for seed in 0..10u64 {
            let p = planted_instance(
                6,
                1,
                None,
                seed,
                ProblemKind::OneOutRegular,
                DeletionMode::Vertex,
            );
            let g = &p.instance.graph;
            for covering in [CoveringMode::Randomized, CoveringMode::None] {
                let cfg = SolveConfig {
                    covering,
                    covering_retries: 12,
                    ..SolveConfig::default()
                };
                if let Some(sol) = solve_oorvd(g, 1, &cfg, &mut SolveStats::default()).unwrap() {
                    assert!(check_oor(g, &DeletionSet::Vertices(sol)).unwrap());
                }
            }
            // randomized mode with generous retries finds the planted answer
            let cfg = SolveConfig {
                covering: CoveringMode::Randomized,
                covering_retries: 32,
                ..SolveConfig::default()
            };
            assert!(solve_oorvd(g, 1, &cfg, &mut SolveStats::default())
                .unwrap()
                .is_some());
        }
    }

    #[test]
    fn found_solutions_are_monotone() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x1212);
        for _ in 0..60 {
            let n = rng.gen_range(2..=7);
            let m = rng.gen_range(0..=12);
            let arcs: Vec<(usize, usize)> = (0..m)
                .map(|_| (rng.gen_range(0..n), rng.gen_range(0..n)))
                .collect();
            let gr = MultiDigraph::new(n, arcs).unwrap();
            if let Some(sol) = solve_oorvd(&gr, 2, &cfg(), &mut SolveStats::default()).unwrap() {
                for v in gr.vertices().filter(|v| !sol.contains(v)) {
                    let mut bigger = sol.clone();
                    bigger.insert(v);
                    assert!(check_oor(&gr, &DeletionSet::Vertices(bigger)).unwrap());
                }
            }
        }
    }

    /// Exhaustive path enumeration oracle for torso arc quality.
    fn torso_oracle(
        gr: &MultiDigraph,
        z: &BTreeSet<usize>,
    ) -> std::collections::BTreeMap<(usize, usize), ArcQuality> {
        fn paths(
            gr: &MultiDigraph,
            z: &BTreeSet<usize>,
            cur: usize,
            target: usize,
            visited: &mut BTreeSet<usize>,
            acc: &mut Vec<Vec<usize>>,
            interior: &mut Vec<usize>,
        ) {
            for a in gr.out_arcs(cur) {
                let (_, head) = gr.arc_ends(a).unwrap();
                if head == target {
                    acc.push(interior.clone());
                }
                if z.contains(&head) && !visited.contains(&head) {
                    visited.insert(head);
                    interior.push(head);
                    paths(gr, z, head, target, visited, acc, interior);
                    interior.pop();
                    visited.remove(&head);
                }
            }
        }
        let gz = gr.induced(z);
        let mut cyc: BTreeSet<usize> = BTreeSet::new();
        for comp in &gz.scc().components {
            if comp.len() >= 2 {
                cyc.extend(comp.iter().copied());
            }
        }
        for (_, u, v) in gz.arcs() {
            if u == v {
                cyc.insert(u);
            }
        }
        let mut out = std::collections::BTreeMap::new();
        let torso_vertices: Vec<usize> = gr.vertices().filter(|v| !z.contains(v)).collect();
        for &u in &torso_vertices {
            for &v in &torso_vertices {
                let mut acc = Vec::new();
                paths(gr, z, u, v, &mut BTreeSet::new(), &mut acc, &mut Vec::new());
                if acc.is_empty() {
                    continue;
                }
                let quality = if acc.len() == 1 && acc[0].iter().all(|w| !cyc.contains(w)) {
                    ArcQuality::Good
                } else {
                    ArcQuality::Bad
                };
                out.insert((u, v), quality);
            }
        }
        out
    }

    #[test]
    fn torso_matches_path_enumeration_oracle() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x9113);
        for round in 0..400 {
            let n = rng.gen_range(2..=7);
            let m = rng.gen_range(0..=14);
            let arcs: Vec<(usize, usize)> = (0..m)
                .map(|_| (rng.gen_range(0..n), rng.gen_range(0..n)))
                .collect();
            let gr = MultiDigraph::new(n, arcs).unwrap();
            let z: BTreeSet<usize> = (0..n).filter(|_| rng.gen_bool(0.4)).collect();
            let tg = torso(&gr, &z).unwrap();
            let want = torso_oracle(&gr, &z);
            let mut got = std::collections::BTreeMap::new();
            for (a, u, v) in tg.graph.arcs() {
                got.insert((u, v), tg.quality[a]);
            }
            assert_eq!(got, want, "round {round} z={z:?}");
        }
    }
}
