//! Vertex separators: minimum cuts, important-separator enumeration, shadows,
//! and shadow-covering set families.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{Direction, GraphError, MultiDigraph, VertexId};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeparatorError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("exhaustive covering over {vertices} free vertices exceeds the limit of {limit}")]
    CoveringBudget { vertices: usize, limit: usize },
}

/// An X -> Y vertex separator together with the forward reach of X after
/// removing it (its signature under the importance order).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Separator {
    pub vertices: BTreeSet<VertexId>,
    pub reach_after: BTreeSet<VertexId>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CutOutcome {
    Cut(usize, Separator),
    /// An arc runs directly from X to Y; no vertex separator exists.
    Uncuttable,
}

// ---------------------------------------------------------------------------
// Unit-capacity flow on the vertex-split graph.
// ---------------------------------------------------------------------------

const INF: usize = usize::MAX / 4;

struct FlowNet {
    // node 2v = v_in, 2v+1 = v_out
    first: Vec<usize>,
    to: Vec<usize>,
    next: Vec<usize>,
    cap: Vec<usize>,
    sources: Vec<usize>,
    sink_mark: Vec<bool>,
    deletable_count: usize,
}

enum CutStructure {
    Uncuttable,
    Exceeds,
    Cut {
        size: usize,
        close: Vec<VertexId>,
        far: Vec<VertexId>,
    },
}

impl FlowNet {
    /// `protected` vertices (always including x and y) get infinite vertex
    /// capacity; every other live vertex gets capacity one.
    fn new(
        g: &MultiDigraph,
        x: &BTreeSet<VertexId>,
        y: &BTreeSet<VertexId>,
        protected: &BTreeSet<VertexId>,
    ) -> FlowNet {
        let n = g.id_limit();
        let mut net = FlowNet {
            first: vec![usize::MAX; 2 * n],
            to: Vec::new(),
            next: Vec::new(),
            cap: Vec::new(),
            sources: x.iter().map(|&v| 2 * v + 1).collect(),
            sink_mark: vec![false; 2 * n],
            deletable_count: 0,
        };
        for &v in y {
            net.sink_mark[2 * v] = true;
        }
        for v in g.vertices() {
            let deletable = !protected.contains(&v) && !x.contains(&v) && !y.contains(&v);
            if deletable {
                net.deletable_count += 1;
            }
            net.add_edge(2 * v, 2 * v + 1, if deletable { 1 } else { INF });
        }
        for (_, u, v) in g.arcs() {
            net.add_edge(2 * u + 1, 2 * v, INF);
        }
        net
    }

    fn add_edge(&mut self, a: usize, b: usize, c: usize) {
        for (from, to, cap) in [(a, b, c), (b, a, 0)] {
            self.to.push(to);
            self.cap.push(cap);
            self.next.push(self.first[from]);
            self.first[from] = self.to.len() - 1;
        }
    }

    /// BFS for an augmenting path; returns the edge sequence if one exists,
    /// plus whether its bottleneck is infinite.
    fn augment(&mut self) -> Option<bool> {
        let mut pred_edge = vec![usize::MAX; self.first.len()];
        let mut seen = vec![false; self.first.len()];
        let mut queue: std::collections::VecDeque<usize> = self.sources.iter().copied().collect();
        for &s in &self.sources {
            seen[s] = true;
        }
        let mut hit = usize::MAX;
        'bfs: while let Some(u) = queue.pop_front() {
            let mut e = self.first[u];
            while e != usize::MAX {
                if self.cap[e] > 0 && !seen[self.to[e]] {
                    let v = self.to[e];
                    seen[v] = true;
                    pred_edge[v] = e;
                    if self.sink_mark[v] {
                        hit = v;
                        break 'bfs;
                    }
                    queue.push_back(v);
                }
                e = self.next[e];
            }
        }
        if hit == usize::MAX {
            return None;
        }
        // walk back, find bottleneck, push one unit (or detect an all-infinite path)
        let mut bottleneck = INF;
        let mut v = hit;
        while pred_edge[v] != usize::MAX {
            let e = pred_edge[v];
            bottleneck = bottleneck.min(self.cap[e]);
            v = self.to[e ^ 1];
        }
        let infinite = bottleneck >= INF;
        let push = 1;
        let mut v = hit;
        while pred_edge[v] != usize::MAX {
            let e = pred_edge[v];
            self.cap[e] -= push;
            self.cap[e ^ 1] += push;
            v = self.to[e ^ 1];
        }
        Some(infinite)
    }

    /// Runs max-flow until either flow exceeds `limit` or no augmenting path
    /// remains; extracts both the source-closest and sink-closest min cuts.
    fn min_cut(&mut self, limit: usize) -> CutStructure {
        let mut flow = 0usize;
        loop {
            match self.augment() {
                Some(true) => return CutStructure::Uncuttable,
                Some(false) => {
                    flow += 1;
                    if flow > limit.min(self.deletable_count) {
                        if flow > self.deletable_count {
                            return CutStructure::Uncuttable;
                        }
                        return CutStructure::Exceeds;
                    }
                }
                None => break,
            }
        }
        // residual reach from sources: cut vertex v has v_in reachable, v_out not
        let reach = self.residual_reach_forward();
        let mut close = Vec::new();
        for v in 0..self.first.len() / 2 {
            if reach[2 * v] && !reach[2 * v + 1] {
                close.push(v);
            }
        }
        let coreach = self.residual_reach_backward();
        let mut far = Vec::new();
        for v in 0..self.first.len() / 2 {
            if coreach[2 * v + 1] && !coreach[2 * v] {
                far.push(v);
            }
        }
        debug_assert_eq!(close.len(), flow);
        debug_assert_eq!(far.len(), flow);
        CutStructure::Cut {
            size: flow,
            close,
            far,
        }
    }

    fn residual_reach_forward(&self) -> Vec<bool> {
        let mut seen = vec![false; self.first.len()];
        let mut stack: Vec<usize> = self.sources.clone();
        for &s in &self.sources {
            seen[s] = true;
        }
        while let Some(u) = stack.pop() {
            let mut e = self.first[u];
            while e != usize::MAX {
                if self.cap[e] > 0 && !seen[self.to[e]] {
                    seen[self.to[e]] = true;
                    stack.push(self.to[e]);
                }
                e = self.next[e];
            }
        }
        seen
    }

    fn residual_reach_backward(&self) -> Vec<bool> {
        let mut seen = vec![false; self.first.len()];
        let mut stack: Vec<usize> = Vec::new();
        for (v, &is_sink) in self.sink_mark.iter().enumerate() {
            if is_sink {
                seen[v] = true;
                stack.push(v);
            }
        }
        while let Some(u) = stack.pop() {
            let mut e = self.first[u];
            while e != usize::MAX {
                // traverse reversed residual edges: edge e^1 leads to u
                if self.cap[e ^ 1] > 0 && !seen[self.to[e]] {
                    seen[self.to[e]] = true;
                    stack.push(self.to[e]);
                }
                e = self.next[e];
            }
        }
        seen
    }
}

fn check_terminals(
    g: &MultiDigraph,
    x: &BTreeSet<VertexId>,
    y: &BTreeSet<VertexId>,
) -> Result<(), GraphError> {
    if x.is_empty() || y.is_empty() || !x.is_disjoint(y) {
        return Err(GraphError::BadTerminals);
    }
    for &v in x.iter().chain(y.iter()) {
        if !g.is_vertex(v) {
            return Err(GraphError::InvalidVertex(v));
        }
    }
    Ok(())
}

/// Checks the separator definition directly: disjoint from both terminal
/// sets and no surviving X -> Y path.
pub fn is_separator(
    g: &MultiDigraph,
    x: &BTreeSet<VertexId>,
    y: &BTreeSet<VertexId>,
    s: &BTreeSet<VertexId>,
) -> bool {
    if !s.is_disjoint(x) || !s.is_disjoint(y) {
        return false;
    }
    let h = g
        .delete_vertices(s.iter().copied())
        .expect("separator vertices live");
    let reach = h.reach_set(x, Direction::Forward).expect("terminals live");
    y.iter().all(|t| !reach.contains(t))
}

fn separator_with_reach(
    g: &MultiDigraph,
    x: &BTreeSet<VertexId>,
    s: BTreeSet<VertexId>,
) -> Separator {
    let h = g
        .delete_vertices(s.iter().copied())
        .expect("separator vertices live");
    let reach_after = h.reach_set(x, Direction::Forward).expect("terminals live");
    Separator {
        vertices: s,
        reach_after,
    }
}

/// Minimum-cardinality X -> Y vertex separator via unit-capacity flow on the
/// vertex-split graph. Returns the cut closest to X among minimum cuts.
pub fn min_vertex_cut(
    g: &MultiDigraph,
    x: &BTreeSet<VertexId>,
    y: &BTreeSet<VertexId>,
) -> Result<CutOutcome, GraphError> {
    check_terminals(g, x, y)?;
    let mut net = FlowNet::new(g, x, y, &BTreeSet::new());
    match net.min_cut(usize::MAX / 2) {
        CutStructure::Uncuttable => Ok(CutOutcome::Uncuttable),
        CutStructure::Exceeds => unreachable!("unbounded min-cut query"),
        CutStructure::Cut { size, close, .. } => {
            let s: BTreeSet<VertexId> = close.into_iter().collect();
            debug_assert!(is_separator(g, x, y, &s));
            Ok(CutOutcome::Cut(size, separator_with_reach(g, x, s)))
        }
    }
}

pub(crate) enum BoundedCut {
    Uncuttable,
    Exceeds,
    Cut {
        size: usize,
        close: Vec<VertexId>,
        far: Vec<VertexId>,
    },
}

/// Bounded min-cut with extra protected (undeletable) vertices; used by the
/// skew-separator recursion and the important-separator enumeration.
pub(crate) fn bounded_min_cut(
    g: &MultiDigraph,
    x: &BTreeSet<VertexId>,
    y: &BTreeSet<VertexId>,
    protected: &BTreeSet<VertexId>,
    limit: usize,
) -> BoundedCut {
    let mut net = FlowNet::new(g, x, y, protected);
    match net.min_cut(limit) {
        CutStructure::Uncuttable => BoundedCut::Uncuttable,
        CutStructure::Exceeds => BoundedCut::Exceeds,
        CutStructure::Cut { size, close, far } => BoundedCut::Cut { size, close, far },
    }
}

/// Enumerates exactly the important X -> Y separators of size at most `p`:
/// minimal separators not dominated by any separator of equal or smaller size
/// with strictly larger forward reach.
///
/// The recursion pushes the minimum cut maximally toward Y and branches each
/// cut vertex into "committed to the separator" versus "absorbed into the
/// X side"; candidates are filtered down to the exact important set.
pub fn enumerate_important_separators(
    g: &MultiDigraph,
    x: &BTreeSet<VertexId>,
    y: &BTreeSet<VertexId>,
    p: usize,
) -> Result<Vec<Separator>, GraphError> {
    check_terminals(g, x, y)?;
    let mut raw: BTreeSet<BTreeSet<VertexId>> = BTreeSet::new();
    enumerate_rec(g, x.clone(), y, BTreeSet::new(), p, &mut raw);

    // exact filter: minimality, then domination against the candidate pool
    let mut with_reach: Vec<Separator> = raw
        .into_iter()
        .filter(|s| is_separator(g, x, y, s))
        .map(|s| separator_with_reach(g, x, s))
        .collect();
    with_reach.retain(|sep| {
        sep.vertices.iter().all(|&v| {
            let mut smaller = sep.vertices.clone();
            smaller.remove(&v);
            !is_separator(g, x, y, &smaller)
        })
    });
    let pool = with_reach.clone();
    with_reach.retain(|sep| {
        !pool.iter().any(|other| {
            other.vertices.len() <= sep.vertices.len()
                && sep.reach_after.is_subset(&other.reach_after)
                && sep.reach_after != other.reach_after
        })
    });
    with_reach.sort();
    Ok(with_reach)
}

fn enumerate_rec(
    g: &MultiDigraph,
    x: BTreeSet<VertexId>,
    y: &BTreeSet<VertexId>,
    committed: BTreeSet<VertexId>,
    p: usize,
    out: &mut BTreeSet<BTreeSet<VertexId>>,
) {
    let cut = bounded_min_cut(g, &x, y, &BTreeSet::new(), p);
    match cut {
        BoundedCut::Uncuttable | BoundedCut::Exceeds => {}
        BoundedCut::Cut { size: 0, .. } => {
            out.insert(committed);
        }
        BoundedCut::Cut { far, .. } => {
            let v = *far.iter().min().expect("non-zero cut");
            // v joins the separator
            let mut c2 = committed.clone();
            c2.insert(v);
            let g2 = g.delete_vertices([v]).expect("cut vertex live");
            enumerate_rec(&g2, x.clone(), y, c2, p - 1, out);
            // v is absorbed into the source side
            let mut x2 = x;
            x2.insert(v);
            enumerate_rec(g, x2, y, committed, p, out);
        }
    }
}

/// Forward and reverse shadow of `s_set` with respect to `t_set`: vertices
/// outside both sets that t_set cannot reach (forward) or that cannot reach
/// t_set (reverse) once `s_set` is removed.
pub fn shadow(
    g: &MultiDigraph,
    t_set: &BTreeSet<VertexId>,
    s_set: &BTreeSet<VertexId>,
) -> Result<(BTreeSet<VertexId>, BTreeSet<VertexId>), GraphError> {
    for &v in t_set.iter().chain(s_set.iter()) {
        if !g.is_vertex(v) {
            return Err(GraphError::InvalidVertex(v));
        }
    }
    let h = g.delete_vertices(s_set.iter().copied())?;
    let fwd_reach = h.reach_set(t_set, Direction::Forward)?;
    let rev_reach = h.reach_set(t_set, Direction::Backward)?;
    let mut forward = BTreeSet::new();
    let mut reverse = BTreeSet::new();
    for v in g.vertices() {
        if t_set.contains(&v) || s_set.contains(&v) {
            continue;
        }
        if !fwd_reach.contains(&v) {
            forward.insert(v);
        }
        if !rev_reach.contains(&v) {
            reverse.insert(v);
        }
    }
    Ok((forward, reverse))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoveringMode {
    Exhaustive,
    Randomized,
    None,
}

/// Family of candidate shadow-covering sets Z_1..Z_t.
#[derive(Debug, Clone)]
pub struct CoveringFamily {
    pub sets: Vec<BTreeSet<VertexId>>,
    pub mode: CoveringMode,
    pub seed: u64,
    pub retries: usize,
}

pub const EXHAUSTIVE_COVERING_LIMIT: usize = 16;

/// Builds the covering family for `t_set`.
///
/// Exhaustive mode enumerates every subset of the live vertices outside
/// `t_set`, so for any solution S disjoint from `t_set` the family contains
/// the exact shadow of S. Randomized mode samples unions of shadows of
/// important separators between single vertices and `t_set` (one-sided
/// error, amplified by `retries`); `None` yields the single empty set.
pub fn build_covering_family(
    g: &MultiDigraph,
    t_set: &BTreeSet<VertexId>,
    k: usize,
    mode: CoveringMode,
    seed: u64,
    retries: usize,
) -> Result<CoveringFamily, SeparatorError> {
    build_covering_family_counted(g, t_set, k, mode, seed, retries, &mut 0)
}

/// Same as [`build_covering_family`], also reporting how many important
/// separators the randomized mode enumerated.
pub fn build_covering_family_counted(
    g: &MultiDigraph,
    t_set: &BTreeSet<VertexId>,
    k: usize,
    mode: CoveringMode,
    seed: u64,
    retries: usize,
    separators_enumerated: &mut u64,
) -> Result<CoveringFamily, SeparatorError> {
    let free: Vec<VertexId> = g.vertices().filter(|v| !t_set.contains(v)).collect();
    let sets = match mode {
        CoveringMode::None => vec![BTreeSet::new()],
        CoveringMode::Exhaustive => {
            if free.len() > EXHAUSTIVE_COVERING_LIMIT {
                return Err(SeparatorError::CoveringBudget {
                    vertices: free.len(),
                    limit: EXHAUSTIVE_COVERING_LIMIT,
                });
            }
            let mut sets = Vec::with_capacity(1 << free.len());
            for mask in 0usize..(1 << free.len()) {
                let z: BTreeSet<VertexId> = free
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &v)| v)
                    .collect();
                sets.push(z);
            }
            sets
        }
        CoveringMode::Randomized => {
            let mut pool: BTreeSet<BTreeSet<VertexId>> = BTreeSet::new();
            if !t_set.is_empty() {
                for &v in &free {
                    let vs: BTreeSet<VertexId> = [v].into_iter().collect();
                    for sep in enumerate_important_separators(g, &vs, t_set, k)
                        .into_iter()
                        .flatten()
                        .chain(
                            enumerate_important_separators(g, t_set, &vs, k)
                                .into_iter()
                                .flatten(),
                        )
                    {
                        *separators_enumerated += 1;
                        pool.insert(sep.vertices);
                    }
                }
            }
            let pool: Vec<BTreeSet<VertexId>> = pool.into_iter().collect();
            let mut sets: Vec<BTreeSet<VertexId>> = vec![BTreeSet::new()];
            for retry in 0..retries {
                let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(retry as u64));
                let mut z: BTreeSet<VertexId> = BTreeSet::new();
                for sep in &pool {
                    if rng.gen_bool(0.5) {
                        let (f, r) = shadow(g, t_set, sep).expect("separator vertices live");
                        z.extend(f);
                        z.extend(r);
                    }
                }
                z.retain(|v| !t_set.contains(v));
                sets.push(z);
            }
            sets.dedup();
            sets
        }
    };
    Ok(CoveringFamily {
        sets,
        mode,
        seed,
        retries,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, arcs: &[(usize, usize)]) -> MultiDigraph {
        MultiDigraph::new(n, arcs.to_vec()).unwrap()
    }

    fn set(vs: &[usize]) -> BTreeSet<usize> {
        vs.iter().copied().collect()
    }

    /// Brute-force important separators: all minimal separators of size <= p
    /// that no separator of equal-or-smaller size strictly out-reaches.
    pub(crate) fn important_separators_brute(
        g: &MultiDigraph,
        x: &BTreeSet<usize>,
        y: &BTreeSet<usize>,
        p: usize,
    ) -> Vec<BTreeSet<usize>> {
        let free: Vec<usize> = g
            .vertices()
            .filter(|v| !x.contains(v) && !y.contains(v))
            .collect();
        let mut seps: Vec<(BTreeSet<usize>, BTreeSet<usize>)> = Vec::new();
        for mask in 0usize..(1 << free.len()) {
            let s: BTreeSet<usize> = free
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &v)| v)
                .collect();
            if s.len() <= p && is_separator(g, x, y, &s) {
                let h = g.delete_vertices(s.iter().copied()).unwrap();
                let r = h.reach_set(x, Direction::Forward).unwrap();
                seps.push((s, r));
            }
        }
        let all = seps.clone();
        let mut out: Vec<BTreeSet<usize>> = Vec::new();
        'cand: for (s, r) in seps {
            for v in &s {
                let mut t = s.clone();
                t.remove(v);
                if is_separator(g, x, y, &t) {
                    continue 'cand; // not minimal
                }
            }
            for (s2, r2) in &all {
                if s2.len() <= s.len() && r.is_subset(r2) && &r != r2 {
                    continue 'cand; // dominated
                }
            }
            out.push(s);
        }
        out.sort();
        out
    }

    #[test]
    fn min_cut_single_bottleneck() {
        let p = g(3, &[(0, 1), (1, 2)]);
        match min_vertex_cut(&p, &set(&[0]), &set(&[2])).unwrap() {
            CutOutcome::Cut(size, sep) => {
                assert_eq!(size, 1);
                assert_eq!(sep.vertices, set(&[1]));
            }
            CutOutcome::Uncuttable => panic!("cuttable"),
        }
    }

    #[test]
    fn min_cut_diamond_needs_both() {
        // frozen from the subset brute force below
        let d = g(4, &[(0, 1), (1, 3), (0, 2), (2, 3)]);
        match min_vertex_cut(&d, &set(&[0]), &set(&[3])).unwrap() {
            CutOutcome::Cut(size, sep) => {
                assert_eq!(size, 2);
                assert_eq!(sep.vertices, set(&[1, 2]));
            }
            CutOutcome::Uncuttable => panic!("cuttable"),
        }
        // oracle: the only subset of {1,2} cutting 0 -> 3 is {1,2} itself
        assert!(!is_separator(&d, &set(&[0]), &set(&[3]), &set(&[1])));
        assert!(!is_separator(&d, &set(&[0]), &set(&[3]), &set(&[2])));
        assert!(is_separator(&d, &set(&[0]), &set(&[3]), &set(&[1, 2])));
    }

    #[test]
    fn min_cut_direct_arc_is_uncuttable() {
        let d = g(2, &[(0, 1)]);
        assert_eq!(
            min_vertex_cut(&d, &set(&[0]), &set(&[1])).unwrap(),
            CutOutcome::Uncuttable
        );
    }

    #[test]
    fn min_cut_rejects_overlapping_terminals() {
        let d = g(2, &[(0, 1)]);
        assert!(min_vertex_cut(&d, &set(&[0]), &set(&[0, 1])).is_err());
    }

    #[test]
    fn important_path_single() {
        let p = g(3, &[(0, 1), (1, 2)]);
        let got = enumerate_important_separators(&p, &set(&[0]), &set(&[2]), 1).unwrap();
        let sets: Vec<_> = got.iter().map(|s| s.vertices.clone()).collect();
        assert_eq!(sets, vec![set(&[1])]);
        assert_eq!(
            sets,
            important_separators_brute(&p, &set(&[0]), &set(&[2]), 1)
        );
    }

    #[test]
    fn important_chain_prefers_later_vertex() {
        // On 0 -> 1 -> 2 -> 3 with p = 2, {1} is dominated by {2}.
        let c = g(4, &[(0, 1), (1, 2), (2, 3)]);
        let got = enumerate_important_separators(&c, &set(&[0]), &set(&[3]), 2).unwrap();
        let sets: Vec<_> = got.iter().map(|s| s.vertices.clone()).collect();
        assert_eq!(sets, vec![set(&[2])]);
        assert_eq!(
            sets,
            important_separators_brute(&c, &set(&[0]), &set(&[3]), 2)
        );
    }

    #[test]
    fn important_diamond_empty_below_min_cut() {
        let d = g(4, &[(0, 1), (1, 3), (0, 2), (2, 3)]);
        let got = enumerate_important_separators(&d, &set(&[0]), &set(&[3]), 1).unwrap();
        assert!(got.is_empty());
        assert!(important_separators_brute(&d, &set(&[0]), &set(&[3]), 1).is_empty());
    }

    #[test]
    fn important_matches_brute_on_random_graphs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x1297);
        for round in 0..300 {
            let n = rng.gen_range(2..=7);
            let m = rng.gen_range(0..=14);
            let arcs: Vec<(usize, usize)> = (0..m)
                .map(|_| (rng.gen_range(0..n), rng.gen_range(0..n)))
                .collect();
            let gr = MultiDigraph::new(n, arcs).unwrap();
            let xa = rng.gen_range(0..n);
            let ya = rng.gen_range(0..n);
            if xa == ya {
                continue;
            }
            let (x, y) = (set(&[xa]), set(&[ya]));
            let p = rng.gen_range(0..=3);
            let got: Vec<_> = enumerate_important_separators(&gr, &x, &y, p)
                .unwrap()
                .into_iter()
                .map(|s| s.vertices)
                .collect();
            let want = important_separators_brute(&gr, &x, &y, p);
            assert_eq!(got, want, "round {round} n={n} p={p}");
            assert!(got.len() <= 4usize.pow(p as u32));
        }
    }

    #[test]
    fn every_enumerated_separator_is_minimal_and_cuts() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0xcafe);
        for _ in 0..200 {
            let n = rng.gen_range(2..=8);
            let m = rng.gen_range(0..=16);
            let arcs: Vec<(usize, usize)> = (0..m)
                .map(|_| (rng.gen_range(0..n), rng.gen_range(0..n)))
                .collect();
            let gr = MultiDigraph::new(n, arcs).unwrap();
            let (x, y) = (set(&[0]), set(&[n - 1]));
            if x.intersection(&y).count() > 0 {
                continue;
            }
            for sep in enumerate_important_separators(&gr, &x, &y, 3).unwrap() {
                assert!(is_separator(&gr, &x, &y, &sep.vertices));
                for v in &sep.vertices {
                    let mut t = sep.vertices.clone();
                    t.remove(v);
                    assert!(!is_separator(&gr, &x, &y, &t));
                }
            }
        }
    }

    #[test]
    fn shadow_by_definition_cases() {
        // t -> a -> b with S = {a}: b is unreachable from t and cannot reach t
        let d = g(3, &[(0, 1), (1, 2)]);
        let (f, r) = shadow(&d, &set(&[0]), &set(&[1])).unwrap();
        assert_eq!(f, set(&[2]));
        assert_eq!(r, set(&[2]));
    }

    #[test]
    fn shadow_of_full_t_is_empty() {
        let d = g(3, &[(0, 1), (1, 2)]);
        let (f, r) = shadow(&d, &set(&[0, 1, 2]), &set(&[])).unwrap();
        assert!(f.is_empty() && r.is_empty());
    }

    #[test]
    fn shadow_empty_on_cycle() {
        let c = g(3, &[(0, 1), (1, 2), (2, 0)]);
        let (f, r) = shadow(&c, &set(&[0]), &set(&[])).unwrap();
        assert!(f.is_empty() && r.is_empty());
    }

    #[test]
    fn shadow_never_contains_s_and_shrinks_with_larger_t() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5ad0);
        for _ in 0..300 {
            let n = rng.gen_range(2..=8);
            let m = rng.gen_range(0..=16);
            let arcs: Vec<(usize, usize)> = (0..m)
                .map(|_| (rng.gen_range(0..n), rng.gen_range(0..n)))
                .collect();
            let gr = MultiDigraph::new(n, arcs).unwrap();
            let t: BTreeSet<usize> = (0..n).filter(|_| rng.gen_bool(0.3)).collect();
            let s: BTreeSet<usize> = (0..n)
                .filter(|v| !t.contains(v))
                .filter(|_| rng.gen_bool(0.3))
                .collect();
            if t.is_empty() {
                continue;
            }
            let (f, r) = shadow(&gr, &t, &s).unwrap();
            assert!(f.is_disjoint(&s) && r.is_disjoint(&s));
            let mut t2 = t.clone();
            if let Some(extra) = (0..n).find(|v| !t.contains(v) && !s.contains(v)) {
                t2.insert(extra);
                let (f2, r2) = shadow(&gr, &t2, &s).unwrap();
                assert!(f2.is_subset(&f) && r2.is_subset(&r));
            }
        }
    }

    #[test]
    fn covering_none_mode() {
        let c = g(3, &[(0, 1), (1, 2), (2, 0)]);
        let fam = build_covering_family(&c, &set(&[0]), 1, CoveringMode::None, 0, 0).unwrap();
        assert_eq!(fam.sets, vec![BTreeSet::new()]);
    }

    #[test]
    fn covering_exhaustive_is_powerset() {
        let c = g(3, &[(0, 1), (1, 2), (2, 0)]);
        let fam = build_covering_family(&c, &set(&[0]), 1, CoveringMode::Exhaustive, 0, 0).unwrap();
        let want: Vec<BTreeSet<usize>> = vec![set(&[]), set(&[1]), set(&[2]), set(&[1, 2])];
        assert_eq!(fam.sets, want);
    }

    #[test]
    fn covering_exhaustive_budget_error() {
        let big = MultiDigraph::new(20, vec![]).unwrap();
        let err = build_covering_family(&big, &set(&[0]), 1, CoveringMode::Exhaustive, 0, 0);
        assert!(matches!(err, Err(SeparatorError::CoveringBudget { .. })));
    }

    #[test]
    fn covering_exhaustive_contains_every_shadow() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0xc0fe);
        for _ in 0..100 {
            let n = rng.gen_range(2..=7);
            let m = rng.gen_range(0..=12);
            let arcs: Vec<(usize, usize)> = (0..m)
                .map(|_| (rng.gen_range(0..n), rng.gen_range(0..n)))
                .collect();
            let gr = MultiDigraph::new(n, arcs).unwrap();
            let t: BTreeSet<usize> = set(&[0]);
            let s: BTreeSet<usize> = (1..n).filter(|_| rng.gen_bool(0.3)).collect();
            let fam = build_covering_family(&gr, &t, 2, CoveringMode::Exhaustive, 0, 0).unwrap();
            let (f, r) = shadow(&gr, &t, &s).unwrap();
            let mut sh = f;
            sh.extend(r);
            assert!(fam.sets.iter().any(|z| *z == sh && z.is_disjoint(&s)));
        }
    }
}
