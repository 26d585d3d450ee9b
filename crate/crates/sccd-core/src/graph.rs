//! Multi-digraph with stable arc ids and cheap masked deletion.
//!
//! Graphs are built once and never mutated; `delete_vertices` / `delete_arcs`
//! return views that share the underlying arc storage. Arc ids are positions
//! in the original arc list and survive any sequence of deletions.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use thiserror::Error;

pub type VertexId = usize;
pub type ArcId = usize;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("invalid vertex id {0}")]
    InvalidVertex(VertexId),
    #[error("invalid arc id {0}")]
    InvalidArc(ArcId),
    #[error("terminal sets must be non-empty and disjoint")]
    BadTerminals,
}

#[derive(Debug)]
struct BaseGraph {
    n: usize,
    arcs: Vec<(VertexId, VertexId)>,
    out_arcs: Vec<Vec<ArcId>>,
    in_arcs: Vec<Vec<ArcId>>,
}

/// Directed multigraph over dense vertex ids `0..n`. Parallel arcs and
/// self-loops are allowed; deletion is logical masking over a shared base.
#[derive(Debug, Clone)]
pub struct MultiDigraph {
    base: Arc<BaseGraph>,
    live_vertex: Vec<bool>,
    live_arc: Vec<bool>,
}

impl MultiDigraph {
    pub fn new(n: usize, arcs: Vec<(VertexId, VertexId)>) -> Result<Self, GraphError> {
        let mut out_arcs = vec![Vec::new(); n];
        let mut in_arcs = vec![Vec::new(); n];
        for (id, &(u, v)) in arcs.iter().enumerate() {
            if u >= n {
                return Err(GraphError::InvalidVertex(u));
            }
            if v >= n {
                return Err(GraphError::InvalidVertex(v));
            }
            out_arcs[u].push(id);
            in_arcs[v].push(id);
        }
        let m = arcs.len();
        Ok(MultiDigraph {
            base: Arc::new(BaseGraph {
                n,
                arcs,
                out_arcs,
                in_arcs,
            }),
            live_vertex: vec![true; n],
            live_arc: vec![true; m],
        })
    }

    /// Vertex id space; live vertices are a subset of `0..id_limit()`.
    pub fn id_limit(&self) -> usize {
        self.base.n
    }

    /// Arc id space; live arcs are a subset of `0..arc_id_limit()`.
    pub fn arc_id_limit(&self) -> usize {
        self.base.arcs.len()
    }

    pub fn num_vertices(&self) -> usize {
        self.live_vertex.iter().filter(|&&b| b).count()
    }

    pub fn num_arcs(&self) -> usize {
        self.live_arc.iter().filter(|&&b| b).count()
    }

    pub fn is_vertex(&self, v: VertexId) -> bool {
        v < self.base.n && self.live_vertex[v]
    }

    pub fn is_arc(&self, a: ArcId) -> bool {
        a < self.base.arcs.len() && self.live_arc[a]
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.base.n).filter(move |&v| self.live_vertex[v])
    }

    /// Live arcs as `(arc id, tail, head)` in arc-id order.
    pub fn arcs(&self) -> impl Iterator<Item = (ArcId, VertexId, VertexId)> + '_ {
        self.base
            .arcs
            .iter()
            .enumerate()
            .filter(move |(id, _)| self.live_arc[*id])
            .map(|(id, &(u, v))| (id, u, v))
    }

    pub fn arc_ends(&self, a: ArcId) -> Result<(VertexId, VertexId), GraphError> {
        if !self.is_arc(a) {
            return Err(GraphError::InvalidArc(a));
        }
        Ok(self.base.arcs[a])
    }

    pub fn out_arcs(&self, v: VertexId) -> impl Iterator<Item = ArcId> + '_ {
        self.base.out_arcs[v]
            .iter()
            .copied()
            .filter(move |&a| self.live_arc[a])
    }

    pub fn in_arcs(&self, v: VertexId) -> impl Iterator<Item = ArcId> + '_ {
        self.base.in_arcs[v]
            .iter()
            .copied()
            .filter(move |&a| self.live_arc[a])
    }

    /// Out-neighbors with multiplicity (one entry per live arc).
    pub fn out_neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.out_arcs(v).map(move |a| self.base.arcs[a].1)
    }

    pub fn in_neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.in_arcs(v).map(move |a| self.base.arcs[a].0)
    }

    pub fn out_degree(&self, v: VertexId) -> usize {
        self.out_arcs(v).count()
    }

    pub fn in_degree(&self, v: VertexId) -> usize {
        self.in_arcs(v).count()
    }

    /// Number of live parallel arcs from `u` to `v`.
    pub fn multiplicity(&self, u: VertexId, v: VertexId) -> usize {
        self.out_arcs(u)
            .filter(|&a| self.base.arcs[a].1 == v)
            .count()
    }

    /// Deletes vertices together with all incident arcs.
    pub fn delete_vertices<I>(&self, victims: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = VertexId>,
    {
        let mut g = self.clone();
        for v in victims {
            if !self.is_vertex(v) {
                return Err(GraphError::InvalidVertex(v));
            }
            g.live_vertex[v] = false;
            for &a in &self.base.out_arcs[v] {
                g.live_arc[a] = false;
            }
            for &a in &self.base.in_arcs[v] {
                g.live_arc[a] = false;
            }
        }
        Ok(g)
    }

    pub fn delete_arcs<I>(&self, victims: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = ArcId>,
    {
        let mut g = self.clone();
        for a in victims {
            if !self.is_arc(a) {
                return Err(GraphError::InvalidArc(a));
            }
            g.live_arc[a] = false;
        }
        Ok(g)
    }

    /// Masks everything outside `keep`; invalid ids in `keep` are ignored.
    pub fn induced(&self, keep: &BTreeSet<VertexId>) -> Self {
        let victims: Vec<VertexId> = self.vertices().filter(|v| !keep.contains(v)).collect();
        self.delete_vertices(victims).expect("victims are live")
    }

    /// Keeps at most `k + 1` parallel arcs per ordered vertex pair (lowest
    /// arc ids win). Solution-equivalent for arc deletion with budget `k`.
    pub fn cap_multiplicity(&self, k: usize) -> Self {
        let mut seen: BTreeMap<(VertexId, VertexId), usize> = BTreeMap::new();
        let mut g = self.clone();
        for (id, u, v) in self.arcs() {
            let c = seen.entry((u, v)).or_insert(0);
            *c += 1;
            if *c > k + 1 {
                g.live_arc[id] = false;
            }
        }
        g
    }

    /// Keeps at most one self-loop per vertex (lowest arc id wins).
    pub fn cap_self_loops(&self) -> Self {
        let mut seen = vec![false; self.base.n];
        let mut g = self.clone();
        for (id, u, v) in self.arcs() {
            if u == v {
                if seen[u] {
                    g.live_arc[id] = false;
                }
                seen[u] = true;
            }
        }
        g
    }

    /// Forward or backward reachability closure of `xs`, including `xs`.
    pub fn reach_set(
        &self,
        xs: &BTreeSet<VertexId>,
        direction: Direction,
    ) -> Result<BTreeSet<VertexId>, GraphError> {
        for &v in xs {
            if !self.is_vertex(v) {
                return Err(GraphError::InvalidVertex(v));
            }
        }
        let mut seen = vec![false; self.base.n];
        let mut stack: Vec<VertexId> = xs.iter().copied().collect();
        for &v in xs {
            seen[v] = true;
        }
        while let Some(v) = stack.pop() {
            let next: Vec<VertexId> = match direction {
                Direction::Forward => self.out_neighbors(v).collect(),
                Direction::Backward => self.in_neighbors(v).collect(),
            };
            for w in next {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        Ok(self.vertices().filter(|&v| seen[v]).collect())
    }

    /// Strong components with a deterministic topological order. Ties between
    /// incomparable components break on the smallest member vertex id.
    pub fn scc(&self) -> SccDecomposition {
        let n = self.base.n;
        let mut index = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut on_stack = vec![false; n];
        let mut comp_of: Vec<Option<usize>> = vec![None; n];
        let mut stack: Vec<VertexId> = Vec::new();
        let mut components: Vec<Vec<VertexId>> = Vec::new();
        let mut counter = 0usize;

        // Iterative Tarjan; vertices visited in ascending id order.
        enum Frame {
            Enter(VertexId),
            Resume(VertexId, VertexId),
        }
        let mut work: Vec<Frame> = Vec::new();
        for root in self.vertices() {
            if index[root] != usize::MAX {
                continue;
            }
            work.push(Frame::Enter(root));
            let mut iters: Vec<(VertexId, Vec<VertexId>, usize)> = Vec::new();
            while let Some(frame) = work.pop() {
                match frame {
                    Frame::Enter(v) => {
                        index[v] = counter;
                        low[v] = counter;
                        counter += 1;
                        stack.push(v);
                        on_stack[v] = true;
                        let succ: Vec<VertexId> = self.out_neighbors(v).collect();
                        iters.push((v, succ, 0));
                    }
                    Frame::Resume(v, w) => {
                        low[v] = low[v].min(low[w]);
                    }
                }
                'advance: while let Some((v, succ, pos)) = iters.last_mut() {
                    let v = *v;
                    while *pos < succ.len() {
                        let w = succ[*pos];
                        *pos += 1;
                        if index[w] == usize::MAX {
                            work.push(Frame::Resume(v, w));
                            work.push(Frame::Enter(w));
                            break 'advance;
                        } else if on_stack[w] {
                            low[v] = low[v].min(index[w]);
                        }
                    }
                    // all successors done
                    iters.pop();
                    if low[v] == index[v] {
                        let mut comp = Vec::new();
                        while let Some(w) = stack.pop() {
                            on_stack[w] = false;
                            comp_of[w] = Some(components.len());
                            comp.push(w);
                            if w == v {
                                break;
                            }
                        }
                        comp.sort_unstable();
                        components.push(comp);
                    }
                    if let Some(last) = work.last() {
                        if matches!(last, Frame::Resume(..)) {
                            break 'advance;
                        }
                    }
                }
            }
        }

        // Kahn over the condensation, min-vertex-id first.
        let c = components.len();
        let mut indeg = vec![0usize; c];
        let mut cond_out: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); c];
        for (_, u, v) in self.arcs() {
            let cu = comp_of[u].unwrap();
            let cv = comp_of[v].unwrap();
            if cu != cv && cond_out[cu].insert(cv) {
                indeg[cv] += 1;
            }
        }
        let mut heap: BTreeSet<(VertexId, usize)> = (0..c)
            .filter(|&i| indeg[i] == 0)
            .map(|i| (components[i][0], i))
            .collect();
        let mut topo_order = Vec::with_capacity(c);
        while let Some(&(key, i)) = heap.iter().next() {
            heap.remove(&(key, i));
            topo_order.push(i);
            for &j in &cond_out[i] {
                indeg[j] -= 1;
                if indeg[j] == 0 {
                    heap.insert((components[j][0], j));
                }
            }
        }
        debug_assert_eq!(topo_order.len(), c);
        SccDecomposition {
            components,
            topo_order,
            component_of: comp_of,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Backward,
}

/// Strong component partition plus a topological order of the condensation.
#[derive(Debug, Clone)]
pub struct SccDecomposition {
    /// Vertex sets, each sorted ascending.
    pub components: Vec<Vec<VertexId>>,
    /// Permutation of component indices; arcs only go forward along it.
    pub topo_order: Vec<usize>,
    /// Component index per vertex id; `None` for masked vertices.
    pub component_of: Vec<Option<usize>>,
}

impl SccDecomposition {
    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn max_component_size(&self) -> usize {
        self.components.iter().map(|c| c.len()).max().unwrap_or(0)
    }

    /// Position of each component in `topo_order`.
    pub fn topo_position(&self) -> Vec<usize> {
        let mut pos = vec![0usize; self.components.len()];
        for (p, &c) in self.topo_order.iter().enumerate() {
            pos[c] = p;
        }
        pos
    }
}
