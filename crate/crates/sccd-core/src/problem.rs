//! Problem instances shared by the solvers, checkers, and the brute-force
//! oracle.

use std::collections::BTreeSet;

use crate::graph::{ArcId, GraphError, MultiDigraph, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DeletionMode {
    Vertex,
    Arc,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProblemKind {
    BoundedScc,
    OneOutRegular,
}

/// A deletion set in either mode; the mode is carried by the variant.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum DeletionSet {
    Vertices(BTreeSet<VertexId>),
    Arcs(BTreeSet<ArcId>),
}

impl DeletionSet {
    pub fn len(&self) -> usize {
        match self {
            DeletionSet::Vertices(s) => s.len(),
            DeletionSet::Arcs(s) => s.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn mode(&self) -> DeletionMode {
        match self {
            DeletionSet::Vertices(_) => DeletionMode::Vertex,
            DeletionSet::Arcs(_) => DeletionMode::Arc,
        }
    }

    pub fn apply(&self, g: &MultiDigraph) -> Result<MultiDigraph, GraphError> {
        match self {
            DeletionSet::Vertices(s) => g.delete_vertices(s.iter().copied()),
            DeletionSet::Arcs(s) => g.delete_arcs(s.iter().copied()),
        }
    }
}

/// One solver input: a graph plus problem tag, budget, mode, and (for the
/// bounded-size problem) the component size bound.
#[derive(Debug, Clone)]
pub struct ProblemInstance {
    pub graph: MultiDigraph,
    pub problem: ProblemKind,
    pub budget: usize,
    pub max_component: Option<usize>,
    pub mode: DeletionMode,
}
