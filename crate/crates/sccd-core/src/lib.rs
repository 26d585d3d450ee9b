//! Exact parameterized solvers for two generalizations of directed feedback
//! vertex set: bounded-size strong component deletion and 1-out-regular
//! deletion, in vertex and arc variants, over directed multigraphs.

pub mod bounded_scc;
pub mod config;
pub mod graph;
pub mod one_out_regular;
pub mod oracle;
pub mod problem;
pub mod separators;
pub mod skew;

pub use bounded_scc::{
    build_skew_system, check_bssc, construct_candidate_vectors, solve_bsscad, solve_bsscvd,
    transform_arc_to_vertex, transform_vertex_to_arc, BsscInstance, CandidateVector, SplitGraph,
};
pub use config::{SolveConfig, SolveError, SolveStats};
pub use graph::{ArcId, Direction, GraphError, MultiDigraph, SccDecomposition, VertexId};
pub use one_out_regular::{
    check_oor, contains_forbidden, detect_fbad, line_graph_transform, recover_last_component,
    solve_oorad, solve_oorvd, torso, ArcQuality, OorInstance, TorsoGraph,
};
pub use oracle::{
    brute_force, check_instance, planted_instance, random_graph, random_instance, PlantedInstance,
    DEFAULT_SUBSET_LIMIT,
};
pub use problem::{DeletionMode, DeletionSet, ProblemInstance, ProblemKind};
pub use separators::{
    build_covering_family, build_covering_family_counted, enumerate_important_separators,
    is_separator, min_vertex_cut, shadow, CoveringFamily, CoveringMode, CutOutcome, Separator,
    SeparatorError,
};
pub use skew::{is_skew_separator, solve_skew, SkewBackend, SkewSystem};
