//! Command-line front end: solve, oracle, gen, verify, transform, bench.
//!
//! Exit codes: 0 solution found / success, 1 proven infeasible (or failed
//! verification / benchmark disagreement), 2 input error, 3 resource or
//! limit error.

pub mod format;
pub mod report;

use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use sccd_core::bounded_scc::{
    check_bssc, solve_bsscad, solve_bsscvd, transform_arc_to_vertex, transform_vertex_to_arc,
};
use sccd_core::graph::MultiDigraph;
use sccd_core::one_out_regular::{check_oor, line_graph_transform, solve_oorad, solve_oorvd};
use sccd_core::oracle::{brute_force, planted_instance, random_graph, DEFAULT_SUBSET_LIMIT};
use sccd_core::separators::SeparatorError;
use sccd_core::skew::SkewBackend;
use sccd_core::{
    CoveringMode, DeletionMode, DeletionSet, ProblemInstance, ProblemKind, SolveConfig, SolveError,
    SolveStats,
};

use format::{parse_arc_solution, parse_graph, parse_vertex_solution, serialize_graph};
use report::SolveReport;

pub const EXIT_FOUND: i32 = 0;
pub const EXIT_INFEASIBLE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_LIMIT: i32 = 3;

#[derive(Parser)]
#[command(
    name = "sccd",
    version,
    about = "Exact solvers for bounded-size strong component and 1-out-regular deletion"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Solve an instance exactly at the given budget
    Solve(SolveArgs),
    /// Run the brute-force reference solver
    Oracle(OracleArgs),
    /// Generate a random or planted instance file
    Gen(GenArgs),
    /// Check a claimed solution against the problem definition
    Verify(VerifyArgs),
    /// Apply one of the arc/vertex parameter transformations
    Transform(TransformArgs),
    /// Run solver and oracle over a corpus with expected results
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ProblemArg {
    Dfvs,
    Bsscvd,
    Bsscad,
    Oorvd,
    Oorad,
}

impl ProblemArg {
    fn kind(self) -> ProblemKind {
        match self {
            ProblemArg::Dfvs | ProblemArg::Bsscvd | ProblemArg::Bsscad => ProblemKind::BoundedScc,
            ProblemArg::Oorvd | ProblemArg::Oorad => ProblemKind::OneOutRegular,
        }
    }

    fn mode(self) -> DeletionMode {
        match self {
            ProblemArg::Dfvs | ProblemArg::Bsscvd | ProblemArg::Oorvd => DeletionMode::Vertex,
            ProblemArg::Bsscad | ProblemArg::Oorad => DeletionMode::Arc,
        }
    }

    fn name(self) -> &'static str {
        match self {
            ProblemArg::Dfvs => "dfvs",
            ProblemArg::Bsscvd => "bsscvd",
            ProblemArg::Bsscad => "bsscad",
            ProblemArg::Oorvd => "oorvd",
            ProblemArg::Oorad => "oorad",
        }
    }

    /// Effective component bound: dfvs pins s = 1, the bounded problems
    /// require s, the 1-out-regular problems reject it.
    fn resolve_s(self, s: Option<usize>) -> Result<Option<usize>, String> {
        match self {
            ProblemArg::Dfvs => match s {
                None | Some(1) => Ok(Some(1)),
                Some(other) => Err(format!("dfvs is the s = 1 case; got --s {other}")),
            },
            ProblemArg::Bsscvd | ProblemArg::Bsscad => match s {
                Some(s) if s >= 1 => Ok(Some(s)),
                Some(_) => Err("--s must be at least 1".into()),
                None => Err(format!("--s is required for {}", self.name())),
            },
            ProblemArg::Oorvd | ProblemArg::Oorad => match s {
                None => Ok(None),
                Some(_) => Err(format!("{} takes no --s", self.name())),
            },
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CoveringArg {
    Exhaustive,
    Randomized,
    None,
}

impl From<CoveringArg> for CoveringMode {
    fn from(c: CoveringArg) -> CoveringMode {
        match c {
            CoveringArg::Exhaustive => CoveringMode::Exhaustive,
            CoveringArg::Randomized => CoveringMode::Randomized,
            CoveringArg::None => CoveringMode::None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BackendArg {
    Brute,
    Fpt,
}

impl From<BackendArg> for SkewBackend {
    fn from(b: BackendArg) -> SkewBackend {
        match b {
            BackendArg::Brute => SkewBackend::Brute,
            BackendArg::Fpt => SkewBackend::Fpt,
        }
    }
}

#[derive(Args)]
struct SolveArgs {
    #[arg(long, value_enum)]
    problem: ProblemArg,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    s: Option<usize>,
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_enum, default_value = "exhaustive")]
    covering: CoveringArg,
    #[arg(long, default_value_t = 8)]
    covering_retries: usize,
    #[arg(long, value_enum, default_value = "fpt")]
    skew_backend: BackendArg,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct OracleArgs {
    #[arg(long, value_enum)]
    problem: ProblemArg,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    s: Option<usize>,
    #[arg(long)]
    input: PathBuf,
    #[arg(long, default_value_t = DEFAULT_SUBSET_LIMIT)]
    limit: usize,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, value_enum)]
    problem: ProblemArg,
    #[arg(long)]
    n: usize,
    /// Arc count for random instances; ignored with --planted
    #[arg(long, default_value_t = 0)]
    m: usize,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    s: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    out: PathBuf,
    /// Build the instance around a known deletion set
    #[arg(long)]
    planted: bool,
    /// Also write a `.expected` sidecar with the oracle verdict
    #[arg(long)]
    expected: bool,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    problem: ProblemArg,
    #[arg(long)]
    s: Option<usize>,
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    solution: PathBuf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TransformKind {
    /// Bounded-size: arc instance to vertex instance (cliques + subdividers)
    BsscArcToVertex,
    /// Bounded-size: vertex instance to arc instance (vertex splitting)
    BsscVertexToArc,
    /// 1-out-regular: arc instance to vertex instance (directed line graph)
    OorLineGraph,
}

#[derive(Args)]
struct TransformArgs {
    #[arg(long, value_enum)]
    kind: TransformKind,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    s: Option<usize>,
    #[arg(long)]
    input: PathBuf,
    /// Output path; stdout when omitted
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long)]
    corpus: PathBuf,
    #[arg(long)]
    json: bool,
}

/// Sidecar schema for bench corpora.
#[derive(Debug, Serialize, Deserialize)]
pub struct Expected {
    pub problem: String,
    pub k: usize,
    #[serde(default)]
    pub s: Option<usize>,
    pub feasible: bool,
}

pub fn run_cli<I, S>(argv: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let benign = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            let _ = write!(out, "{e}");
            return if benign { 0 } else { EXIT_INPUT };
        }
    };
    match cli.cmd {
        Cmd::Solve(a) => cmd_solve(a, out),
        Cmd::Oracle(a) => cmd_oracle(a, out),
        Cmd::Gen(a) => cmd_gen(a, out),
        Cmd::Verify(a) => cmd_verify(a, out),
        Cmd::Transform(a) => cmd_transform(a, out),
        Cmd::Bench(a) => cmd_bench(a, out),
    }
}

fn fail(out: &mut dyn Write, code: i32, msg: &str) -> i32 {
    let _ = writeln!(out, "error: {msg}");
    code
}

fn read_graph(path: &Path, out: &mut dyn Write) -> Result<MultiDigraph, i32> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| fail(out, EXIT_INPUT, &format!("{}: {e}", path.display())))?;
    parse_graph(&text).map_err(|e| fail(out, EXIT_INPUT, &format!("{}: {e}", path.display())))
}

fn solve_error_code(e: &SolveError) -> i32 {
    match e {
        SolveError::Graph(_) => EXIT_INPUT,
        SolveError::Separator(SeparatorError::Graph(_)) => EXIT_INPUT,
        SolveError::Separator(SeparatorError::CoveringBudget { .. }) => EXIT_LIMIT,
        SolveError::OracleBudget { .. } => EXIT_LIMIT,
    }
}

fn dispatch_solver(
    problem: ProblemArg,
    g: &MultiDigraph,
    k: usize,
    s: Option<usize>,
    cfg: &SolveConfig,
    stats: &mut SolveStats,
) -> Result<Option<DeletionSet>, SolveError> {
    let sol = match problem.mode() {
        DeletionMode::Vertex => match problem.kind() {
            ProblemKind::BoundedScc => {
                solve_bsscvd(g, k, s.expect("s resolved"), cfg, stats)?.map(DeletionSet::Vertices)
            }
            ProblemKind::OneOutRegular => solve_oorvd(g, k, cfg, stats)?.map(DeletionSet::Vertices),
        },
        DeletionMode::Arc => match problem.kind() {
            ProblemKind::BoundedScc => {
                solve_bsscad(g, k, s.expect("s resolved"), cfg, stats)?.map(DeletionSet::Arcs)
            }
            ProblemKind::OneOutRegular => solve_oorad(g, k, cfg, stats)?.map(DeletionSet::Arcs),
        },
    };
    Ok(sol)
}

fn check_solution(
    problem: ProblemArg,
    g: &MultiDigraph,
    s: Option<usize>,
    sol: &DeletionSet,
) -> bool {
    match problem.kind() {
        ProblemKind::BoundedScc => check_bssc(g, s.expect("s resolved"), sol).unwrap_or(false),
        ProblemKind::OneOutRegular => check_oor(g, sol).unwrap_or(false),
    }
}

fn cmd_solve(a: SolveArgs, out: &mut dyn Write) -> i32 {
    let s = match a.problem.resolve_s(a.s) {
        Ok(s) => s,
        Err(msg) => return fail(out, EXIT_INPUT, &msg),
    };
    let g = match read_graph(&a.input, out) {
        Ok(g) => g,
        Err(code) => return code,
    };
    let cfg = SolveConfig {
        covering: a.covering.into(),
        covering_retries: a.covering_retries,
        seed: a.seed,
        skew_backend: a.skew_backend.into(),
    };
    let mut stats = SolveStats::default();
    let started = Instant::now();
    let solved = dispatch_solver(a.problem, &g, a.k, s, &cfg, &mut stats);
    let wall_ms = started.elapsed().as_millis() as u64;
    let solution = match solved {
        Ok(sol) => sol,
        Err(e) => return fail(out, solve_error_code(&e), &e.to_string()),
    };
    if let Some(sol) = &solution {
        // every emitted solution is re-verified by the problem checker
        assert!(
            check_solution(a.problem, &g, s, sol),
            "emitted solution failed its checker"
        );
    }
    let report = SolveReport::build(
        a.problem.name(),
        &g,
        a.k,
        s.filter(|_| a.problem.kind() == ProblemKind::BoundedScc),
        if a.problem.mode() == DeletionMode::Vertex {
            "vertex"
        } else {
            "arc"
        },
        solution.as_ref(),
        &stats,
        wall_ms,
        &cfg,
    );
    let _ = if a.json {
        writeln!(out, "{}", report.to_json())
    } else {
        write!(out, "{}", report.to_table())
    };
    if solution.is_some() {
        EXIT_FOUND
    } else {
        EXIT_INFEASIBLE
    }
}

fn cmd_oracle(a: OracleArgs, out: &mut dyn Write) -> i32 {
    let s = match a.problem.resolve_s(a.s) {
        Ok(s) => s,
        Err(msg) => return fail(out, EXIT_INPUT, &msg),
    };
    let g = match read_graph(&a.input, out) {
        Ok(g) => g,
        Err(code) => return code,
    };
    let inst = ProblemInstance {
        graph: g.clone(),
        problem: a.problem.kind(),
        budget: a.k,
        max_component: s,
        mode: a.problem.mode(),
    };
    let started = Instant::now();
    let solved = brute_force(&inst, a.limit);
    let wall_ms = started.elapsed().as_millis() as u64;
    let solution = match solved {
        Ok(sol) => sol,
        Err(e) => return fail(out, solve_error_code(&e), &e.to_string()),
    };
    let cfg = SolveConfig::default();
    let report = SolveReport::build(
        a.problem.name(),
        &g,
        a.k,
        s.filter(|_| a.problem.kind() == ProblemKind::BoundedScc),
        if a.problem.mode() == DeletionMode::Vertex {
            "vertex"
        } else {
            "arc"
        },
        solution.as_ref(),
        &SolveStats::default(),
        wall_ms,
        &cfg,
    );
    let _ = if a.json {
        writeln!(out, "{}", report.to_json())
    } else {
        write!(out, "{}", report.to_table())
    };
    if solution.is_some() {
        EXIT_FOUND
    } else {
        EXIT_INFEASIBLE
    }
}

fn cmd_gen(a: GenArgs, out: &mut dyn Write) -> i32 {
    let s = match a.problem.resolve_s(a.s) {
        Ok(s) => s,
        Err(msg) => return fail(out, EXIT_INPUT, &msg),
    };
    if a.n == 0 {
        return fail(out, EXIT_INPUT, "--n must be positive");
    }
    let graph = if a.planted {
        if a.n <= a.k {
            return fail(out, EXIT_INPUT, "--planted needs n > k");
        }
        planted_instance(a.n, a.k, s, a.seed, a.problem.kind(), a.problem.mode())
            .instance
            .graph
    } else {
        random_graph(a.n, a.m, a.seed)
    };
    let text = serialize_graph(&graph);
    if let Err(e) = std::fs::write(&a.out, &text) {
        return fail(out, EXIT_INPUT, &format!("{}: {e}", a.out.display()));
    }
    let _ = writeln!(out, "wrote {}", a.out.display());
    if a.expected {
        let feasible = if a.planted {
            true
        } else {
            let inst = ProblemInstance {
                graph,
                problem: a.problem.kind(),
                budget: a.k,
                max_component: s,
                mode: a.problem.mode(),
            };
            match brute_force(&inst, DEFAULT_SUBSET_LIMIT) {
                Ok(sol) => sol.is_some(),
                Err(e) => return fail(out, solve_error_code(&e), &e.to_string()),
            }
        };
        let expected = Expected {
            problem: a.problem.name().to_string(),
            k: a.k,
            s,
            feasible,
        };
        let sidecar = a.out.with_extension("expected");
        let body = serde_json::to_string_pretty(&expected).expect("sidecar serializes");
        if let Err(e) = std::fs::write(&sidecar, body) {
            return fail(out, EXIT_INPUT, &format!("{}: {e}", sidecar.display()));
        }
        let _ = writeln!(out, "wrote {}", sidecar.display());
    }
    EXIT_FOUND
}

fn cmd_verify(a: VerifyArgs, out: &mut dyn Write) -> i32 {
    let s = match a.problem.resolve_s(a.s) {
        Ok(s) => s,
        Err(msg) => return fail(out, EXIT_INPUT, &msg),
    };
    let g = match read_graph(&a.input, out) {
        Ok(g) => g,
        Err(code) => return code,
    };
    let text = match std::fs::read_to_string(&a.solution) {
        Ok(t) => t,
        Err(e) => return fail(out, EXIT_INPUT, &format!("{}: {e}", a.solution.display())),
    };
    let sol = match a.problem.mode() {
        DeletionMode::Vertex => parse_vertex_solution(&text, &g).map(DeletionSet::Vertices),
        DeletionMode::Arc => parse_arc_solution(&text, &g).map(DeletionSet::Arcs),
    };
    let sol = match sol {
        Ok(sol) => sol,
        Err(msg) => return fail(out, EXIT_INPUT, &format!("{}: {msg}", a.solution.display())),
    };
    if check_solution(a.problem, &g, s, &sol) {
        let _ = writeln!(out, "valid: {} deletions", sol.len());
        EXIT_FOUND
    } else {
        let _ = writeln!(out, "invalid solution");
        EXIT_INFEASIBLE
    }
}

fn cmd_transform(a: TransformArgs, out: &mut dyn Write) -> i32 {
    let g = match read_graph(&a.input, out) {
        Ok(g) => g,
        Err(code) => return code,
    };
    let need_s = matches!(
        a.kind,
        TransformKind::BsscArcToVertex | TransformKind::BsscVertexToArc
    );
    let s = match (need_s, a.s) {
        (true, Some(s)) if s >= 1 => s,
        (true, _) => return fail(out, EXIT_INPUT, "this transformation requires --s >= 1"),
        (false, Some(_)) => {
            return fail(
                out,
                EXIT_INPUT,
                "the line-graph transformation takes no --s",
            )
        }
        (false, None) => 0,
    };
    let (graph, header) = match a.kind {
        TransformKind::BsscArcToVertex => {
            let loops: Vec<usize> = g
                .arcs()
                .filter(|&(_, u, v)| u == v)
                .map(|(id, _, _)| id)
                .collect();
            let capped = g
                .delete_arcs(loops)
                .expect("live loops")
                .cap_multiplicity(a.k);
            let t = transform_arc_to_vertex(&capped, a.k, s);
            let hdr = format!(
                "c bssc arc instance transformed to vertex mode: k' = {} s' = {}\n",
                t.instance.budget, t.instance.max_component
            );
            (t.instance.graph, hdr)
        }
        TransformKind::BsscVertexToArc => {
            let t = transform_vertex_to_arc(&g, a.k, s);
            let hdr = format!(
                "c bssc vertex instance transformed to arc mode: k' = {} s' = {}\n",
                t.instance.budget, t.instance.max_component
            );
            (t.instance.graph, hdr)
        }
        TransformKind::OorLineGraph => {
            let t = line_graph_transform(&g, a.k);
            let hdr = format!(
                "c 1-out-regular arc instance transformed to vertex mode: k' = {}\n",
                t.instance.budget
            );
            (t.instance.graph, hdr)
        }
    };
    let body = format!("{header}{}", serialize_graph(&graph));
    match &a.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &body) {
                return fail(out, EXIT_INPUT, &format!("{}: {e}", path.display()));
            }
            let _ = writeln!(out, "wrote {}", path.display());
        }
        None => {
            let _ = write!(out, "{body}");
        }
    }
    EXIT_FOUND
}

struct BenchRow {
    file: String,
    expected: Expected,
    n: usize,
    m: usize,
    solver_feasible: bool,
    oracle_feasible: bool,
    witness_ok: bool,
    solver_ms: u64,
    nodes: u64,
}

impl BenchRow {
    fn agrees(&self) -> bool {
        self.solver_feasible == self.expected.feasible
            && self.oracle_feasible == self.expected.feasible
            && self.witness_ok
    }
}

fn cmd_bench(a: BenchArgs, out: &mut dyn Write) -> i32 {
    let entries = match std::fs::read_dir(&a.corpus) {
        Ok(es) => es,
        Err(e) => return fail(out, EXIT_INPUT, &format!("{}: {e}", a.corpus.display())),
    };
    let mut files: Vec<PathBuf> = entries
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().map(|x| x == "gr").unwrap_or(false))
        .collect();
    files.sort();

    let mut rows: Vec<BenchRow> = Vec::new();
    for path in &files {
        let sidecar = path.with_extension("expected");
        let expected: Expected = match std::fs::read_to_string(&sidecar) {
            Ok(t) => match serde_json::from_str(&t) {
                Ok(e) => e,
                Err(e) => return fail(out, EXIT_INPUT, &format!("{}: {e}", sidecar.display())),
            },
            Err(e) => {
                return fail(
                    out,
                    EXIT_INPUT,
                    &format!("{}: missing sidecar: {e}", sidecar.display()),
                )
            }
        };
        let problem = match expected.problem.as_str() {
            "dfvs" => ProblemArg::Dfvs,
            "bsscvd" => ProblemArg::Bsscvd,
            "bsscad" => ProblemArg::Bsscad,
            "oorvd" => ProblemArg::Oorvd,
            "oorad" => ProblemArg::Oorad,
            other => {
                return fail(
                    out,
                    EXIT_INPUT,
                    &format!("{}: unknown problem {other:?}", sidecar.display()),
                )
            }
        };
        let s = match problem.resolve_s(expected.s) {
            Ok(s) => s,
            Err(msg) => return fail(out, EXIT_INPUT, &format!("{}: {msg}", sidecar.display())),
        };
        let g = match read_graph(path, out) {
            Ok(g) => g,
            Err(code) => return code,
        };
        let cfg = SolveConfig::default();
        let mut stats = SolveStats::default();
        let started = Instant::now();
        let solved = match dispatch_solver(problem, &g, expected.k, s, &cfg, &mut stats) {
            Ok(sol) => sol,
            Err(e) => return fail(out, solve_error_code(&e), &e.to_string()),
        };
        let solver_ms = started.elapsed().as_millis() as u64;
        let witness_ok = solved
            .as_ref()
            .map(|sol| check_solution(problem, &g, s, sol))
            .unwrap_or(true);
        let inst = ProblemInstance {
            graph: g.clone(),
            problem: problem.kind(),
            budget: expected.k,
            max_component: s,
            mode: problem.mode(),
        };
        let oracle = match brute_force(&inst, DEFAULT_SUBSET_LIMIT) {
            Ok(sol) => sol,
            Err(e) => return fail(out, solve_error_code(&e), &e.to_string()),
        };
        rows.push(BenchRow {
            file: path.file_name().unwrap().to_string_lossy().into_owned(),
            expected,
            n: g.num_vertices(),
            m: g.num_arcs(),
            solver_feasible: solved.is_some(),
            oracle_feasible: oracle.is_some(),
            witness_ok,
            solver_ms,
            nodes: stats.nodes,
        });
    }

    let mut disagreements: Vec<String> = Vec::new();
    if a.json {
        let json_rows: Vec<serde_json::Value> = rows
            .iter()
            .map(|r| {
                serde_json::json!({
                    "file": r.file,
                    "problem": r.expected.problem,
                    "n": r.n,
                    "m": r.m,
                    "k": r.expected.k,
                    "s": r.expected.s,
                    "expected": r.expected.feasible,
                    "solver": r.solver_feasible,
                    "oracle": r.oracle_feasible,
                    "witness_ok": r.witness_ok,
                    "agree": r.agrees(),
                    "solver_ms": r.solver_ms,
                    "nodes": r.nodes,
                })
            })
            .collect();
        let _ = writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(&serde_json::json!({
                "instances": json_rows,
                "total": rows.len(),
                "disagreements": rows.iter().filter(|r| !r.agrees()).count(),
            }))
            .expect("bench report serializes")
        );
    } else {
        let mut table = String::new();
        let _ = writeln!(
            table,
            "{:<24} {:<7} {:>3} {:>3} {:>2} {:>2} {:>9} {:>7} {:>7} {:>6} {:>8}",
            "file", "problem", "n", "m", "k", "s", "expected", "solver", "oracle", "agree", "ms"
        );
        for r in &rows {
            let _ = writeln!(
                table,
                "{:<24} {:<7} {:>3} {:>3} {:>2} {:>2} {:>9} {:>7} {:>7} {:>6} {:>8}",
                r.file,
                r.expected.problem,
                r.n,
                r.m,
                r.expected.k,
                r.expected
                    .s
                    .map(|s| s.to_string())
                    .unwrap_or_else(|| "-".into()),
                r.expected.feasible,
                r.solver_feasible,
                r.oracle_feasible,
                r.agrees(),
                r.solver_ms,
            );
        }
        let _ = writeln!(
            table,
            "{} instances, {} disagreements, {} ms solving, {} search nodes",
            rows.len(),
            rows.iter().filter(|r| !r.agrees()).count(),
            rows.iter().map(|r| r.solver_ms).sum::<u64>(),
            rows.iter().map(|r| r.nodes).sum::<u64>(),
        );
        let _ = write!(out, "{table}");
    }
    for r in &rows {
        if !r.agrees() {
            disagreements.push(r.file.clone());
        }
    }
    if disagreements.is_empty() {
        EXIT_FOUND
    } else {
        let _ = writeln!(out, "disagreement on: {}", disagreements.join(", "));
        EXIT_INFEASIBLE
    }
}
