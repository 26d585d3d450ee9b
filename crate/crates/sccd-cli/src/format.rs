//! Text instance format.
//!
//! Comment lines start with `c`; the header is `p mdigraph <n> <m>`; then
//! exactly m lines `a <u> <v>` with 1-based endpoints. Repeated lines encode
//! parallel arcs, `u = v` a self-loop. Serialization is bit-exact: header,
//! then arcs in arc-id order, LF endings.

use std::collections::BTreeSet;

use thiserror::Error;

use sccd_core::graph::MultiDigraph;
use sccd_core::{ArcId, VertexId};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: expected header `p mdigraph <n> <m>`")]
    BadHeader { line: usize },
    #[error("line {line}: expected arc line `a <u> <v>`")]
    BadArc { line: usize },
    #[error("line {line}: vertex id {id} out of range 1..={n}")]
    IdOutOfRange { line: usize, id: usize, n: usize },
    #[error("expected {expected} arcs, found {found}")]
    ArcCountMismatch { expected: usize, found: usize },
    #[error("line {line}: content after the declared arc count")]
    TrailingContent { line: usize },
}

pub fn parse_graph(text: &str) -> Result<MultiDigraph, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut arcs: Vec<(VertexId, VertexId)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('c') {
            continue;
        }
        match header {
            None => {
                let mut it = trimmed.split_whitespace();
                let ok = it.next() == Some("p") && it.next() == Some("mdigraph");
                let n = it.next().and_then(|t| t.parse::<usize>().ok());
                let m = it.next().and_then(|t| t.parse::<usize>().ok());
                match (ok, n, m, it.next()) {
                    (true, Some(n), Some(m), None) => header = Some((n, m)),
                    _ => return Err(ParseError::BadHeader { line }),
                }
            }
            Some((n, m)) => {
                if arcs.len() == m {
                    return Err(ParseError::TrailingContent { line });
                }
                let mut it = trimmed.split_whitespace();
                if it.next() != Some("a") {
                    return Err(ParseError::BadArc { line });
                }
                let u = it.next().and_then(|t| t.parse::<usize>().ok());
                let v = it.next().and_then(|t| t.parse::<usize>().ok());
                let (u, v) = match (u, v, it.next()) {
                    (Some(u), Some(v), None) => (u, v),
                    _ => return Err(ParseError::BadArc { line }),
                };
                for id in [u, v] {
                    if id == 0 || id > n {
                        return Err(ParseError::IdOutOfRange { line, id, n });
                    }
                }
                arcs.push((u - 1, v - 1));
            }
        }
    }
    let (n, m) = header.ok_or(ParseError::BadHeader { line: 0 })?;
    if arcs.len() != m {
        return Err(ParseError::ArcCountMismatch {
            expected: m,
            found: arcs.len(),
        });
    }
    Ok(MultiDigraph::new(n, arcs).expect("endpoints validated"))
}

pub fn serialize_graph(g: &MultiDigraph) -> String {
    let mut out = format!("p mdigraph {} {}\n", g.id_limit(), g.num_arcs());
    for (_, u, v) in g.arcs() {
        out.push_str(&format!("a {} {}\n", u + 1, v + 1));
    }
    out
}

/// Occurrence-indexed arc reference `(u, v, j)`: the j-th (0-based, in
/// arc-id order) parallel arc from u to v, endpoints 1-based.
pub fn arc_to_triple(g: &MultiDigraph, arc: ArcId) -> (usize, usize, usize) {
    let (u, v) = g.arc_ends(arc).expect("live arc");
    let j = g
        .arcs()
        .filter(|&(id, a, b)| a == u && b == v && id < arc)
        .count();
    (u + 1, v + 1, j)
}

pub fn triple_to_arc(g: &MultiDigraph, u1: usize, v1: usize, j: usize) -> Option<ArcId> {
    if u1 == 0 || v1 == 0 {
        return None;
    }
    let (u, v) = (u1 - 1, v1 - 1);
    g.arcs()
        .filter(|&(_, a, b)| a == u && b == v)
        .map(|(id, _, _)| id)
        .nth(j)
}

/// Solution files: for vertex problems whitespace-separated 1-based vertex
/// ids; for arc problems one `u v j` triple per line. `c` lines are comments.
pub fn parse_vertex_solution(text: &str, g: &MultiDigraph) -> Result<BTreeSet<VertexId>, String> {
    let mut out = BTreeSet::new();
    for raw in text.lines() {
        let t = raw.trim();
        if t.is_empty() || t.starts_with('c') {
            continue;
        }
        for tok in t.split_whitespace() {
            let id: usize = tok.parse().map_err(|_| format!("bad vertex id {tok:?}"))?;
            if id == 0 || id > g.id_limit() {
                return Err(format!("vertex id {id} out of range"));
            }
            out.insert(id - 1);
        }
    }
    Ok(out)
}

pub fn parse_arc_solution(text: &str, g: &MultiDigraph) -> Result<BTreeSet<ArcId>, String> {
    let mut out = BTreeSet::new();
    for raw in text.lines() {
        let t = raw.trim();
        if t.is_empty() || t.starts_with('c') {
            continue;
        }
        let nums: Vec<usize> = t
            .split_whitespace()
            .map(|tok| {
                tok.parse::<usize>()
                    .map_err(|_| format!("bad number {tok:?}"))
            })
            .collect::<Result<_, _>>()?;
        let [u, v, j] = nums[..] else {
            return Err(format!("expected `u v j`, got {t:?}"));
        };
        let arc = triple_to_arc(g, u, v, j)
            .ok_or_else(|| format!("no arc ({u}, {v}) with occurrence {j}"))?;
        out.insert(arc);
    }
    Ok(out)
}
