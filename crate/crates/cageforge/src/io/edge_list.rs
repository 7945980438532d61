//! Plain-text edge lists: `#`-prefixed header comments carrying the
//! construction parameters, then one `a b` line per edge with a < b, lines
//! sorted lexicographically. A `# n=<count>` header pins the vertex count
//! (isolated tail vertices would otherwise be lost); readers fall back to
//! max id + 1 without it.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EdgeListError {
    #[error("line {line}: expected two integer ids, got {count} token(s)")]
    WrongTokenCount { line: usize, count: usize },
    #[error("line {line}: token {token:?} is not a vertex id")]
    NonIntegerToken { line: usize, token: String },
    #[error("line {line}: id {id} is out of range for declared n={n}")]
    IdOutOfRange { line: usize, id: u32, n: usize },
    #[error("line {line}: {source}")]
    BadEdge { line: usize, source: GraphError },
}

/// Construction parameters recorded in the header. Everything is optional;
/// the writer always emits `n` and `m` itself.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EdgeListMeta {
    pub construction: Option<String>,
    pub q: Option<u32>,
    pub s: Option<BTreeSet<u32>>,
    pub t: Option<BTreeSet<u32>>,
    pub u: Option<u32>,
}

/// Deterministic text rendering of a graph: headers, then the sorted edge
/// lines, trailing newline included.
pub fn write_edge_list(graph: &Graph, meta: &EdgeListMeta) -> String {
    let mut out = String::new();
    if let Some(construction) = &meta.construction {
        writeln!(out, "# construction={construction}").unwrap();
    }
    if let Some(q) = meta.q {
        let mut line = format!("# q={q}");
        if let Some(s) = &meta.s {
            write!(line, " S={}", set_csv(s)).unwrap();
        }
        if let Some(t) = &meta.t {
            write!(line, " T={}", set_csv(t)).unwrap();
        }
        if let Some(u) = meta.u {
            write!(line, " u={u}").unwrap();
        }
        writeln!(out, "{line}").unwrap();
    }
    writeln!(out, "# n={} m={}", graph.n(), graph.m()).unwrap();
    let mut lines: Vec<String> = graph.edges().map(|(a, b)| format!("{a} {b}")).collect();
    lines.sort();
    for line in lines {
        writeln!(out, "{line}").unwrap();
    }
    out
}

fn set_csv(set: &BTreeSet<u32>) -> String {
    if set.is_empty() {
        return "-".into();
    }
    set.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
}

/// A parsed edge-list file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeListFile {
    pub graph: Graph,
    /// Header comment lines, `#` stripped and trimmed.
    pub comments: Vec<String>,
    /// Declared vertex count, when a `n=` header was present.
    pub declared_n: Option<usize>,
    /// Non-fatal findings (currently: deduplicated repeated edges).
    pub warnings: Vec<String>,
}

/// Parses an edge-list file. Repeated edges are deduplicated with a
/// warning; malformed tokens and out-of-range ids are errors with line
/// numbers.
pub fn read_edge_list(input: &str) -> Result<EdgeListFile, EdgeListError> {
    let mut comments = Vec::new();
    let mut declared_n = None;
    let mut warnings = Vec::new();
    let mut edges: Vec<(u32, u32)> = Vec::new();
    let mut seen: BTreeSet<(u32, u32)> = BTreeSet::new();

    for (index, raw) in input.lines().enumerate() {
        let line_no = index + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            let comment = comment.trim();
            for token in comment.split_whitespace() {
                if let Some(n) = token.strip_prefix("n=") {
                    declared_n = n.parse::<usize>().ok().or(declared_n);
                }
            }
            comments.push(comment.to_string());
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(EdgeListError::WrongTokenCount { line: line_no, count: tokens.len() });
        }
        let mut ids = [0u32; 2];
        for (slot, token) in ids.iter_mut().zip(&tokens) {
            *slot = token.parse().map_err(|_| EdgeListError::NonIntegerToken {
                line: line_no,
                token: (*token).to_string(),
            })?;
        }
        let [a, b] = ids;
        if let Some(n) = declared_n {
            for id in ids {
                if id as usize >= n {
                    return Err(EdgeListError::IdOutOfRange { line: line_no, id, n });
                }
            }
        }
        if a == b {
            return Err(EdgeListError::BadEdge { line: line_no, source: GraphError::SelfLoop { v: a } });
        }
        let key = (a.min(b), a.max(b));
        if !seen.insert(key) {
            warnings.push(format!("line {line_no}: duplicate edge {a} {b} ignored"));
            continue;
        }
        edges.push(key);
    }

    let n = declared_n
        .unwrap_or_else(|| edges.iter().map(|&(a, b)| a.max(b) as usize + 1).max().unwrap_or(0));
    let graph = Graph::new(n, &edges)
        .map_err(|source| EdgeListError::BadEdge { line: 0, source })?;
    Ok(EdgeListFile { graph, comments, declared_n, warnings })
}
