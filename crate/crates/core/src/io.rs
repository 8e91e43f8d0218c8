//! Text formats.
//!
//! Graph files: a header line `n m`, then `m` lines `u v` with 0-indexed
//! endpoints. Lines starting with `#` and blank lines are ignored. The
//! canonical form written by [`write_graph`] lists edges sorted with `u < v`.
//!
//! Matching files: a header line `k`, then `k` lines `u v`.

use std::fs;
use std::path::{Path, PathBuf};

use thiserror::Error;

use crate::graph::{Edge, Graph};
use crate::matching::Matching;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    #[error("malformed header (expected `n m`)")]
    MalformedHeader,
    #[error("malformed matching header (expected `k`)")]
    MalformedMatchingHeader,
    #[error("malformed edge line (expected `u v`)")]
    MalformedEdge,
    #[error("endpoint {vertex} out of range for {n} vertices")]
    OutOfRange { vertex: usize, n: usize },
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("header declares {expected} edges but {found} were listed")]
    EdgeCount { expected: usize, found: usize },
    #[error("({0}, {1}) is not an edge of the host graph")]
    NotInHost(usize, usize),
    #[error("vertex {0} is matched twice")]
    VertexReused(usize),
    #[error("header declares {0} vertices but at most {1} are supported")]
    TooManyVertices(usize, usize),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Error)]
pub enum IoError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Parse { path: PathBuf, source: ParseError },
}

const MAX_VERTICES: usize = 1 << 26;

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_pair(line: &str) -> Option<(usize, usize)> {
    let mut it = line.split_whitespace();
    let a = it.next()?.parse().ok()?;
    let b = it.next()?.parse().ok()?;
    if it.next().is_some() {
        return None;
    }
    Some((a, b))
}

fn err(line: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, kind }
}

pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut lines = content_lines(text);
    let (header_line, header) = lines
        .next()
        .ok_or_else(|| err(1, ParseErrorKind::MalformedHeader))?;
    let (n, m) =
        parse_pair(header).ok_or_else(|| err(header_line, ParseErrorKind::MalformedHeader))?;
    if n > MAX_VERTICES {
        return Err(err(
            header_line,
            ParseErrorKind::TooManyVertices(n, MAX_VERTICES),
        ));
    }

    let mut seen = std::collections::HashSet::new();
    let mut edges = Vec::with_capacity(m.min(1 << 20));
    let mut last_line = header_line;
    for (line, content) in lines {
        last_line = line;
        let (a, b) = parse_pair(content).ok_or_else(|| err(line, ParseErrorKind::MalformedEdge))?;
        if a == b {
            return Err(err(line, ParseErrorKind::SelfLoop(a)));
        }
        for x in [a, b] {
            if x >= n {
                return Err(err(line, ParseErrorKind::OutOfRange { vertex: x, n }));
            }
        }
        let e = Edge::new(a, b);
        if !seen.insert(e) {
            return Err(err(line, ParseErrorKind::DuplicateEdge(e.u, e.v)));
        }
        edges.push(e);
    }
    if edges.len() != m {
        return Err(err(
            last_line,
            ParseErrorKind::EdgeCount {
                expected: m,
                found: edges.len(),
            },
        ));
    }
    Ok(Graph::from_edges(n, edges).expect("edges validated while parsing"))
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for e in g.edges() {
        out.push_str(&format!("{} {}\n", e.u, e.v));
    }
    out
}

pub fn load_graph(path: impl AsRef<Path>) -> Result<Graph, IoError> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|source| IoError::Io {
        path: path.to_owned(),
        source,
    })?;
    parse_graph(&text).map_err(|source| IoError::Parse {
        path: path.to_owned(),
        source,
    })
}

pub fn save_graph(path: impl AsRef<Path>, g: &Graph) -> Result<(), IoError> {
    let path = path.as_ref();
    fs::write(path, write_graph(g)).map_err(|source| IoError::Io {
        path: path.to_owned(),
        source,
    })
}

/// Parses a matching file against its host graph.
pub fn parse_matching(text: &str, host: &Graph) -> Result<Matching, ParseError> {
    let mut lines = content_lines(text);
    let (header_line, header) = lines
        .next()
        .ok_or_else(|| err(1, ParseErrorKind::MalformedMatchingHeader))?;
    let k: usize = header
        .parse()
        .map_err(|_| err(header_line, ParseErrorKind::MalformedMatchingHeader))?;

    let n = host.vertex_count();
    let mut used = vec![false; n];
    let mut edges = Vec::new();
    let mut last_line = header_line;
    for (line, content) in lines {
        last_line = line;
        let (a, b) = parse_pair(content).ok_or_else(|| err(line, ParseErrorKind::MalformedEdge))?;
        if a == b {
            return Err(err(line, ParseErrorKind::SelfLoop(a)));
        }
        for x in [a, b] {
            if x >= n {
                return Err(err(line, ParseErrorKind::OutOfRange { vertex: x, n }));
            }
        }
        if !host.has_edge(a, b) {
            let e = Edge::new(a, b);
            return Err(err(line, ParseErrorKind::NotInHost(e.u, e.v)));
        }
        for x in [a, b] {
            if std::mem::replace(&mut used[x], true) {
                return Err(err(line, ParseErrorKind::VertexReused(x)));
            }
        }
        edges.push(Edge::new(a, b));
    }
    if edges.len() != k {
        return Err(err(
            last_line,
            ParseErrorKind::EdgeCount {
                expected: k,
                found: edges.len(),
            },
        ));
    }
    Ok(Matching::from_edges(host, edges).expect("matching validated while parsing"))
}

pub fn write_matching(m: &Matching) -> String {
    let edges = m.edges();
    let mut out = format!("{}\n", edges.len());
    for e in edges {
        out.push_str(&format!("{} {}\n", e.u, e.v));
    }
    out
}
