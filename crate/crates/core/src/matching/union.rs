use serde::Serialize;

use super::{Matching, MatchingError};
use crate::graph::Edge;

/// Which matching an edge of `M ∪ M*` comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    M,
    MStar,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ComponentKind {
    Path,
    Cycle,
}

/// One connected component of the multigraph `M ∪ M*`.
///
/// Vertices are listed in walk order (a cycle does not repeat its first
/// vertex); `edges[i]` joins `vertices[i]` and `vertices[i + 1]` (wrapping
/// for cycles). An edge present in both matchings is a 2-cycle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AlternatingComponent {
    pub kind: ComponentKind,
    pub vertices: Vec<usize>,
    pub edges: Vec<(Edge, Side)>,
    pub is_augmenting: bool,
}

impl AlternatingComponent {
    pub fn count(&self, side: Side) -> usize {
        self.edges.iter().filter(|(_, s)| *s == side).count()
    }

    /// `|C ∩ M*| - |C ∩ M|`.
    pub fn surplus(&self) -> i64 {
        self.count(Side::MStar) as i64 - self.count(Side::M) as i64
    }

    pub fn contains_vertex(&self, v: usize) -> bool {
        self.vertices.contains(&v)
    }

    pub fn edge_list(&self) -> impl Iterator<Item = Edge> + '_ {
        self.edges.iter().map(|&(e, _)| e)
    }
}

/// Splits `M ∪ M*` into alternating paths and cycles. Paths come first,
/// each starting from its smaller endpoint, followed by cycles; both groups
/// are ordered by smallest start vertex.
pub fn decompose_union(
    m: &Matching,
    mstar: &Matching,
) -> Result<Vec<AlternatingComponent>, MatchingError> {
    let n = m.vertex_count();
    if mstar.vertex_count() != n {
        return Err(MatchingError::VertexCountMismatch(n, mstar.vertex_count()));
    }
    let shared = |v: usize| m.mate(v).is_some() && m.mate(v) == mstar.mate(v);
    let degree = |v: usize| {
        if shared(v) {
            0
        } else {
            m.is_matched(v) as usize + mstar.is_matched(v) as usize
        }
    };

    let mut visited = vec![false; n];
    let mut paths = Vec::new();
    let mut cycles = Vec::new();

    // Walks from `start` leaving along `side` until it stops or returns.
    let walk = |start: usize, first: Side, visited: &mut Vec<bool>| {
        let mut vertices = vec![start];
        let mut edges = Vec::new();
        visited[start] = true;
        let mut at = start;
        let mut side = first;
        loop {
            let next = match side {
                Side::M => m.mate(at),
                Side::MStar => mstar.mate(at),
            };
            let Some(next) = next else { break };
            edges.push((Edge::new(at, next), side));
            if next == start {
                break;
            }
            visited[next] = true;
            vertices.push(next);
            at = next;
            side = match side {
                Side::M => Side::MStar,
                Side::MStar => Side::M,
            };
        }
        (vertices, edges)
    };

    for v in 0..n {
        if shared(v) && v < m.mate(v).unwrap() {
            let u = m.mate(v).unwrap();
            visited[v] = true;
            visited[u] = true;
            let e = Edge::new(v, u);
            cycles.push(AlternatingComponent {
                kind: ComponentKind::Cycle,
                vertices: vec![v, u],
                edges: vec![(e, Side::M), (e, Side::MStar)],
                is_augmenting: false,
            });
        }
    }
    for v in 0..n {
        if visited[v] || degree(v) != 1 {
            continue;
        }
        let first = if m.is_matched(v) {
            Side::M
        } else {
            Side::MStar
        };
        let (vertices, edges) = walk(v, first, &mut visited);
        let is_augmenting = edges.first().map(|e| e.1) == Some(Side::MStar)
            && edges.last().map(|e| e.1) == Some(Side::MStar);
        paths.push(AlternatingComponent {
            kind: ComponentKind::Path,
            vertices,
            edges,
            is_augmenting,
        });
    }
    for v in 0..n {
        if visited[v] || degree(v) != 2 {
            continue;
        }
        let (vertices, edges) = walk(v, Side::M, &mut visited);
        cycles.push(AlternatingComponent {
            kind: ComponentKind::Cycle,
            vertices,
            edges,
            is_augmenting: false,
        });
    }
    cycles.sort_by_key(|c| c.vertices[0]);
    paths.extend(cycles);
    Ok(paths)
}
