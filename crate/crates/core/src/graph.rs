//! Simple undirected graphs over dense vertex indices `0..n`.
//!
//! Subgraphs (an EDCS `H`, an induced `G[U]`, the union of two edge sets)
//! are themselves [`Graph`]s on the same vertex count, so a vertex keeps its
//! identity across every structure built from the same base graph.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("endpoint {vertex} out of range for graph with {n} vertices")]
    OutOfRange { vertex: usize, n: usize },
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("({0}, {1}) is not an edge of the graph")]
    MissingEdge(usize, usize),
    #[error("vertex counts differ: {0} vs {1}")]
    VertexCountMismatch(usize, usize),
}

/// An unordered vertex pair stored with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
}

impl Edge {
    /// Normalizes the endpoint order. Self-loops are representable here and
    /// rejected when the edge is inserted into a [`Graph`].
    pub fn new(a: usize, b: usize) -> Self {
        if a <= b {
            Edge { u: a, v: b }
        } else {
            Edge { u: b, v: a }
        }
    }

    pub fn endpoints(self) -> [usize; 2] {
        [self.u, self.v]
    }

    pub fn touches(self, x: usize) -> bool {
        self.u == x || self.v == x
    }

    pub fn shares_endpoint(self, other: Edge) -> bool {
        other.touches(self.u) || other.touches(self.v)
    }

    /// The endpoint that is not `x`. `x` must be an endpoint.
    pub fn other(self, x: usize) -> usize {
        debug_assert!(self.touches(x));
        if self.u == x {
            self.v
        } else {
            self.u
        }
    }
}

impl From<(usize, usize)> for Edge {
    fn from((a, b): (usize, usize)) -> Self {
        Edge::new(a, b)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.u, self.v)
    }
}

/// Immutable simple graph. Edges are kept sorted lexicographically and each
/// adjacency list is sorted, so `has_edge` is a binary search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
        }
    }

    pub fn from_edges<I, E>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = E>,
        E: Into<Edge>,
    {
        let mut list: Vec<Edge> = Vec::new();
        for e in edges {
            let e = e.into();
            if e.u == e.v {
                return Err(GraphError::SelfLoop(e.u));
            }
            if e.v >= n {
                return Err(GraphError::OutOfRange { vertex: e.v, n });
            }
            list.push(e);
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].u, w[0].v));
        }
        Ok(Self::from_sorted_unique(n, list))
    }

    /// Like [`Graph::from_edges`] but silently drops duplicates. Used for
    /// unions of edge sets that may overlap.
    pub fn from_edges_dedup<I, E>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = E>,
        E: Into<Edge>,
    {
        let mut list: Vec<Edge> = edges.into_iter().map(Into::into).collect();
        list.sort_unstable();
        list.dedup();
        Self::from_edges(n, list)
    }

    fn from_sorted_unique(n: usize, edges: Vec<Edge>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for e in &edges {
            adj[e.u].push(e.v);
            adj[e.v].push(e.u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in canonical (lexicographic, `u < v`) order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n && b < self.n && self.adj[a].binary_search(&b).is_ok()
    }

    pub fn contains(&self, e: Edge) -> bool {
        self.has_edge(e.u, e.v)
    }

    /// `deg(u) + deg(v)` for an edge of this graph.
    pub fn edge_degree(&self, e: Edge) -> Result<usize, GraphError> {
        if !self.contains(e) {
            return Err(GraphError::MissingEdge(e.u, e.v));
        }
        Ok(self.degree(e.u) + self.degree(e.v))
    }

    /// Edge degree of an arbitrary vertex pair measured in this graph; the
    /// pair need not be an edge. This is how P2 of an EDCS is evaluated.
    pub fn pair_degree(&self, e: Edge) -> usize {
        self.degree(e.u) + self.degree(e.v)
    }

    pub fn is_subgraph_of(&self, other: &Graph) -> bool {
        self.n == other.n && self.edges.iter().all(|&e| other.contains(e))
    }

    /// Restriction to the edges with both endpoints in `vertices`. The result
    /// keeps the original vertex count and indices.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<InducedSubgraph, GraphError> {
        let mut member = vec![false; self.n];
        for &v in vertices {
            if v >= self.n {
                return Err(GraphError::OutOfRange {
                    vertex: v,
                    n: self.n,
                });
            }
            member[v] = true;
        }
        let edges = self
            .edges
            .iter()
            .copied()
            .filter(|e| member[e.u] && member[e.v])
            .collect();
        let vertices = (0..self.n).filter(|&v| member[v]).collect();
        Ok(InducedSubgraph {
            graph: Self::from_sorted_unique(self.n, edges),
            vertices,
        })
    }

    /// The graph with every edge at `v` removed (`v` stays as an isolated vertex).
    pub fn without_vertex(&self, v: usize) -> Graph {
        let edges = self
            .edges
            .iter()
            .copied()
            .filter(|e| !e.touches(v))
            .collect();
        Self::from_sorted_unique(self.n, edges)
    }

    /// Edge set union; both graphs must share the vertex count.
    pub fn union(&self, other: &Graph) -> Result<Graph, GraphError> {
        if self.n != other.n {
            return Err(GraphError::VertexCountMismatch(self.n, other.n));
        }
        let mut edges: Vec<Edge> = self
            .edges
            .iter()
            .chain(other.edges.iter())
            .copied()
            .collect();
        edges.sort_unstable();
        edges.dedup();
        Ok(Self::from_sorted_unique(self.n, edges))
    }

    /// Connected components of the subgraph induced by `vertices`, each
    /// sorted, ordered by smallest member.
    pub fn components_within(&self, vertices: &[usize]) -> Vec<Vec<usize>> {
        let mut member = vec![false; self.n];
        for &v in vertices {
            member[v] = true;
        }
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if !member[start] || seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut stack = vec![start];
            while let Some(x) = stack.pop() {
                for &y in &self.adj[x] {
                    if member[y] && !seen[y] {
                        seen[y] = true;
                        comp.push(y);
                        stack.push(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }
}

/// Result of [`Graph::induced_subgraph`]: the subgraph on original indices
/// together with the sorted member list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedSubgraph {
    pub graph: Graph,
    pub vertices: Vec<usize>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k3() -> Graph {
        Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    fn path4() -> Graph {
        Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap()
    }

    #[test]
    fn edge_degrees() {
        assert_eq!(k3().edge_degree(Edge::new(0, 1)), Ok(4));
        assert_eq!(path4().edge_degree(Edge::new(0, 1)), Ok(3));
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(star.edge_degree(Edge::new(0, 3)), Ok(4));
        assert_eq!(
            path4().edge_degree(Edge::new(0, 3)),
            Err(GraphError::MissingEdge(0, 3))
        );
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(Graph::from_edges(2, [(0, 0)]), Err(GraphError::SelfLoop(0)));
        assert_eq!(
            Graph::from_edges(2, [(0, 2)]),
            Err(GraphError::OutOfRange { vertex: 2, n: 2 })
        );
        assert_eq!(
            Graph::from_edges(3, [(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
    }

    #[test]
    fn induced() {
        let sub = k3().induced_subgraph(&[0, 1]).unwrap();
        assert_eq!(sub.graph.edges(), &[Edge::new(0, 1)]);
        assert_eq!(sub.vertices, vec![0, 1]);

        let sub = path4().induced_subgraph(&[0, 2]).unwrap();
        assert_eq!(sub.graph.edge_count(), 0);

        assert_eq!(k3().induced_subgraph(&[0, 1, 2]).unwrap().graph, k3());
        assert!(k3().induced_subgraph(&[3]).is_err());
    }

    #[test]
    fn components() {
        let g = Graph::from_edges(6, [(0, 1), (2, 3), (3, 4)]).unwrap();
        assert_eq!(
            g.components_within(&[0, 1, 2, 3, 4, 5]),
            vec![vec![0, 1], vec![2, 3, 4], vec![5]]
        );
        assert_eq!(g.components_within(&[2, 4]), vec![vec![2], vec![4]]);
    }

    #[test]
    fn union_and_removal() {
        let a = Graph::from_edges(4, [(0, 1), (1, 2)]).unwrap();
        let b = Graph::from_edges(4, [(1, 2), (2, 3)]).unwrap();
        assert_eq!(a.union(&b).unwrap(), path4());
        assert_eq!(path4().without_vertex(1).edges(), &[Edge::new(2, 3)]);
        assert!(a.is_subgraph_of(&path4()));
        assert!(!path4().is_subgraph_of(&a));
    }
}
