//! Matchings: the blossom maximum matching, an exhaustive oracle, greedy
//! maximal matchings and the path/cycle structure of `M ∪ M*`.

mod blossom;
mod brute;
mod union;

use thiserror::Error;

use crate::graph::{Edge, Graph};

pub use blossom::{maximum_matching, maximum_matching_seeded, AugmentingSearch};
pub use brute::{brute_force_matching_number, brute_force_maximum_matching, BRUTE_FORCE_LIMIT};
pub use union::{decompose_union, AlternatingComponent, ComponentKind, Side};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatchingError {
    #[error("{0} is not an edge of the host graph")]
    NotInHost(Edge),
    #[error("vertex {0} is covered by two matching edges")]
    VertexReused(usize),
    #[error("matchings live on different vertex counts ({0} vs {1})")]
    VertexCountMismatch(usize, usize),
    #[error("graph has {n} vertices; the exhaustive oracle supports at most {limit}")]
    TooLargeForOracle { n: usize, limit: usize },
}

/// A set of vertex-disjoint edges, stored as a mate array.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    mate: Vec<Option<usize>>,
}

impl Matching {
    pub fn empty(n: usize) -> Self {
        Matching {
            mate: vec![None; n],
        }
    }

    /// Validates that every edge is in `host` and no vertex is reused.
    pub fn from_edges<I>(host: &Graph, edges: I) -> Result<Self, MatchingError>
    where
        I: IntoIterator<Item = Edge>,
    {
        let mut mate = vec![None; host.vertex_count()];
        for e in edges {
            if !host.contains(e) {
                return Err(MatchingError::NotInHost(e));
            }
            for x in e.endpoints() {
                if mate[x].is_some() {
                    return Err(MatchingError::VertexReused(x));
                }
            }
            mate[e.u] = Some(e.v);
            mate[e.v] = Some(e.u);
        }
        Ok(Matching { mate })
    }

    pub(crate) fn from_mates(mate: Vec<Option<usize>>) -> Self {
        debug_assert!(mate
            .iter()
            .enumerate()
            .all(|(v, m)| m.is_none_or(|u| mate[u] == Some(v))));
        Matching { mate }
    }

    pub fn vertex_count(&self) -> usize {
        self.mate.len()
    }

    /// Removes the edge covering `v`, if any.
    pub fn unmatch(&mut self, v: usize) {
        if let Some(u) = self.mate[v].take() {
            self.mate[u] = None;
        }
    }

    /// Number of edges; this is `μ` when the matching is maximum.
    pub fn size(&self) -> usize {
        self.mate
            .iter()
            .enumerate()
            .filter(|&(v, m)| m.is_some_and(|u| v < u))
            .count()
    }

    pub fn mate(&self, v: usize) -> Option<usize> {
        self.mate[v]
    }

    pub fn mates(&self) -> &[Option<usize>] {
        &self.mate
    }

    pub fn is_matched(&self, v: usize) -> bool {
        self.mate[v].is_some()
    }

    pub fn contains(&self, e: Edge) -> bool {
        self.mate[e.u] == Some(e.v)
    }

    /// Edges in canonical order.
    pub fn edges(&self) -> Vec<Edge> {
        self.mate
            .iter()
            .enumerate()
            .filter_map(|(v, m)| m.filter(|&u| v < u).map(|u| Edge::new(v, u)))
            .collect()
    }

    /// True when every edge is in `host` and mates are symmetric.
    pub fn is_valid_in(&self, host: &Graph) -> bool {
        self.mate.len() == host.vertex_count()
            && self.mate.iter().enumerate().all(|(v, m)| match *m {
                None => true,
                Some(u) => u < self.mate.len() && self.mate[u] == Some(v) && host.has_edge(u, v),
            })
    }

    /// No edge of `host` has both endpoints unmatched.
    pub fn is_maximal_in(&self, host: &Graph) -> bool {
        host.edges()
            .iter()
            .all(|e| self.is_matched(e.u) || self.is_matched(e.v))
    }
}

/// Greedy maximal matching. Edges of `priority` are scanned first in the
/// given order, then the rest of `g` in canonical order, so the result is
/// always maximal. Entries of `priority` that are not edges of `g` are skipped.
pub fn maximal_matching(g: &Graph, priority: &[Edge]) -> Matching {
    let mut mate = vec![None; g.vertex_count()];
    for &e in priority.iter().chain(g.edges()) {
        if g.contains(e) && mate[e.u].is_none() && mate[e.v].is_none() {
            mate[e.u] = Some(e.v);
            mate[e.v] = Some(e.u);
        }
    }
    Matching::from_mates(mate)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path4() -> Graph {
        Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap()
    }

    #[test]
    fn validation() {
        let g = path4();
        assert_eq!(
            Matching::from_edges(&g, [Edge::new(0, 1), Edge::new(1, 2)]),
            Err(MatchingError::VertexReused(1))
        );
        assert_eq!(
            Matching::from_edges(&g, [Edge::new(0, 2)]),
            Err(MatchingError::NotInHost(Edge::new(0, 2)))
        );
        let m = Matching::from_edges(&g, [Edge::new(2, 3), Edge::new(0, 1)]).unwrap();
        assert_eq!(m.size(), 2);
        assert_eq!(m.edges(), vec![Edge::new(0, 1), Edge::new(2, 3)]);
        assert!(m.is_valid_in(&g));
    }

    #[test]
    fn maximal_half_of_maximum_on_path() {
        let g = path4();
        let m = maximal_matching(&g, &[Edge::new(1, 2)]);
        assert_eq!(m.edges(), vec![Edge::new(1, 2)]);
        assert!(m.is_maximal_in(&g));
        assert_eq!(maximum_matching(&g).size(), 2);
    }

    #[test]
    fn maximal_on_triangle_and_empty() {
        let k3 = Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        for order in [
            vec![Edge::new(0, 1)],
            vec![Edge::new(1, 2)],
            vec![Edge::new(0, 2)],
        ] {
            assert_eq!(maximal_matching(&k3, &order).size(), 1);
        }
        assert_eq!(maximal_matching(&Graph::empty(5), &[]).size(), 0);
    }
}
