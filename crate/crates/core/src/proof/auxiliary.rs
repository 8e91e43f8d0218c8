// The auxiliary bipartite graph B = (W, Z, E_B).
//
// W1 holds both endpoints of the T1 edge of each T1 path, W2 the four
// endpoints of the two T2 edges of each T2 path. Z is every non-special
// vertex and Z_A = A. A W2 vertex is joined to each of its H-neighbours in
// Z, a W1 vertex only to its H-neighbours in Z_A. A vertex of V can sit on
// both sides, so B is kept as its own edge list rather than a subgraph.

use super::{PathClassification, PathKind, ProofError};
use crate::gallai_edmonds::GallaiEdmonds;
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuxiliaryB {
    pub w1: Vec<usize>,
    pub w2: Vec<usize>,
    pub z: Vec<usize>,
    pub z_a: Vec<usize>,
    /// `(w, z)` pairs, listed by W vertex then Z vertex.
    pub edges: Vec<(usize, usize)>,
    w_degree: Vec<usize>,
    z_degree: Vec<usize>,
}

impl AuxiliaryB {
    pub fn w_len(&self) -> usize {
        self.w1.len() + self.w2.len()
    }

    pub fn w(&self) -> impl Iterator<Item = usize> + '_ {
        self.w1.iter().chain(&self.w2).copied()
    }

    /// Degree of `v` as a W-side vertex of B.
    pub fn w_degree(&self, v: usize) -> usize {
        self.w_degree[v]
    }

    /// Degree of `v` as a Z-side vertex of B.
    pub fn z_degree(&self, v: usize) -> usize {
        self.z_degree[v]
    }

    /// `deg_B(w) + deg_B(z)` for each edge.
    pub fn edge_degrees(&self) -> impl Iterator<Item = usize> + '_ {
        self.edges
            .iter()
            .map(|&(w, z)| self.w_degree[w] + self.z_degree[z])
    }

    pub fn degree_sum(&self, side: &[usize]) -> usize {
        side.iter().map(|&w| self.w_degree[w]).sum()
    }
}

pub fn build_auxiliary_b(
    g: &Graph,
    h: &Graph,
    ge: &GallaiEdmonds,
    classifications: &[PathClassification],
) -> Result<AuxiliaryB, ProofError> {
    let n = h.vertex_count();
    if g.vertex_count() != n || ge.vertex_count() != n {
        return Err(ProofError::InconsistentWitness(
            "vertex counts differ".into(),
        ));
    }
    if ge.specials().is_none() {
        return Err(crate::gallai_edmonds::GeError::SpecialsMissing.into());
    }

    let mut in_w = vec![false; n];
    let mut w1 = Vec::new();
    let mut w2 = Vec::new();
    for c in classifications {
        let ends = c.witness.endpoints();
        for &x in &ends {
            if x >= n {
                return Err(ProofError::InconsistentWitness(format!(
                    "vertex {x} out of range"
                )));
            }
            if ge.in_a(x) {
                return Err(ProofError::InconsistentWitness(format!(
                    "witness endpoint {x} is in A"
                )));
            }
            if c.kind() == PathKind::T1 && !ge.in_d(x) {
                return Err(ProofError::InconsistentWitness(format!(
                    "T1 endpoint {x} is not in D"
                )));
            }
            if std::mem::replace(&mut in_w[x], true) {
                return Err(ProofError::InconsistentWitness(format!(
                    "vertex {x} is a witness endpoint twice"
                )));
            }
        }
        match c.kind() {
            PathKind::T1 => w1.extend(ends),
            PathKind::T2 => w2.extend(ends),
        }
    }

    let z: Vec<usize> = (0..n).filter(|&v| !ge.is_special(v)).collect();
    let z_a = ge.a_set();

    let mut edges = Vec::new();
    for &w in &w1 {
        edges.extend(
            h.neighbors(w)
                .iter()
                .filter(|&&x| ge.in_a(x))
                .map(|&x| (w, x)),
        );
    }
    for &w in &w2 {
        edges.extend(
            h.neighbors(w)
                .iter()
                .filter(|&&x| !ge.is_special(x))
                .map(|&x| (w, x)),
        );
    }
    let mut w_degree = vec![0; n];
    let mut z_degree = vec![0; n];
    for &(w, x) in &edges {
        w_degree[w] += 1;
        z_degree[x] += 1;
    }
    Ok(AuxiliaryB {
        w1,
        w2,
        z,
        z_a,
        edges,
        w_degree,
        z_degree,
    })
}
