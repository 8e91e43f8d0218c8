//! Seeded instance generators.

use std::fmt;
use std::str::FromStr;

use rand::seq::{index, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Edge, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    GnmRandom,
    BipartiteRandom,
    Path,
    Complete,
    Star,
    /// Disjoint 3-edge paths; the middle edges form a maximal matching of
    /// half the maximum size.
    PlantedTight,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::GnmRandom,
        Family::BipartiteRandom,
        Family::Path,
        Family::Complete,
        Family::Star,
        Family::PlantedTight,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::GnmRandom => "gnm-random",
            Family::BipartiteRandom => "bipartite-random",
            Family::Path => "path",
            Family::Complete => "complete",
            Family::Star => "star",
            Family::PlantedTight => "planted-tight",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = GenerateError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| GenerateError::UnknownFamily(s.to_owned()))
    }
}

/// Edge budget for the random families: an exact count or an independent
/// per-pair probability.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeBudget {
    Count(usize),
    Probability(f64),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GeneratorConfig {
    pub family: Family,
    pub n: usize,
    pub budget: Option<EdgeBudget>,
    pub seed: u64,
}

impl GeneratorConfig {
    pub fn new(family: Family, n: usize) -> Self {
        GeneratorConfig {
            family,
            n,
            budget: None,
            seed: 0,
        }
    }

    pub fn gnm(n: usize, m: usize, seed: u64) -> Self {
        GeneratorConfig {
            family: Family::GnmRandom,
            n,
            budget: Some(EdgeBudget::Count(m)),
            seed,
        }
    }

    pub fn gnp(n: usize, p: f64, seed: u64) -> Self {
        GeneratorConfig {
            family: Family::GnmRandom,
            n,
            budget: Some(EdgeBudget::Probability(p)),
            seed,
        }
    }

    pub fn bipartite(n: usize, p: f64, seed: u64) -> Self {
        GeneratorConfig {
            family: Family::BipartiteRandom,
            n,
            budget: Some(EdgeBudget::Probability(p)),
            seed,
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GenerateError {
    #[error("unknown graph family `{0}`")]
    UnknownFamily(String),
    #[error("{family} needs an edge budget (m or p)")]
    MissingBudget { family: Family },
    #[error("requested {m} edges but only {max} pairs are available")]
    TooManyEdges { m: usize, max: usize },
    #[error("edge probability {0} outside [0, 1]")]
    BadProbability(f64),
    #[error(
        "the planted EDCS gadget needs beta/2 < beta_minus < beta, got ({beta}, {beta_minus})"
    )]
    GadgetParams { beta: usize, beta_minus: usize },
    #[error("{family} needs at least {min} vertices, got {n}")]
    TooFewVertices {
        family: Family,
        n: usize,
        min: usize,
    },
}

/// Left side of the bipartite family: vertices `0..ceil(n/2)`.
pub fn bipartite_left_size(n: usize) -> usize {
    n.div_ceil(2)
}

pub fn generate(cfg: &GeneratorConfig) -> Result<Graph, GenerateError> {
    let n = cfg.n;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let edges: Vec<Edge> = match cfg.family {
        Family::Path => (1..n).map(|v| Edge::new(v - 1, v)).collect(),
        Family::Complete => (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| Edge::new(u, v)))
            .collect(),
        Family::Star => (1..n).map(|v| Edge::new(0, v)).collect(),
        Family::PlantedTight => {
            if n < 4 {
                return Err(GenerateError::TooFewVertices {
                    family: cfg.family,
                    n,
                    min: 4,
                });
            }
            (0..n / 4)
                .flat_map(|k| {
                    let b = 4 * k;
                    [
                        Edge::new(b, b + 1),
                        Edge::new(b + 1, b + 2),
                        Edge::new(b + 2, b + 3),
                    ]
                })
                .collect()
        }
        Family::GnmRandom => {
            let total = n * n.saturating_sub(1) / 2;
            let budget = cfg
                .budget
                .ok_or(GenerateError::MissingBudget { family: cfg.family })?;
            sample_pairs(total, budget, &mut rng, |i| pair_from_index(n, i))?
        }
        Family::BipartiteRandom => {
            let left = bipartite_left_size(n);
            let right = n - left;
            let budget = cfg
                .budget
                .ok_or(GenerateError::MissingBudget { family: cfg.family })?;
            sample_pairs(left * right, budget, &mut rng, |i| {
                Edge::new(i / right, left + i % right)
            })?
        }
    };
    Ok(Graph::from_edges(n, edges).expect("generators emit simple graphs"))
}

fn sample_pairs(
    total: usize,
    budget: EdgeBudget,
    rng: &mut ChaCha8Rng,
    decode: impl Fn(usize) -> Edge,
) -> Result<Vec<Edge>, GenerateError> {
    match budget {
        EdgeBudget::Count(m) => {
            if m > total {
                return Err(GenerateError::TooManyEdges { m, max: total });
            }
            let mut picked = index::sample(rng, total, m).into_vec();
            picked.sort_unstable();
            Ok(picked.into_iter().map(decode).collect())
        }
        EdgeBudget::Probability(p) => {
            if !(0.0..=1.0).contains(&p) {
                return Err(GenerateError::BadProbability(p));
            }
            Ok((0..total).filter(|_| rng.gen_bool(p)).map(decode).collect())
        }
    }
}

/// Decodes `i` in `0..n(n-1)/2` to the `i`-th pair in lexicographic order.
fn pair_from_index(n: usize, mut i: usize) -> Edge {
    let mut u = 0;
    loop {
        let row = n - 1 - u;
        if i < row {
            return Edge::new(u, u + 1 + i);
        }
        i -= row;
        u += 1;
    }
}

/// A graph together with a hand-built EDCS of it that misses part of the
/// maximum matching.
///
/// Each copy has six blocks `A1, B1, B2, A2` of size `k = ⌊β/2⌋` and
/// `C1, C2` of size `c = β⁻ - k`. `H` is complete bipartite on `B1×B2`,
/// `A1×C1` and `A2×C2`; `G` adds perfect matchings `A1–B1` and `B2–A2`.
/// Every `H` edge has degree at most `β` and every added edge has degree
/// exactly `β⁻`, so `H` is a `(β, β⁻)`-EDCS of `G` while `μ(H) = k + 2c`
/// falls short of `μ(G)`. Vertex labels are shuffled by `seed`.
pub fn planted_edcs(
    beta: usize,
    beta_minus: usize,
    copies: usize,
    seed: u64,
) -> Result<(Graph, Graph), GenerateError> {
    let k = beta / 2;
    if beta_minus <= k || beta_minus >= beta {
        return Err(GenerateError::GadgetParams { beta, beta_minus });
    }
    let c = beta_minus - k;
    let per_copy = 4 * k + 2 * c;
    let n = per_copy * copies;
    let mut label: Vec<usize> = (0..n).collect();
    label.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));

    let mut h_edges = Vec::new();
    let mut extra = Vec::new();
    for copy in 0..copies {
        let base = copy * per_copy;
        let block = |i: usize, j: usize| label[base + i * k + j];
        let c_block = |i: usize, j: usize| label[base + 4 * k + i * c + j];
        for x in 0..k {
            for y in 0..k {
                h_edges.push(Edge::new(block(1, x), block(2, y)));
            }
            for y in 0..c {
                h_edges.push(Edge::new(block(0, x), c_block(0, y)));
                h_edges.push(Edge::new(block(3, x), c_block(1, y)));
            }
            extra.push(Edge::new(block(0, x), block(1, x)));
            extra.push(Edge::new(block(2, x), block(3, x)));
        }
    }
    let h = Graph::from_edges(n, h_edges.iter().copied()).expect("blocks are disjoint");
    let g = Graph::from_edges(n, h_edges.into_iter().chain(extra)).expect("blocks are disjoint");
    Ok((g, h))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matching::maximal_matching;

    #[test]
    fn path_and_star() {
        let p = generate(&GeneratorConfig::new(Family::Path, 4)).unwrap();
        assert_eq!(
            p.edges(),
            &[Edge::new(0, 1), Edge::new(1, 2), Edge::new(2, 3)]
        );
        let s = generate(&GeneratorConfig::new(Family::Star, 4)).unwrap();
        assert_eq!(s.degree(0), 3);
        let k = generate(&GeneratorConfig::new(Family::Complete, 5)).unwrap();
        assert_eq!(k.edge_count(), 10);
    }

    #[test]
    fn planted_tight_single_gadget() {
        let g = generate(&GeneratorConfig::new(Family::PlantedTight, 4)).unwrap();
        let p = generate(&GeneratorConfig::new(Family::Path, 4)).unwrap();
        assert_eq!(g, p);
        let m = maximal_matching(&g, &[Edge::new(1, 2)]);
        assert_eq!(m.edges(), vec![Edge::new(1, 2)]);
    }

    #[test]
    fn planted_tight_gadgets_are_disjoint() {
        let g = generate(&GeneratorConfig::new(Family::PlantedTight, 13)).unwrap();
        assert_eq!(g.edge_count(), 9);
        assert_eq!(g.degree(12), 0);
        let middles: Vec<Edge> = (0..3).map(|k| Edge::new(4 * k + 1, 4 * k + 2)).collect();
        let m = maximal_matching(&g, &middles);
        assert_eq!(m.edges(), middles);
    }

    #[test]
    fn random_is_deterministic() {
        let a = generate(&GeneratorConfig::gnm(8, 12, 7)).unwrap();
        let b = generate(&GeneratorConfig::gnm(8, 12, 7)).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.edge_count(), 12);
        let c = generate(&GeneratorConfig::gnm(8, 12, 8)).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn bipartite_is_two_colorable() {
        let g = generate(&GeneratorConfig::bipartite(21, 0.4, 3)).unwrap();
        let left = bipartite_left_size(21);
        assert!(g.edges().iter().all(|e| e.u < left && e.v >= left));
    }

    #[test]
    fn infeasible_budget() {
        assert_eq!(
            generate(&GeneratorConfig::gnm(4, 7, 0)),
            Err(GenerateError::TooManyEdges { m: 7, max: 6 })
        );
        assert!(generate(&GeneratorConfig::gnp(4, 1.5, 0)).is_err());
        assert!(generate(&GeneratorConfig::new(Family::GnmRandom, 4)).is_err());
    }

    #[test]
    fn pair_index_covers_all_pairs() {
        let n = 7;
        let pairs: Vec<Edge> = (0..n * (n - 1) / 2)
            .map(|i| pair_from_index(n, i))
            .collect();
        let mut sorted = pairs.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(pairs, sorted);
        assert_eq!(pairs.len(), 21);
    }

    #[test]
    fn planted_edcs_is_an_edcs_with_a_gap() {
        use crate::edcs::{verify_edcs, EdcsParams};
        use crate::matching::maximum_matching;
        let (g, h) = planted_edcs(50, 45, 2, 3).unwrap();
        assert_eq!(g.vertex_count(), 2 * (4 * 25 + 2 * 20));
        let p = EdcsParams::new(50, 45).unwrap();
        assert!(verify_edcs(&g, &h, p).unwrap().is_edcs());
        let (mu_h, mu_g) = (maximum_matching(&h).size(), maximum_matching(&g).size());
        assert_eq!(mu_h, 2 * (25 + 40));
        assert!(mu_g > mu_h);
        assert!(planted_edcs(50, 25, 1, 0).is_err());
    }
}
