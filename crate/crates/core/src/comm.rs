//! One-way two-party matching protocol.
//!
//! Alice and Bob each hold part of `E(G)` (overlap allowed). Alice sends an
//! EDCS of her subgraph built with `params_for_epsilon(ε)`; Bob outputs a
//! maximum matching of the message together with his own edges. The message
//! has at most `n·β/2` edges, i.e. `O(n/ε)`.
//!
//! This is the plain "send an EDCS" variant; no subsampling is applied
//! before Alice builds her EDCS.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::edcs::{construct_edcs, params_for_epsilon, quality_from_sizes, EdcsError};
use crate::exact::{serialize_rational, Epsilon, Rational};
use crate::graph::{Edge, Graph};
use crate::matching::maximum_matching;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CommError {
    #[error("edge {0} of G is held by neither party")]
    Uncovered(Edge),
    #[error("edge {0} is not an edge of G")]
    Foreign(Edge),
    #[error("overlap probability must lie in [0, 1], got {0}")]
    BadOverlap(f64),
    #[error(transparent)]
    Params(#[from] EdcsError),
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum SplitMode {
    /// Each edge goes to Alice or Bob with probability 1/2; with probability
    /// `overlap` it goes to both instead.
    Random { overlap: f64 },
    /// Bob gets every edge touching a degree-1 vertex (on planted-tight
    /// graphs: the two end edges of each 3-path), Alice the rest.
    Adversarial,
}

impl FromStr for SplitMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "random" => Ok(SplitMode::Random { overlap: 0.0 }),
            "adversarial" | "adversarial-bipartition" => Ok(SplitMode::Adversarial),
            _ => Err(format!(
                "unknown split mode '{s}' (expected random or adversarial)"
            )),
        }
    }
}

impl fmt::Display for SplitMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SplitMode::Random { .. } => f.write_str("random"),
            SplitMode::Adversarial => f.write_str("adversarial"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CommInstance {
    graph: Graph,
    alice: Graph,
    bob: Graph,
    epsilon: Epsilon,
    seed: u64,
}

impl CommInstance {
    /// Fails unless every edge of `g` is held by at least one party and no
    /// party holds an edge outside `g`.
    pub fn new(
        graph: Graph,
        alice_edges: &[Edge],
        bob_edges: &[Edge],
        epsilon: Epsilon,
        seed: u64,
    ) -> Result<Self, CommError> {
        let n = graph.vertex_count();
        let side = |edges: &[Edge]| -> Result<Graph, CommError> {
            if let Some(&e) = edges.iter().find(|&&e| !graph.contains(e)) {
                return Err(CommError::Foreign(e));
            }
            Ok(Graph::from_edges_dedup(n, edges.iter().copied()).expect("edges of G"))
        };
        let alice = side(alice_edges)?;
        let bob = side(bob_edges)?;
        if let Some(&e) = graph
            .edges()
            .iter()
            .find(|&&e| !alice.contains(e) && !bob.contains(e))
        {
            return Err(CommError::Uncovered(e));
        }
        Ok(CommInstance {
            graph,
            alice,
            bob,
            epsilon,
            seed,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn alice(&self) -> &Graph {
        &self.alice
    }

    pub fn bob(&self) -> &Graph {
        &self.bob
    }

    pub fn epsilon(&self) -> &Epsilon {
        &self.epsilon
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }
}

pub fn split_edges(
    g: &Graph,
    mode: SplitMode,
    epsilon: Epsilon,
    seed: u64,
) -> Result<CommInstance, CommError> {
    let mut alice = Vec::new();
    let mut bob = Vec::new();
    match mode {
        SplitMode::Random { overlap } => {
            if !(0.0..=1.0).contains(&overlap) {
                return Err(CommError::BadOverlap(overlap));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for &e in g.edges() {
                if rng.gen_bool(overlap) {
                    alice.push(e);
                    bob.push(e);
                } else if rng.gen_bool(0.5) {
                    alice.push(e);
                } else {
                    bob.push(e);
                }
            }
        }
        SplitMode::Adversarial => {
            for &e in g.edges() {
                if g.degree(e.u) == 1 || g.degree(e.v) == 1 {
                    bob.push(e);
                } else {
                    alice.push(e);
                }
            }
        }
    }
    CommInstance::new(g.clone(), &alice, &bob, epsilon, seed)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CommResult {
    pub message_edge_count: usize,
    /// `n·β/2`, the message-size cap.
    pub message_cap: usize,
    pub mu_output: usize,
    pub mu_g: usize,
    #[serde(serialize_with = "serialize_rational")]
    pub ratio: Rational,
    #[serde(serialize_with = "serialize_rational")]
    pub threshold: Rational,
    /// `ratio >= threshold` and the message fits under the cap.
    pub pass: bool,
}

impl fmt::Display for CommResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "message_edges={} mu_out={} mu_g={} ratio={:.6} threshold={:.6} {}",
            self.message_edge_count,
            self.mu_output,
            self.mu_g,
            crate::exact::to_f64(&self.ratio),
            crate::exact::to_f64(&self.threshold),
            if self.pass { "PASS" } else { "FAIL" }
        )
    }
}

pub fn run_protocol(inst: &CommInstance) -> Result<CommResult, CommError> {
    let params = params_for_epsilon(&inst.epsilon)?;
    let message = construct_edcs(&inst.alice, params, inst.seed).subgraph;
    let bob_view = message.union(&inst.bob).expect("same vertex count");
    let mu_output = maximum_matching(&bob_view).size();
    let mu_g = maximum_matching(&inst.graph).size();
    let q = quality_from_sizes(mu_output, mu_g, &inst.epsilon);
    let message_cap = params.max_edges(inst.graph.vertex_count());
    let message_edge_count = message.edge_count();
    Ok(CommResult {
        message_edge_count,
        message_cap,
        mu_output,
        mu_g,
        pass: q.pass && message_edge_count <= message_cap,
        ratio: q.ratio,
        threshold: q.threshold,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{generate, Family, GeneratorConfig};

    fn half() -> Epsilon {
        "0.5".parse().unwrap()
    }

    #[test]
    fn random_split_covers_and_is_deterministic() {
        let g = generate(&GeneratorConfig::gnp(40, 0.3, 2)).unwrap();
        let a = split_edges(&g, SplitMode::Random { overlap: 0.1 }, half(), 9).unwrap();
        let b = split_edges(&g, SplitMode::Random { overlap: 0.1 }, half(), 9).unwrap();
        assert_eq!(a, b);
        assert!(a.alice().edge_count() + a.bob().edge_count() >= g.edge_count());
        assert!(a.alice().union(a.bob()).unwrap() == g);
    }

    #[test]
    fn adversarial_split_on_planted_tight() {
        let g = generate(&GeneratorConfig::new(Family::PlantedTight, 16)).unwrap();
        let inst = split_edges(&g, SplitMode::Adversarial, half(), 0).unwrap();
        let ends: Vec<Edge> = (0..4)
            .flat_map(|k| [Edge::new(4 * k, 4 * k + 1), Edge::new(4 * k + 2, 4 * k + 3)])
            .collect();
        assert_eq!(inst.bob().edges(), ends.as_slice());
        assert_eq!(inst.alice().edge_count(), 4);
        let r = run_protocol(&inst).unwrap();
        assert_eq!((r.mu_output, r.mu_g), (8, 8));
        assert!(r.pass);
    }

    #[test]
    fn bob_with_everything_gets_ratio_one() {
        let g = generate(&GeneratorConfig::gnp(30, 0.2, 5)).unwrap();
        let inst = CommInstance::new(g.clone(), &[], g.edges(), half(), 0).unwrap();
        let r = run_protocol(&inst).unwrap();
        assert_eq!(r.ratio, Rational::from_integer(1.into()));
        assert_eq!(r.message_edge_count, 0);
    }

    #[test]
    fn alice_with_everything_meets_threshold() {
        let g = generate(&GeneratorConfig::gnp(60, 0.5, 1)).unwrap();
        let inst = CommInstance::new(g.clone(), g.edges(), &[], half(), 4).unwrap();
        let r = run_protocol(&inst).unwrap();
        assert!(r.pass, "{r}");
        assert!(r.message_edge_count <= 50 * 60);
    }

    #[test]
    fn rejects_uncovered_and_foreign_edges() {
        let g = generate(&GeneratorConfig::new(Family::Path, 3)).unwrap();
        assert_eq!(
            CommInstance::new(g.clone(), &[Edge::new(0, 1)], &[], half(), 0),
            Err(CommError::Uncovered(Edge::new(1, 2)))
        );
        assert_eq!(
            CommInstance::new(g.clone(), g.edges(), &[Edge::new(0, 2)], half(), 0),
            Err(CommError::Foreign(Edge::new(0, 2)))
        );
        assert!(split_edges(&g, SplitMode::Random { overlap: 2.0 }, half(), 0).is_err());
    }
}
