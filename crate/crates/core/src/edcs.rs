//! Edge-degree constrained subgraphs.
//!
//! A subgraph `H` of `G` is a `(β, β⁻)`-EDCS when every edge of `H` has
//! `deg_H(u) + deg_H(v) <= β` (P1) and every edge of `G` outside `H` has
//! `deg_H(u) + deg_H(v) >= β⁻` (P2).

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::exact::{ceil_usize, int, rat, serialize_rational, to_f64, Epsilon, Rational};
use crate::graph::{Edge, Graph};
use crate::matching::maximum_matching;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EdcsError {
    #[error("invalid parameters: need beta > beta_minus >= 1, got ({beta}, {beta_minus})")]
    InvalidParams { beta: usize, beta_minus: usize },
    #[error("H is not a subgraph of G")]
    NotSubgraph,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct EdcsParams {
    beta: usize,
    beta_minus: usize,
}

impl EdcsParams {
    pub fn new(beta: usize, beta_minus: usize) -> Result<Self, EdcsError> {
        if beta > beta_minus && beta_minus >= 1 {
            Ok(EdcsParams { beta, beta_minus })
        } else {
            Err(EdcsError::InvalidParams { beta, beta_minus })
        }
    }

    pub fn beta(&self) -> usize {
        self.beta
    }

    pub fn beta_minus(&self) -> usize {
        self.beta_minus
    }

    /// Whether `β >= 50/ε` and `β⁻ >= (1 - ε/10)β`, the regime in which an
    /// EDCS is guaranteed to contain a `(2/3 - ε)`-approximate matching.
    pub fn meets_guarantee(&self, eps: &Epsilon) -> bool {
        let e = eps.value();
        let beta = int(self.beta);
        &beta * e >= int(50) && int(self.beta_minus) >= (int(1) - e / int(10)) * &beta
    }

    /// Upper bound on local-fixing steps: `(2β - 1)·n·β / 2`.
    pub fn max_fix_steps(&self, n: usize) -> u128 {
        let b = self.beta as u128;
        (2 * b - 1) * n as u128 * b / 2
    }

    /// Upper bound on the edge count of any EDCS on `n` vertices: `n·β/2`.
    pub fn max_edges(&self, n: usize) -> usize {
        n * self.beta / 2
    }
}

/// `β = ⌈50/ε⌉`, `β⁻ = ⌈(1 - ε/10)·β⌉`.
pub fn params_for_epsilon(eps: &Epsilon) -> Result<EdcsParams, EdcsError> {
    let e = eps.value();
    let beta = ceil_usize(&(int(50) / e)).expect("50/ε is a small positive number");
    let beta_minus = ceil_usize(&((int(1) - e / int(10)) * int(beta))).expect("bounded by beta");
    EdcsParams::new(beta, beta_minus)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub edge: Edge,
    pub edge_degree: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct EdcsCheck {
    /// Edges of `H` with `deg_H(e) > β`.
    pub p1_violations: Vec<Violation>,
    /// Edges of `G \ H` with `deg_H(e) < β⁻`.
    pub p2_violations: Vec<Violation>,
}

impl EdcsCheck {
    pub fn is_edcs(&self) -> bool {
        self.p1_violations.is_empty() && self.p2_violations.is_empty()
    }
}

pub fn verify_edcs(g: &Graph, h: &Graph, p: EdcsParams) -> Result<EdcsCheck, EdcsError> {
    if !h.is_subgraph_of(g) {
        return Err(EdcsError::NotSubgraph);
    }
    let mut check = EdcsCheck::default();
    for &edge in g.edges() {
        let edge_degree = h.pair_degree(edge);
        if h.contains(edge) {
            if edge_degree > p.beta {
                check.p1_violations.push(Violation { edge, edge_degree });
            }
        } else if edge_degree < p.beta_minus {
            check.p2_violations.push(Violation { edge, edge_degree });
        }
    }
    Ok(check)
}

/// `Φ(H) = (2β - 1)·Σ_v deg_H(v) - 2·Σ_{e ∈ H} deg_H(e)`.
pub fn potential(h: &Graph, beta: usize) -> i128 {
    let beta = beta as i128;
    let degree_sum: i128 = h.degrees().iter().map(|&d| d as i128).sum();
    let edge_degree_sum: i128 = h.edges().iter().map(|&e| h.pair_degree(e) as i128).sum();
    (2 * beta - 1) * degree_sum - 2 * edge_degree_sum
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Construction {
    pub subgraph: Graph,
    pub fix_steps: usize,
}

const ABSENT: usize = usize::MAX;

/// Set of violating edge ids with O(1) insert, remove and uniform sampling.
struct ViolationSet {
    items: Vec<usize>,
    pos: Vec<usize>,
}

impl ViolationSet {
    fn new(m: usize) -> Self {
        ViolationSet {
            items: Vec::new(),
            pos: vec![ABSENT; m],
        }
    }

    fn set(&mut self, id: usize, present: bool) {
        match (present, self.pos[id] != ABSENT) {
            (true, false) => {
                self.pos[id] = self.items.len();
                self.items.push(id);
            }
            (false, true) => {
                let at = self.pos[id];
                let last = *self.items.last().unwrap();
                self.items.swap_remove(at);
                if last != id {
                    self.pos[last] = at;
                }
                self.pos[id] = ABSENT;
            }
            _ => {}
        }
    }
}

/// Builds an EDCS by local fixing: starting from `H = ∅`, repeatedly pick a
/// violating edge uniformly at random (seeded) and remove it from `H` (P1)
/// or add it (P2). Each fix raises [`potential`] by at least 2, and the
/// potential is bounded, so this terminates within
/// [`EdcsParams::max_fix_steps`] steps.
pub fn construct_edcs(g: &Graph, p: EdcsParams, seed: u64) -> Construction {
    let n = g.vertex_count();
    let edges = g.edges();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let mut incident = vec![Vec::new(); n];
    for (id, e) in edges.iter().enumerate() {
        incident[e.u].push(id);
        incident[e.v].push(id);
    }
    let mut in_h = vec![false; edges.len()];
    let mut deg = vec![0usize; n];
    let mut violations = ViolationSet::new(edges.len());
    let violating = |id: usize, in_h: &[bool], deg: &[usize]| {
        let d = deg[edges[id].u] + deg[edges[id].v];
        if in_h[id] {
            d > p.beta
        } else {
            d < p.beta_minus
        }
    };
    for id in 0..edges.len() {
        violations.set(id, violating(id, &in_h, &deg));
    }

    let bound = p.max_fix_steps(n);
    let two_beta_minus_one = 2 * p.beta as i64 - 1;
    let mut steps = 0usize;
    while !violations.items.is_empty() {
        let id = violations.items[rng.gen_range(0..violations.items.len())];
        let Edge { u, v } = edges[id];
        let (du, dv) = (deg[u] as i64, deg[v] as i64);
        let gain = if in_h[id] {
            in_h[id] = false;
            deg[u] -= 1;
            deg[v] -= 1;
            -2 * two_beta_minus_one - 2 * ((1 - 2 * du) + (1 - 2 * dv))
        } else {
            in_h[id] = true;
            deg[u] += 1;
            deg[v] += 1;
            2 * two_beta_minus_one - 2 * ((2 * du + 1) + (2 * dv + 1))
        };
        assert!(
            gain >= 2,
            "potential gain {gain} < 2 on fix of {}",
            edges[id]
        );
        steps += 1;
        assert!(
            steps as u128 <= bound,
            "local fixing exceeded its step bound {bound}"
        );
        for &other in incident[u].iter().chain(&incident[v]) {
            violations.set(other, violating(other, &in_h, &deg));
        }
    }

    let kept = edges
        .iter()
        .zip(&in_h)
        .filter(|(_, &keep)| keep)
        .map(|(&e, _)| e);
    Construction {
        subgraph: Graph::from_edges(n, kept).expect("subset of a simple graph"),
        fix_steps: steps,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QualityReport {
    pub mu_h: usize,
    pub mu_g: usize,
    #[serde(serialize_with = "serialize_rational")]
    pub ratio: Rational,
    #[serde(serialize_with = "serialize_rational")]
    pub threshold: Rational,
    pub pass: bool,
}

impl QualityReport {
    pub fn ratio_f64(&self) -> f64 {
        to_f64(&self.ratio)
    }
}

/// `μ(H) / μ(G)` against `2/3 - ε`. The ratio is 1 when `μ(G) = 0`.
pub fn edcs_quality(g: &Graph, h: &Graph, eps: &Epsilon) -> QualityReport {
    debug_assert!(h.is_subgraph_of(g));
    let mu_h = maximum_matching(h).size();
    let mu_g = maximum_matching(g).size();
    quality_from_sizes(mu_h, mu_g, eps)
}

pub(crate) fn quality_from_sizes(mu_h: usize, mu_g: usize, eps: &Epsilon) -> QualityReport {
    let ratio = if mu_g == 0 {
        rat(1, 1)
    } else {
        Rational::new(mu_h.into(), mu_g.into())
    };
    let threshold = eps.threshold();
    QualityReport {
        mu_h,
        mu_g,
        pass: int(mu_h) >= &threshold * int(mu_g),
        ratio,
        threshold,
    }
}
