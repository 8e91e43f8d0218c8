use super::{CheckRecord, ProofError, Relation};
use crate::exact::{int, Rational};

/// A bipartite graph given as parts `P = 0..p`, `Q = 0..q` and `(p_i, q_j)`
/// edges. Parallel edges are allowed; degrees count them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteEdges {
    pub p: usize,
    pub q: usize,
    pub edges: Vec<(usize, usize)>,
}

impl BipartiteEdges {
    fn degrees(&self) -> Result<(Vec<usize>, Vec<usize>), ProofError> {
        let mut dp = vec![0; self.p];
        let mut dq = vec![0; self.q];
        for &(a, b) in &self.edges {
            if a >= self.p || b >= self.q {
                return Err(ProofError::PartSizePrecondition(format!(
                    "edge ({a}, {b}) outside parts of sizes {} and {}",
                    self.p, self.q
                )));
            }
            dp[a] += 1;
            dq[b] += 1;
        }
        Ok((dp, dq))
    }
}

/// For a bipartite graph whose edges all have `deg(p) + deg(q) <= β`, the
/// average P-side degree `d_P = |E|/|P|` satisfies `|Q| >= d_P/(β - d_P)·|P|`.
/// Returns the evaluated record; a precondition failure is an error.
pub fn verify_part_size_bound(
    name: &str,
    graph: &BipartiteEdges,
    beta: usize,
) -> Result<CheckRecord, ProofError> {
    if graph.p == 0 || graph.edges.is_empty() {
        return Err(ProofError::PartSizePrecondition(
            "needs a nonempty P side and at least one edge".into(),
        ));
    }
    let (dp, dq) = graph.degrees()?;
    if let Some(&(a, b)) = graph.edges.iter().find(|&&(a, b)| dp[a] + dq[b] > beta) {
        return Err(ProofError::PartSizePrecondition(format!(
            "edge ({a}, {b}) has degree {} > {beta}",
            dp[a] + dq[b]
        )));
    }
    let d_p = Rational::new(graph.edges.len().into(), graph.p.into());
    let rhs = &d_p / (int(beta) - &d_p) * int(graph.p);
    Ok(CheckRecord::compare(
        name,
        int(graph.q),
        Relation::AtLeast,
        rhs,
    ))
}
