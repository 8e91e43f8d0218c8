// Edmonds' blossom algorithm for maximum cardinality matching in general
// graphs. Single-source search: grow an alternating tree from an exposed
// root, contract odd cycles into their base on the fly, and stop at the
// first exposed vertex reached from an even vertex. O(n^3) overall.

use std::collections::VecDeque;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::Matching;
use crate::graph::{Edge, Graph};

const NONE: usize = usize::MAX;

/// Reusable augmenting-path search over a fixed graph.
///
/// One vertex can be excluded, which makes the search behave as if it ran
/// on `g - v` without rebuilding the graph.
pub struct AugmentingSearch<'g> {
    g: &'g Graph,
    excluded: usize,
    base: Vec<usize>,
    parent: Vec<usize>,
    used: Vec<bool>,
    blossom: Vec<bool>,
    lca_mark: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'g> AugmentingSearch<'g> {
    pub fn new(g: &'g Graph) -> Self {
        let n = g.vertex_count();
        AugmentingSearch {
            g,
            excluded: NONE,
            base: (0..n).collect(),
            parent: vec![NONE; n],
            used: vec![false; n],
            blossom: vec![false; n],
            lca_mark: vec![false; n],
            queue: VecDeque::with_capacity(n),
        }
    }

    pub fn exclude(&mut self, v: Option<usize>) {
        self.excluded = v.unwrap_or(NONE);
    }

    /// Looks for an augmenting path starting at the exposed vertex `root`
    /// and flips it. Returns whether the matching grew.
    pub fn try_augment(&mut self, m: &mut Matching, root: usize) -> bool {
        let mut mate: Vec<usize> = m.mate.iter().map(|x| x.unwrap_or(NONE)).collect();
        let grew = self.augment_raw(&mut mate, root);
        if grew {
            m.mate = mate.into_iter().map(|x| (x != NONE).then_some(x)).collect();
        }
        grew
    }

    fn augment_raw(&mut self, mate: &mut [usize], root: usize) -> bool {
        debug_assert_eq!(mate[root], NONE);
        debug_assert_ne!(root, self.excluded);
        match self.find_path(mate, root) {
            None => false,
            Some(end) => {
                let mut v = end;
                while v != NONE {
                    let pv = self.parent[v];
                    let next = mate[pv];
                    mate[v] = pv;
                    mate[pv] = v;
                    v = next;
                }
                true
            }
        }
    }

    fn find_path(&mut self, mate: &[usize], root: usize) -> Option<usize> {
        let g = self.g;
        let n = g.vertex_count();
        self.used.fill(false);
        self.parent.fill(NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.queue.clear();
        self.used[root] = true;
        self.queue.push_back(root);

        while let Some(v) = self.queue.pop_front() {
            for &to in g.neighbors(v) {
                if to == self.excluded || self.base[v] == self.base[to] || mate[v] == to {
                    continue;
                }
                if to == root || (mate[to] != NONE && self.parent[mate[to]] != NONE) {
                    // `to` is even: odd cycle, contract it
                    let cur = self.lca(mate, v, to);
                    self.blossom.fill(false);
                    self.mark_path(mate, v, cur, to);
                    self.mark_path(mate, to, cur, v);
                    for i in 0..n {
                        if self.blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if mate[to] == NONE {
                        return Some(to);
                    }
                    let m = mate[to];
                    self.used[m] = true;
                    self.queue.push_back(m);
                }
            }
        }
        None
    }

    fn lca(&mut self, mate: &[usize], mut a: usize, mut b: usize) -> usize {
        self.lca_mark.fill(false);
        loop {
            a = self.base[a];
            self.lca_mark[a] = true;
            if mate[a] == NONE {
                break;
            }
            a = self.parent[mate[a]];
        }
        loop {
            b = self.base[b];
            if self.lca_mark[b] {
                return b;
            }
            b = self.parent[mate[b]];
        }
    }

    fn mark_path(&mut self, mate: &[usize], mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.blossom[self.base[v]] = true;
            self.blossom[self.base[mate[v]]] = true;
            self.parent[v] = child;
            child = mate[v];
            v = self.parent[mate[v]];
        }
    }
}

fn solve(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut mate = vec![NONE; n];
    for e in g.edges() {
        if mate[e.u] == NONE && mate[e.v] == NONE {
            mate[e.u] = e.v;
            mate[e.v] = e.u;
        }
    }
    let mut search = AugmentingSearch::new(g);
    for v in 0..n {
        if mate[v] == NONE {
            search.augment_raw(&mut mate, v);
        }
    }
    mate
}

/// Maximum cardinality matching. Deterministic for a given graph.
pub fn maximum_matching(g: &Graph) -> Matching {
    let mate = solve(g);
    Matching::from_mates(mate.into_iter().map(|x| (x != NONE).then_some(x)).collect())
}

/// Maximum matching computed on a seeded relabeling of `g`, mapped back.
/// Different seeds tend to land on different maximum matchings.
pub fn maximum_matching_seeded(g: &Graph, seed: u64) -> Matching {
    let n = g.vertex_count();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut relabel: Vec<usize> = (0..n).collect();
    relabel.shuffle(&mut rng);
    let permuted = Graph::from_edges(
        n,
        g.edges()
            .iter()
            .map(|e| Edge::new(relabel[e.u], relabel[e.v])),
    )
    .expect("relabeling preserves simplicity");
    let mate_p = solve(&permuted);
    let mut inverse = vec![0; n];
    for (old, &new) in relabel.iter().enumerate() {
        inverse[new] = old;
    }
    let mut mate = vec![None; n];
    for (new_v, &new_u) in mate_p.iter().enumerate() {
        if new_u != NONE {
            mate[inverse[new_v]] = Some(inverse[new_u]);
        }
    }
    Matching::from_mates(mate)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{generate, Family, GeneratorConfig};
    use crate::matching::brute_force_matching_number;

    fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::from_edges(10, edges).unwrap()
    }

    #[test]
    fn small_examples() {
        let k3 = generate(&GeneratorConfig::new(Family::Complete, 3)).unwrap();
        assert_eq!(maximum_matching(&k3).size(), 1);

        let p4 = generate(&GeneratorConfig::new(Family::Path, 4)).unwrap();
        let m = maximum_matching(&p4);
        assert_eq!(m.edges(), vec![Edge::new(0, 1), Edge::new(2, 3)]);
    }

    #[test]
    fn petersen_has_perfect_matching() {
        let g = petersen();
        assert_eq!(brute_force_matching_number(&g).unwrap(), 5);
        let m = maximum_matching(&g);
        assert_eq!(m.size(), 5);
        assert!(m.is_valid_in(&g));
    }

    #[test]
    fn needs_blossom_contraction() {
        // A triangle with tails: greedy picks (1, 2) first and the only way
        // to reach size 3 is through the odd cycle.
        let g = Graph::from_edges(6, [(0, 3), (1, 2), (1, 4), (2, 5), (0, 1), (0, 2)]).unwrap();
        assert_eq!(maximum_matching(&g).size(), 3);
        assert_eq!(brute_force_matching_number(&g).unwrap(), 3);
    }

    #[test]
    fn seeded_variant_is_maximum_and_varies() {
        let g = generate(&GeneratorConfig::new(Family::Complete, 7)).unwrap();
        let mut distinct = std::collections::BTreeSet::new();
        for seed in 0..20 {
            let m = maximum_matching_seeded(&g, seed);
            assert!(m.is_valid_in(&g));
            assert_eq!(m.size(), 3);
            distinct.insert(m.edges());
        }
        assert!(distinct.len() > 1);
    }

    #[test]
    fn excluded_vertex_is_never_used() {
        let g = generate(&GeneratorConfig::new(Family::Path, 3)).unwrap();
        // path 0-1-2 with vertex 0 removed: matching {(1,2)}
        let mut m = Matching::empty(3);
        let mut search = AugmentingSearch::new(&g);
        search.exclude(Some(0));
        assert!(search.try_augment(&mut m, 1));
        assert_eq!(m.edges(), vec![Edge::new(1, 2)]);

        search.exclude(Some(2));
        let mut m = Matching::empty(3);
        assert!(search.try_augment(&mut m, 1));
        assert_eq!(m.edges(), vec![Edge::new(0, 1)]);
    }
}
