use proptest::prelude::*;

use edcslab::edcs::{construct_edcs, potential, verify_edcs, EdcsParams};
use edcslab::exact::{int, rat, ratio_inequality_holds};
use edcslab::gallai_edmonds::{decompose, verify_ge_properties};
use edcslab::generate::{generate, Family, GeneratorConfig};
use edcslab::graph::{Edge, Graph};
use edcslab::io::{load_graph, parse_graph, save_graph, write_graph};
use edcslab::matching::{
    brute_force_matching_number, decompose_union, maximum_matching, maximum_matching_seeded,
};
use edcslab::proof::{
    classify_augmenting_paths, validate_witness, verify_part_size_bound, verify_trace,
    BipartiteEdges, CheckStatus,
};
use edcslab::Epsilon;

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        let k = pairs.len();
        proptest::collection::vec(any::<bool>(), k).prop_map(move |keep| {
            let edges = pairs.iter().zip(&keep).filter(|(_, &b)| b).map(|(&e, _)| e);
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

/// D by definition: vertices missed by some maximum matching, i.e. those
/// whose deletion keeps the matching number.
fn brute_d(g: &Graph) -> Vec<usize> {
    let mu = brute_force_matching_number(g).unwrap();
    (0..g.vertex_count())
        .filter(|&v| brute_force_matching_number(&g.without_vertex(v)).unwrap() == mu)
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn blossom_matches_exhaustive_oracle(g in graph_strategy(10), seed in any::<u64>()) {
        let oracle = brute_force_matching_number(&g).unwrap();
        let m = maximum_matching(&g);
        prop_assert!(m.is_valid_in(&g));
        prop_assert_eq!(m.size(), oracle);
        prop_assert_eq!(maximum_matching_seeded(&g, seed).size(), oracle);
    }

    #[test]
    fn degree_sum_is_twice_edge_count(g in graph_strategy(14)) {
        prop_assert_eq!(g.degrees().iter().sum::<usize>(), 2 * g.edge_count());
    }

    #[test]
    fn induced_on_everything_is_identity(g in graph_strategy(12)) {
        let all: Vec<usize> = (0..g.vertex_count()).collect();
        prop_assert_eq!(g.induced_subgraph(&all).unwrap().graph, g);
    }

    #[test]
    fn text_round_trip(g in graph_strategy(12)) {
        let text = write_graph(&g);
        let back = parse_graph(&text).unwrap();
        prop_assert_eq!(write_graph(&back), text);
        prop_assert_eq!(back, g);
    }

    #[test]
    fn d_matches_deletion_oracle(g in graph_strategy(11)) {
        prop_assert_eq!(decompose(&g).d_set(), brute_d(&g));
    }

    #[test]
    fn decomposition_clauses_hold(g in graph_strategy(12), seed in any::<u64>()) {
        let m = maximum_matching_seeded(&g, seed);
        let ge = decompose(&g).mark_specials(&g, &m).unwrap();
        let report = verify_ge_properties(&ge, &g, &m);
        prop_assert!(report.all_pass(), "{:?}", report);
        for comp in ge.components() {
            prop_assert_eq!(comp.len() % 2, 1);
        }
    }

    #[test]
    fn augmenting_surplus_accounts_for_the_gap(g in graph_strategy(12), seed in any::<u64>(), keep in any::<u64>()) {
        // H: a pseudo-random subset of G's edges
        let h_edges = g.edges().iter().enumerate()
            .filter(|(i, _)| (keep >> (i % 64)) & 1 == 1).map(|(_, &e)| e);
        let h = Graph::from_edges(g.vertex_count(), h_edges).unwrap();
        let m = maximum_matching_seeded(&h, seed);
        let mstar = maximum_matching(&g);
        let comps = decompose_union(&m, &mstar).unwrap();
        let augmenting: Vec<_> = comps.iter().filter(|c| c.is_augmenting).collect();
        let gap = mstar.size() as i64 - m.size() as i64;
        prop_assert_eq!(augmenting.iter().map(|c| c.surplus()).sum::<i64>(), gap);
        prop_assert!(augmenting.iter().all(|c| c.surplus() == 1));
        prop_assert!(comps.iter().filter(|c| !c.is_augmenting).all(|c| c.surplus() <= 0));
        let edges: usize = comps.iter().map(|c| c.edges.len()).sum();
        prop_assert_eq!(edges, m.size() + mstar.size());
    }

    #[test]
    fn construction_is_an_edcs(g in graph_strategy(14), beta in 2usize..10, frac in 0.0f64..1.0, seed in any::<u64>()) {
        let beta_minus = 1 + ((beta - 1) as f64 * frac) as usize % (beta - 1);
        let p = EdcsParams::new(beta, beta_minus).unwrap();
        let c = construct_edcs(&g, p, seed);
        prop_assert!(verify_edcs(&g, &c.subgraph, p).unwrap().is_edcs());
        prop_assert!(c.subgraph.edge_count() <= p.max_edges(g.vertex_count()));
        prop_assert!(c.subgraph.max_degree() <= beta);
        prop_assert!(c.fix_steps as u128 <= p.max_fix_steps(g.vertex_count()));
    }

    #[test]
    fn every_augmenting_path_has_a_valid_witness(g in graph_strategy(12), beta in 2usize..7, seed in any::<u64>()) {
        let p = EdcsParams::new(beta, beta - 1).unwrap();
        let h = construct_edcs(&g, p, seed).subgraph;
        let m = maximum_matching_seeded(&h, seed);
        let mstar = maximum_matching(&g);
        let ge = decompose(&h).mark_specials(&h, &m).unwrap();
        let classes = classify_augmenting_paths(&g, &h, &ge, &m, &mstar).unwrap();
        for c in &classes {
            prop_assert!(validate_witness(&h, &ge, &c.path, &c.witness).is_ok());
        }
        prop_assert!(classes.len() >= mstar.size() - m.size());
    }

    #[test]
    fn part_size_bound_on_random_bipartite(p in 1usize..8, q in 1usize..8, bits in any::<u64>(), slack in 0usize..3) {
        let edges: Vec<(usize, usize)> = (0..p * q).filter(|i| (bits >> (i % 64)) & 1 == 1)
            .map(|i| (i / q, i % q)).collect();
        prop_assume!(!edges.is_empty());
        let mut dp = vec![0; p];
        let mut dq = vec![0; q];
        for &(a, b) in &edges { dp[a] += 1; dq[b] += 1; }
        let beta = edges.iter().map(|&(a, b)| dp[a] + dq[b]).max().unwrap() + slack;
        let graph = BipartiteEdges { p, q, edges };
        let rec = verify_part_size_bound("random", &graph, beta).unwrap();
        prop_assert_eq!(rec.status, CheckStatus::Pass);
    }

    #[test]
    fn ratio_inequality_on_grid(num in 0i64..=1000) {
        prop_assert!(ratio_inequality_holds(&rat(num, 100)));
    }
}

/// Every local fix raises `(2β - 1)Σdeg - 2Σ_{e∈H} deg_H(e)` by at least 2:
/// checked symbolically over all endpoint degrees that make the fix legal.
#[test]
fn potential_gain_enumeration() {
    for beta in 2i64..40 {
        for du in 0..=beta + 1 {
            for dv in 0..=beta + 1 {
                // removing an H edge with du + dv > β (degrees include it)
                if du >= 1 && dv >= 1 && du + dv > beta {
                    let gain = -2 * (2 * beta - 1) - 2 * ((1 - 2 * du) + (1 - 2 * dv));
                    assert!(gain >= 2, "removal beta={beta} du={du} dv={dv}");
                }
                // adding a non-H edge with du + dv < β⁻ <= β - 1
                if du + dv < beta - 1 {
                    let gain = 2 * (2 * beta - 1) - 2 * ((2 * du + 1) + (2 * dv + 1));
                    assert!(gain >= 2, "addition beta={beta} du={du} dv={dv}");
                }
            }
        }
    }
}

#[test]
fn potential_is_nonnegative_and_bounded_on_edcs() {
    for seed in 0..20 {
        let g = generate(&GeneratorConfig::gnp(40, 0.3, seed)).unwrap();
        let p = EdcsParams::new(8, 6).unwrap();
        let h = construct_edcs(&g, p, seed).subgraph;
        let phi = potential(&h, 8);
        let bound = (15i128 * 15 / 8 + 1) * 40;
        assert!(phi >= 0 && phi <= bound, "{phi}");
    }
}

#[test]
fn save_load_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.graph");
    for family in [
        Family::Path,
        Family::Star,
        Family::Complete,
        Family::PlantedTight,
    ] {
        let g = generate(&GeneratorConfig::new(family, 9)).unwrap();
        save_graph(&path, &g).unwrap();
        assert_eq!(load_graph(&path).unwrap(), g);
    }
}

#[test]
fn parse_errors_carry_line_numbers() {
    let err = parse_graph("2 1\n0 0\n").unwrap_err();
    assert_eq!(err.line, 2);
    assert!(parse_graph("3 2\n0 1\n0 1\n").is_err());
    assert!(parse_graph("3 1\n0 5\n").is_err());
    assert!(parse_graph("x\n").is_err());
}

#[test]
fn edge_degrees_of_small_graphs() {
    let k3 = generate(&GeneratorConfig::new(Family::Complete, 3)).unwrap();
    assert_eq!(k3.edge_degree(Edge::new(0, 1)).unwrap(), 4);
    let path = generate(&GeneratorConfig::new(Family::Path, 4)).unwrap();
    assert_eq!(path.edge_degree(Edge::new(0, 1)).unwrap(), 3);
    let star = generate(&GeneratorConfig::new(Family::Star, 4)).unwrap();
    assert_eq!(star.edge_degree(Edge::new(0, 3)).unwrap(), 4);
    assert!(path.edge_degree(Edge::new(0, 2)).is_err());
}

#[test]
fn trace_on_planted_edcs_passes_for_guarantee_params() {
    for e in ["1", "0.5", "0.2"] {
        let eps: Epsilon = e.parse().unwrap();
        let p = edcslab::params_for_epsilon(&eps).unwrap();
        let (g, h) = edcslab::generate::planted_edcs(p.beta(), p.beta_minus(), 1, 5).unwrap();
        let t = verify_trace(&g, &h, p, &eps, 1).unwrap();
        assert!(t.augmenting_paths > 0);
        assert!(t.all_pass(), "{:?}", t.failures().collect::<Vec<_>>());
        assert_eq!(
            t.check("w2-degree-sum").unwrap().lhs,
            t.check("w2-degree-sum").unwrap().rhs
        );
        assert!(int(t.mu_h) >= eps.threshold() * int(t.mu_g));
    }
}
