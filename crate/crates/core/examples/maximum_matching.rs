//! Maximum matchings with the blossom algorithm, cross-checked against the
//! exhaustive oracle, and the alternating components of two matchings.

use edcslab::generate::{generate, GeneratorConfig};
use edcslab::graph::Graph;
use edcslab::matching::{
    brute_force_matching_number, decompose_union, maximal_matching, maximum_matching,
    maximum_matching_seeded,
};

fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::from_edges(10, edges).unwrap()
}

fn main() {
    let p = petersen();
    let m = maximum_matching(&p);
    let listed: Vec<String> = m.edges().iter().map(ToString::to_string).collect();
    println!(
        "Petersen graph: matching of size {}: {}",
        m.size(),
        listed.join(" ")
    );

    for seed in 0..5 {
        let g = generate(&GeneratorConfig::gnp(12, 0.25, seed)).unwrap();
        let blossom = maximum_matching(&g).size();
        let oracle = brute_force_matching_number(&g).unwrap();
        println!("G(12, 0.25) seed {seed}: blossom={blossom} oracle={oracle}");
        assert_eq!(blossom, oracle);
    }

    // Path 0-1-2-3: the middle edge is a maximal matching of half the size.
    let path = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
    let greedy = maximal_matching(&path, &[edcslab::Edge::new(1, 2)]);
    let best = maximum_matching(&path);
    for c in decompose_union(&greedy, &best).unwrap() {
        println!(
            "{:?} on {:?}: augmenting={} surplus={}",
            c.kind,
            c.vertices,
            c.is_augmenting,
            c.surplus()
        );
    }

    let g = generate(&GeneratorConfig::gnp(30, 0.2, 1)).unwrap();
    let a = maximum_matching_seeded(&g, 1);
    let b = maximum_matching_seeded(&g, 2);
    println!(
        "two seeded maximum matchings of G(30, 0.2): sizes {} and {}, {} shared edges",
        a.size(),
        b.size(),
        a.edges().iter().filter(|&&e| b.contains(e)).count()
    );
}
