//! Generates one graph of each family and prints its size and canonical
//! edge list header.
//!
//! cargo run --example generate_graphs [n] [seed]

use edcslab::generate::{generate, EdgeBudget, Family, GeneratorConfig};
use edcslab::io::write_graph;

fn main() {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().map_or(12, |s| s.parse().expect("n"));
    let seed: u64 = args.next().map_or(7, |s| s.parse().expect("seed"));

    for family in Family::ALL {
        let mut cfg = GeneratorConfig::new(family, n).with_seed(seed);
        if matches!(family, Family::GnmRandom | Family::BipartiteRandom) {
            cfg.budget = Some(EdgeBudget::Probability(0.3));
        }
        match generate(&cfg) {
            Ok(g) => {
                let degree_sum: usize = g.degrees().iter().sum();
                assert_eq!(degree_sum, 2 * g.edge_count());
                println!(
                    "{family:>16}: n={} m={} max_degree={}",
                    g.vertex_count(),
                    g.edge_count(),
                    g.max_degree()
                );
            }
            Err(e) => println!("{family:>16}: {e}"),
        }
    }

    let planted = generate(&GeneratorConfig::new(Family::PlantedTight, 8)).unwrap();
    print!("\nplanted-tight on 8 vertices:\n{}", write_graph(&planted));
}
