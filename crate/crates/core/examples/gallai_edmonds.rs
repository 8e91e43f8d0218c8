//! Gallai-Edmonds decomposition D/A/C of a random sparse graph, its special
//! vertices, and the structural clauses checked for several maximum
//! matchings.

use edcslab::gallai_edmonds::{decompose, verify_ge_properties, VertexClass};
use edcslab::generate::{generate, GeneratorConfig};
use edcslab::matching::maximum_matching_seeded;

fn main() {
    let seed: u64 = std::env::args()
        .nth(1)
        .map_or(3, |s| s.parse().expect("seed"));
    let h = generate(&GeneratorConfig::gnp(24, 0.09, seed)).unwrap();
    let ge = decompose(&h);
    for (label, class) in [
        ("D", VertexClass::D),
        ("A", VertexClass::A),
        ("C", VertexClass::C),
    ] {
        let members: Vec<usize> = (0..h.vertex_count())
            .filter(|&v| ge.class(v) == class)
            .collect();
        println!("{label} = {members:?}");
    }

    for mseed in 0..3 {
        let m = maximum_matching_seeded(&h, mseed);
        let marked = ge
            .clone()
            .mark_specials(&h, &m)
            .expect("one special per component");
        let report = verify_ge_properties(&marked, &h, &m);
        println!("\nmatching seed {mseed}: size {}", m.size());
        for (id, comp) in marked.components().iter().enumerate() {
            println!(
                "  component {id}: {comp:?} special={}",
                marked.special_of(id).unwrap()
            );
        }
        for clause in &report.clauses {
            println!(
                "  {}: {}",
                clause.clause,
                if clause.pass { "ok" } else { "FAILED" }
            );
        }
        assert!(report.all_pass());
    }
}
