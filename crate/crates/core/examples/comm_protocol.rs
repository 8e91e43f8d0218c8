//! One-way protocol runs: Alice sends an EDCS of her edges, Bob matches the
//! message together with his own edges.

use edcslab::comm::{run_protocol, split_edges, SplitMode};
use edcslab::exact::Epsilon;
use edcslab::generate::{generate, Family, GeneratorConfig};

fn main() {
    let eps: Epsilon = "0.5".parse().unwrap();
    let dense = generate(&GeneratorConfig::gnp(200, 0.5, 9)).unwrap();
    let planted = generate(&GeneratorConfig::new(Family::PlantedTight, 200)).unwrap();

    for (name, g, mode) in [
        (
            "dense, random split",
            &dense,
            SplitMode::Random { overlap: 0.0 },
        ),
        (
            "dense, random split with overlap",
            &dense,
            SplitMode::Random { overlap: 0.2 },
        ),
        (
            "planted-tight, adversarial split",
            &planted,
            SplitMode::Adversarial,
        ),
    ] {
        let inst = split_edges(g, mode, eps.clone(), 5).unwrap();
        let r = run_protocol(&inst).unwrap();
        println!(
            "{name}: alice={} bob={} -> {r} (cap {})",
            inst.alice().edge_count(),
            inst.bob().edge_count(),
            r.message_cap
        );
        assert!(r.pass);
    }
}
