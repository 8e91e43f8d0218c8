//! Builds EDCSs of a dense random graph for several ε and reports size,
//! fixing steps and the matching ratio against 2/3 - ε.

use edcslab::edcs::{construct_edcs, edcs_quality, params_for_epsilon, verify_edcs};
use edcslab::exact::Epsilon;
use edcslab::generate::{generate, GeneratorConfig};

fn main() {
    let n: usize = std::env::args()
        .nth(1)
        .map_or(300, |s| s.parse().expect("n"));
    let g = generate(&GeneratorConfig::gnp(n, 0.5, 42)).unwrap();
    println!("G({n}, 0.5): {} edges", g.edge_count());

    for eps in ["1", "0.5", "0.2"] {
        let eps: Epsilon = eps.parse().unwrap();
        let params = params_for_epsilon(&eps).unwrap();
        let c = construct_edcs(&g, params, 1);
        let check = verify_edcs(&g, &c.subgraph, params).unwrap();
        assert!(check.is_edcs());
        let q = edcs_quality(&g, &c.subgraph, &eps);
        println!(
            "eps={eps} beta={} beta_minus={} edges={} (cap {}) steps={} (cap {}) mu_h={} mu_g={} ratio={:.4} threshold={}",
            params.beta(),
            params.beta_minus(),
            c.subgraph.edge_count(),
            params.max_edges(n),
            c.fix_steps,
            params.max_fix_steps(n),
            q.mu_h,
            q.mu_g,
            q.ratio_f64(),
            q.threshold
        );
    }
}
