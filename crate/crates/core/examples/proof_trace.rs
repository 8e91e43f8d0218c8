//! Replays the approximation argument on an instance where the EDCS misses
//! part of the maximum matching, printing every evaluated inequality.
//!
//! cargo run --example proof_trace [epsilon]

use edcslab::edcs::params_for_epsilon;
use edcslab::exact::Epsilon;
use edcslab::generate::planted_edcs;
use edcslab::proof::verify_trace;

fn main() {
    let eps: Epsilon = std::env::args()
        .nth(1)
        .map_or("0.5".into(), |s| s)
        .parse()
        .expect("epsilon");
    let params = params_for_epsilon(&eps).unwrap();
    let (g, h) = planted_edcs(params.beta(), params.beta_minus(), 2, 11).unwrap();
    let trace = verify_trace(&g, &h, params, &eps, 0).unwrap();

    println!(
        "n={} mu_h={} mu_g={} augmenting paths={} (T1 {}, T2 {})",
        g.vertex_count(),
        trace.mu_h,
        trace.mu_g,
        trace.augmenting_paths,
        trace.t1_paths,
        trace.t2_paths
    );
    println!(
        "|W1|={} |W2|={} |Z|={} |Z_A|={} |D\\S|={} lambda={} alpha={} sigma={}",
        trace.w1,
        trace.w2,
        trace.z,
        trace.z_a,
        trace.d_minus_s,
        trace.lambda,
        trace.alpha,
        trace.sigma
    );
    for c in &trace.checks {
        println!("{c}");
    }
    assert!(trace.all_pass());
}
