//! A small sweep written as CSV to stdout. Set EDCSLAB_THREADS to cap the
//! worker pool.

use edcslab::cli::{bench_rows, write_bench_csv, SweepConfig};
use edcslab::generate::Family;

fn main() {
    let cfg = SweepConfig {
        families: vec![
            Family::GnmRandom,
            Family::BipartiteRandom,
            Family::PlantedTight,
        ],
        sizes: vec![60, 120],
        epsilons: ["1", "0.5"].iter().map(|s| s.parse().unwrap()).collect(),
        seeds: vec![0, 1],
        p: 0.5,
        trace: true,
    };
    let rows = bench_rows(&cfg).expect("valid sweep");
    write_bench_csv(std::io::stdout().lock(), &rows).expect("stdout");
    eprintln!(
        "{} rows, all passing: {}",
        rows.len(),
        rows.iter().all(|r| r.passes())
    );
}
