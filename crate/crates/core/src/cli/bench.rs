// Parameter sweeps. Instances run on a rayon pool (capped by
// EDCSLAB_THREADS); rows come back in config order: family, size, seed, ε.

use std::io::Write;

use serde::Serialize;

use crate::edcs::{construct_edcs, edcs_quality, params_for_epsilon};
use crate::exact::{to_f64, Epsilon};
use crate::generate::{generate, EdgeBudget, Family, GeneratorConfig};
use crate::proof::verify_trace;

pub const THREADS_ENV: &str = "EDCSLAB_THREADS";

#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    pub families: Vec<Family>,
    pub sizes: Vec<usize>,
    pub epsilons: Vec<Epsilon>,
    pub seeds: Vec<u64>,
    /// Edge probability for the random families.
    pub p: f64,
    /// Run the proof trace for the `trace_all_pass` column.
    pub trace: bool,
}

impl SweepConfig {
    pub fn validate(&self) -> Result<(), String> {
        if self.families.is_empty()
            || self.sizes.is_empty()
            || self.epsilons.is_empty()
            || self.seeds.is_empty()
        {
            return Err("every grid axis needs at least one value".into());
        }
        if !(0.0..=1.0).contains(&self.p) {
            return Err(format!("edge probability {} outside [0, 1]", self.p));
        }
        for &f in &self.families {
            for &n in &self.sizes {
                if f == Family::PlantedTight && n < 4 {
                    return Err(format!("{f} needs n >= 4, got {n}"));
                }
            }
        }
        Ok(())
    }

    fn generator(&self, family: Family, n: usize, seed: u64) -> GeneratorConfig {
        let mut cfg = GeneratorConfig::new(family, n).with_seed(seed);
        if matches!(family, Family::GnmRandom | Family::BipartiteRandom) {
            cfg.budget = Some(EdgeBudget::Probability(self.p));
        }
        cfg
    }
}

/// One CSV row. Column order is the field order below.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchRow {
    pub family: String,
    pub n: usize,
    pub m: usize,
    pub seed: u64,
    pub epsilon: String,
    pub beta: usize,
    pub beta_minus: usize,
    pub mu_g: usize,
    pub mu_h: usize,
    /// `μ(H)/μ(G)` to six decimals.
    pub ratio: String,
    pub threshold: String,
    pub edcs_edges: usize,
    /// Empty when the trace was skipped.
    pub trace_all_pass: Option<bool>,
    #[serde(skip)]
    pub ratio_meets_threshold: bool,
    #[serde(skip)]
    pub edge_cap: usize,
}

impl BenchRow {
    pub fn passes(&self) -> bool {
        self.ratio_meets_threshold
            && self.edcs_edges <= self.edge_cap
            && self.trace_all_pass != Some(false)
    }
}

fn thread_pool() -> Result<rayon::ThreadPool, String> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Ok(v) = std::env::var(THREADS_ENV) {
        let k: usize = v
            .parse()
            .ok()
            .filter(|&k| k > 0)
            .ok_or_else(|| format!("{THREADS_ENV} must be a positive integer, got `{v}`"))?;
        builder = builder.num_threads(k);
    }
    builder.build().map_err(|e| e.to_string())
}

pub fn bench_rows(cfg: &SweepConfig) -> Result<Vec<BenchRow>, String> {
    cfg.validate()?;
    let mut jobs = Vec::new();
    for &family in &cfg.families {
        for &n in &cfg.sizes {
            for &seed in &cfg.seeds {
                for eps in &cfg.epsilons {
                    jobs.push((family, n, seed, eps));
                }
            }
        }
    }
    let pool = thread_pool()?;
    pool.install(|| {
        use rayon::prelude::*;
        jobs.par_iter()
            .map(|&(family, n, seed, eps)| run_one(cfg, family, n, seed, eps))
            .collect()
    })
}

fn run_one(
    cfg: &SweepConfig,
    family: Family,
    n: usize,
    seed: u64,
    eps: &Epsilon,
) -> Result<BenchRow, String> {
    let g = generate(&cfg.generator(family, n, seed)).map_err(|e| e.to_string())?;
    let params = params_for_epsilon(eps).map_err(|e| e.to_string())?;
    let h = construct_edcs(&g, params, seed).subgraph;
    let q = edcs_quality(&g, &h, eps);
    let trace_all_pass = cfg
        .trace
        .then(|| verify_trace(&g, &h, params, eps, seed).is_ok_and(|t| t.all_pass()));
    Ok(BenchRow {
        family: family.to_string(),
        n,
        m: g.edge_count(),
        seed,
        epsilon: eps.to_string(),
        beta: params.beta(),
        beta_minus: params.beta_minus(),
        mu_g: q.mu_g,
        mu_h: q.mu_h,
        ratio: format!("{:.6}", to_f64(&q.ratio)),
        threshold: format!("{:.6}", to_f64(&q.threshold)),
        edcs_edges: h.edge_count(),
        trace_all_pass,
        ratio_meets_threshold: q.pass,
        edge_cap: params.max_edges(n),
    })
}

pub fn write_bench_csv<W: Write>(writer: W, rows: &[BenchRow]) -> Result<(), String> {
    let mut w = csv::Writer::from_writer(writer);
    for row in rows {
        w.serialize(row).map_err(|e| e.to_string())?;
    }
    w.flush().map_err(|e| e.to_string())
}
