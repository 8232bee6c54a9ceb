//! Random-graph experiment: how often a cheap packing lower bound reaches a
//! quarter of the edges, and how often the bipartite cover stays within
//! twice that bound.
//!
//! Trial `i` draws `G(n, p)` from `random_gnp(n, p, seed + i)` (ChaCha8,
//! pairs in lexicographic order), so any single trial can be replayed on
//! its own.

use serde::Serialize;
use tricover_core::{
    cover_via_bipartite, extend_packing, greedy_triangle_packing, random_gnp, steiner_triples, Graph, PackingOrder,
    PackingWitness,
};

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Estimator {
    /// Triangles of a Steiner triple system on the vertex set that survive
    /// in the sample, greedily extended.
    SteinerSeeded,
    /// Greedy packing in canonical triangle order.
    Greedy,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExperimentSpec {
    pub n: usize,
    pub p: f64,
    pub trials: usize,
    pub seed: u64,
    pub estimator: Estimator,
}

impl ExperimentSpec {
    pub fn validate(&self) -> Result<(), CliError> {
        if !(0.0..=1.0).contains(&self.p) {
            return Err(CliError::Precondition(format!("edge probability {} outside [0, 1]", self.p)));
        }
        if self.trials == 0 {
            return Err(CliError::Precondition("at least one trial is required".into()));
        }
        if self.estimator == Estimator::SteinerSeeded && (self.n < 3 || !matches!(self.n % 6, 1 | 3)) {
            return Err(CliError::Precondition(format!(
                "steiner-seeded needs n = 1 or 3 (mod 6) with n >= 3, got n = {}",
                self.n
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TrialRecord {
    pub trial: usize,
    pub seed: u64,
    pub edges: usize,
    /// Steiner triangles present in the sample (steiner-seeded only).
    pub steiner_survivors: Option<usize>,
    pub packing_lower_bound: usize,
    pub cover_size: usize,
    /// `None` when the sample has no edges.
    pub packing_at_least_quarter: Option<bool>,
    pub cover_within_twice_packing: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Aggregate {
    pub trials: usize,
    pub trials_with_edges: usize,
    pub packing_at_least_quarter: usize,
    pub cover_within_twice_packing: usize,
    /// Fractions over trials with at least one edge; `None` if there are none.
    pub fraction_packing_at_least_quarter: Option<f64>,
    pub fraction_cover_within_twice_packing: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExperimentResult {
    pub spec: ExperimentSpec,
    pub records: Vec<TrialRecord>,
    pub aggregate: Aggregate,
}

pub fn aggregate(records: &[TrialRecord]) -> Aggregate {
    let with_edges = records.iter().filter(|r| r.edges > 0).count();
    let quarter = records.iter().filter(|r| r.packing_at_least_quarter == Some(true)).count();
    let twice = records.iter().filter(|r| r.cover_within_twice_packing == Some(true)).count();
    let frac = |k: usize| (with_edges > 0).then(|| k as f64 / with_edges as f64);
    Aggregate {
        trials: records.len(),
        trials_with_edges: with_edges,
        packing_at_least_quarter: quarter,
        cover_within_twice_packing: twice,
        fraction_packing_at_least_quarter: frac(quarter),
        fraction_cover_within_twice_packing: frac(twice),
    }
}

fn steiner_packing(g: &Graph, triples: &[[usize; 3]]) -> (usize, PackingWitness) {
    let alive: Vec<_> = triples.iter().filter_map(|&[a, b, c]| g.triangle(a, b, c)).collect();
    let survivors = alive.len();
    let base = PackingWitness::new(alive).expect("Steiner triangles are edge-disjoint");
    (survivors, extend_packing(g, base, PackingOrder::Canonical))
}

pub fn run_trial(spec: &ExperimentSpec, trial: usize, triples: &[[usize; 3]]) -> TrialRecord {
    let seed = spec.seed.wrapping_add(trial as u64);
    let g = random_gnp(spec.n, spec.p, seed).expect("probability validated");
    let (survivors, packing) = match spec.estimator {
        Estimator::SteinerSeeded => {
            let (s, p) = steiner_packing(&g, triples);
            (Some(s), p)
        }
        Estimator::Greedy => (None, greedy_triangle_packing(&g, PackingOrder::Canonical)),
    };
    let cover = cover_via_bipartite(&g).size();
    let edges = g.num_edges();
    let nonempty = edges > 0;
    TrialRecord {
        trial,
        seed,
        edges,
        steiner_survivors: survivors,
        packing_lower_bound: packing.len(),
        cover_size: cover,
        packing_at_least_quarter: nonempty.then_some(4 * packing.len() >= edges),
        cover_within_twice_packing: nonempty.then_some(cover <= 2 * packing.len()),
    }
}

pub fn run_experiment(spec: &ExperimentSpec) -> Result<ExperimentResult, CliError> {
    spec.validate()?;
    let triples = match spec.estimator {
        Estimator::SteinerSeeded => steiner_triples(spec.n).map_err(|e| CliError::Precondition(e.to_string()))?,
        Estimator::Greedy => Vec::new(),
    };
    let records: Vec<TrialRecord> = (0..spec.trials).map(|i| run_trial(spec, i, &triples)).collect();
    let aggregate = aggregate(&records);
    Ok(ExperimentResult { spec: spec.clone(), records, aggregate })
}

/// Per-trial records as CSV with a header row.
pub fn records_csv(records: &[TrialRecord]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in records {
        w.serialize(r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv is utf-8")
}
