use std::io::Write;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{invalid, Result};
use crate::graph::BipartiteGraph;
use crate::pipeline::{find_all_even_cycles, BridgeMode, CycleCatalog, PipelineConfig};
use crate::random_model::{derive_seed, sample_gnnp, ModelParams};
use crate::{floor_tol, harness::adversary_delete};

use super::{AdversaryKind, AdversaryStrategy};

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub enum Probability {
    P(f64),
    /// `p = c n^(-2/3)`.
    C(f64),
}

/// How many edges the adversary leaves behind.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub enum EdgeTarget {
    /// `floor((1 + eps) n^2 p / 2) + 1`, the smallest count above threshold.
    JustAboveThreshold,
    /// `floor(f n^2 p / 2)`.
    HalfExpectedTimes(f64),
    Absolute(usize),
    /// No deletion: `G' = G`.
    KeepAll,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExperimentCell {
    pub n: usize,
    pub probability: Probability,
    pub eps: f64,
    pub strategy: AdversaryKind,
    pub trials: usize,
    pub target: EdgeTarget,
    pub t_max_override: Option<usize>,
    pub bridge_mode: BridgeMode,
}

impl ExperimentCell {
    pub fn new(
        n: usize,
        probability: Probability,
        eps: f64,
        strategy: AdversaryKind,
        trials: usize,
    ) -> Self {
        ExperimentCell {
            n,
            probability,
            eps,
            strategy,
            trials,
            target: EdgeTarget::JustAboveThreshold,
            t_max_override: None,
            bridge_mode: BridgeMode::default(),
        }
    }

    pub fn params(&self, seed: u64) -> Result<ModelParams> {
        match self.probability {
            Probability::P(p) => ModelParams::with_p(self.n, p, seed),
            Probability::C(c) => ModelParams::with_c(self.n, c, seed),
        }
    }

    pub fn config(&self) -> Result<PipelineConfig> {
        let cfg = PipelineConfig::new(self.eps)?.with_bridge_mode(self.bridge_mode);
        match self.t_max_override {
            Some(t) => cfg.with_t_max(t),
            None => Ok(cfg),
        }
    }

    /// Target edge count for `G'`, capped at `m`.
    pub fn edges_after(&self, params: &ModelParams, m: usize) -> usize {
        let half = params.n as f64 * params.n as f64 * params.p / 2.0;
        let k = match self.target {
            EdgeTarget::JustAboveThreshold => floor_tol((1.0 + self.eps) * half) + 1,
            EdgeTarget::HalfExpectedTimes(f) => floor_tol(f * half),
            EdgeTarget::Absolute(k) => k,
            EdgeTarget::KeepAll => m,
        };
        k.min(m)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Timing {
    #[default]
    Measure,
    /// Writes 0 in the runtime column so output is byte-identical per seed.
    Omit,
}

/// One CSV row. Column order is fixed.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExperimentRow {
    #[serde(skip)]
    pub cell: usize,
    #[serde(skip)]
    pub trial: usize,
    pub seed: u64,
    pub n: usize,
    pub p: f64,
    pub eps: f64,
    pub strategy: AdversaryKind,
    pub edges_after: usize,
    /// `4-<t_max>`, or `none` when the scale is degenerate.
    pub t_range: String,
    pub misses: usize,
    pub runtime_ms: u64,
}

/// Everything produced by a single trial.
#[derive(Clone, Debug)]
pub struct TrialOutcome {
    pub row: ExperimentRow,
    pub params: ModelParams,
    pub gprime: BipartiteGraph,
    pub catalog: CycleCatalog,
}

/// Seed of trial `trial` in cell `cell`.
pub fn trial_seed(master_seed: u64, cell: usize, trial: usize) -> u64 {
    derive_seed(master_seed, ((cell as u64) << 32) | trial as u64)
}

/// Samples `G`, thins it with the cell's adversary and runs the pipeline.
pub fn run_trial(
    cell: &ExperimentCell,
    cell_index: usize,
    trial: usize,
    master_seed: u64,
    timing: Timing,
) -> Result<TrialOutcome> {
    let seed = trial_seed(master_seed, cell_index, trial);
    let params = cell.params(seed)?;
    let config = cell.config()?;
    let clock = Instant::now();
    let g = sample_gnnp(&params)?;
    let m = g.edge_count();
    let edges_after = cell.edges_after(&params, m);
    let strategy = AdversaryStrategy {
        kind: cell.strategy,
        budget: m - edges_after,
    };
    let gprime = adversary_delete(&g, &strategy, derive_seed(seed, 1))?;
    let catalog = find_all_even_cycles(&gprime, &config, &params)?;
    let runtime_ms = match timing {
        Timing::Measure => clock.elapsed().as_millis() as u64,
        Timing::Omit => 0,
    };
    let t_range = if catalog.notice.is_some() {
        "none".to_string()
    } else {
        format!("4-{}", catalog.t_max)
    };
    let row = ExperimentRow {
        cell: cell_index,
        trial,
        seed,
        n: params.n,
        p: params.p,
        eps: cell.eps,
        strategy: cell.strategy,
        edges_after: gprime.edge_count(),
        t_range,
        misses: catalog.misses.len(),
        runtime_ms,
    };
    Ok(TrialOutcome {
        row,
        params,
        gprime,
        catalog,
    })
}

/// Runs every trial of every cell in parallel. Output order is by
/// `(cell, trial)` regardless of scheduling.
pub fn run_trials(
    grid: &[ExperimentCell],
    master_seed: u64,
    timing: Timing,
) -> Result<Vec<TrialOutcome>> {
    for cell in grid {
        cell.config()?;
        cell.params(0)?;
        if cell.trials == 0 {
            return Err(invalid("every cell needs at least one trial"));
        }
    }
    let jobs: Vec<(usize, usize)> = grid
        .iter()
        .enumerate()
        .flat_map(|(c, cell)| (0..cell.trials).map(move |t| (c, t)))
        .collect();
    jobs.par_iter()
        .map(|&(c, t)| run_trial(&grid[c], c, t, master_seed, timing))
        .collect()
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct ExperimentReport {
    pub rows: Vec<ExperimentRow>,
}

impl ExperimentReport {
    pub fn write_csv<W: Write>(&self, writer: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(writer);
        for row in &self.rows {
            w.serialize(row)?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn to_csv_string(&self) -> Result<String> {
        let mut buf = Vec::new();
        self.write_csv(&mut buf)?;
        Ok(String::from_utf8(buf).expect("csv output is UTF-8"))
    }

    pub fn total_misses(&self) -> usize {
        self.rows.iter().map(|r| r.misses).sum()
    }
}

pub fn run_experiment(
    grid: &[ExperimentCell],
    master_seed: u64,
    timing: Timing,
) -> Result<ExperimentReport> {
    let rows = run_trials(grid, master_seed, timing)?
        .into_iter()
        .map(|o| o.row)
        .collect();
    Ok(ExperimentReport { rows })
}
