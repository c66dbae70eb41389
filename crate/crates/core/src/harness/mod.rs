//! Reproducible tables and Monte Carlo experiments, emitted as CSV.
//!
//! Replications run on a worker pool but results are collected by
//! replication index, so the output bytes depend only on the configuration
//! and the master seed.

pub mod csv;
mod experiments;
mod pool;
mod tables;

use std::path::PathBuf;

use thiserror::Error;

use crate::bounds::BoundError;
use crate::graph::GraphError;
use crate::spectral::SpectralError;

pub use csv::{fmt_sig, CsvTable, VERSION_LINE};
pub use experiments::{
    cumulative_csv, estimate_threshold, linspace, mean_std, records_csv, run_alpha_cumulative,
    run_alpha_sweep, run_ba_bound_series, run_er_vs_rrt, sweep_csv, CumulativePoint, ErVsRrt,
    Model, RunRecord, SweepPoint, ER_STREAM_OFFSET, RECORD_HEADER,
};
pub use pool::{default_workers, run_indexed, WORKERS_ENV};
pub use tables::{run_double_star_table, run_path_table, table_csv, TableRow, CROSS_CHECK_TOL};

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("sweep never falls through mean 1")]
    NoCrossing,
    #[error("closed-form energy {closed} disagrees with eigensolver {numeric} at n = {n}")]
    CrossCheck { n: usize, closed: f64, numeric: f64 },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
    #[error(transparent)]
    Bound(#[from] BoundError),
}

/// Attachment exponents of the cumulative-average experiment.
pub const CUMULATIVE_ALPHAS: [f64; 10] = [-5.0, -2.0, 0.0, 0.5, 0.7, 1.0, 1.2, 1.5, 1.7, 2.0];

#[derive(Debug, Clone, PartialEq)]
pub enum Experiment {
    DoubleStarTable { p: usize, q_max: usize },
    PathTable { n_max: usize },
    /// Energy and tree bounds of BA(`alpha`) trees.
    BaBoundSeries { alpha: f64 },
    AlphaCumulative { alphas: Vec<f64> },
    AlphaSweep { alphas: Vec<f64> },
    ErVsRrt,
}

impl Experiment {
    pub fn id(&self) -> &'static str {
        match self {
            Experiment::DoubleStarTable { .. } => "double_star",
            Experiment::PathTable { .. } => "path",
            Experiment::BaBoundSeries { .. } => "fig3",
            Experiment::AlphaCumulative { .. } => "fig4",
            Experiment::AlphaSweep { .. } => "fig5",
            Experiment::ErVsRrt => "fig6",
        }
    }

    fn is_random(&self) -> bool {
        !matches!(
            self,
            Experiment::DoubleStarTable { .. } | Experiment::PathTable { .. }
        )
    }
}

/// Which preset sizes [`ExperimentConfig::preset`] should use.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scale {
    /// Runs in minutes on one core.
    Desk,
    /// Large sizes; hours on one core.
    Full,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentConfig {
    pub experiment: Experiment,
    /// Vertex count of each random graph (unused by the tables).
    pub n: usize,
    pub reps: usize,
    pub master_seed: u64,
    pub workers: usize,
    pub output: Option<PathBuf>,
}

impl ExperimentConfig {
    /// Preset for `fig3`..`fig6`; `None` for any other name.
    pub fn preset(name: &str, scale: Scale) -> Option<Self> {
        let full = scale == Scale::Full;
        let (experiment, n, reps) = match name {
            "fig3" => (
                Experiment::BaBoundSeries { alpha: 1.0 },
                if full { 2000 } else { 500 },
                if full { 200 } else { 50 },
            ),
            "fig4" => (
                Experiment::AlphaCumulative {
                    alphas: CUMULATIVE_ALPHAS.to_vec(),
                },
                if full { 1000 } else { 200 },
                if full { 100 } else { 20 },
            ),
            "fig5" => (
                Experiment::AlphaSweep {
                    alphas: linspace(-2.0, 5.0, if full { 80 } else { 20 }),
                },
                if full { 1000 } else { 500 },
                if full { 50 } else { 20 },
            ),
            "fig6" => (
                Experiment::ErVsRrt,
                if full { 3000 } else { 1000 },
                if full { 100 } else { 30 },
            ),
            _ => return None,
        };
        Some(ExperimentConfig {
            experiment,
            n,
            reps,
            master_seed: 1,
            workers: default_workers(),
            output: None,
        })
    }

    pub fn validate(&self) -> Result<(), HarnessError> {
        let bad = |msg: String| Err(HarnessError::Config(msg));
        if self.workers == 0 {
            return bad("workers must be at least 1".into());
        }
        match &self.experiment {
            Experiment::DoubleStarTable { p, q_max } => {
                if *p == 0 || *q_max == 0 {
                    return bad(format!("double star needs p, q >= 1, got p = {p}, q_max = {q_max}"));
                }
            }
            Experiment::PathTable { n_max } => {
                if *n_max < 2 {
                    return bad(format!("path table needs n_max >= 2, got {n_max}"));
                }
            }
            Experiment::BaBoundSeries { alpha } => {
                if !alpha.is_finite() {
                    return bad(format!("alpha must be finite, got {alpha}"));
                }
            }
            Experiment::AlphaCumulative { alphas } | Experiment::AlphaSweep { alphas } => {
                if alphas.is_empty() || alphas.iter().any(|a| !a.is_finite()) {
                    return bad("alpha list must be non-empty and finite".into());
                }
            }
            Experiment::ErVsRrt => {}
        }
        if self.experiment.is_random() {
            if self.reps == 0 {
                return bad("reps must be at least 1".into());
            }
            if self.n < 3 {
                return bad(format!("random experiments need n >= 3, got {}", self.n));
            }
        }
        Ok(())
    }

    /// Runs the experiment and returns its CSV table.
    pub fn run(&self) -> Result<CsvTable, HarnessError> {
        self.validate()?;
        let (n, reps, seed, workers) = (self.n, self.reps, self.master_seed, self.workers);
        Ok(match &self.experiment {
            Experiment::DoubleStarTable { p, q_max } => {
                table_csv("q", &run_double_star_table(*p, 1..=*q_max)?)
            }
            Experiment::PathTable { n_max } => table_csv("n", &run_path_table(2..=*n_max)?),
            Experiment::BaBoundSeries { alpha } => {
                records_csv(&run_ba_bound_series(n, reps, *alpha, seed, workers))
            }
            Experiment::AlphaCumulative { alphas } => {
                cumulative_csv(&run_alpha_cumulative(alphas, n, reps, seed, workers))
            }
            Experiment::AlphaSweep { alphas } => {
                sweep_csv(&run_alpha_sweep(alphas, n, reps, seed, workers))
            }
            Experiment::ErVsRrt => run_er_vs_rrt(n, reps, seed, workers).to_csv(),
        })
    }
}
