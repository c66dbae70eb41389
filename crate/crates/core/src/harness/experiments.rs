//! Monte Carlo experiments over random trees and graphs.

use std::time::{Duration, Instant};

use super::csv::{fmt_opt, fmt_sig, CsvTable};
use super::pool::run_indexed;
use super::HarnessError;
use crate::bounds::bound_report_with_energy;
use crate::graph::Graph;
use crate::random::{ba_tree, erdos_renyi, recursive_tree, Seed};
use crate::spectral::energy;

/// Streams `ER_STREAM_OFFSET + r` feed the Erdős–Rényi replications so they
/// never share a stream with the tree replications `r`.
pub const ER_STREAM_OFFSET: u64 = 1 << 32;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Model {
    Ba { alpha: f64 },
    Rrt,
    Er { p: f64 },
}

impl Model {
    pub fn name(&self) -> &'static str {
        match self {
            Model::Ba { .. } => "ba",
            Model::Rrt => "rrt",
            Model::Er { .. } => "er",
        }
    }

    pub fn generate(&self, n: usize, seed: Seed) -> Graph {
        match *self {
            Model::Ba { alpha } => ba_tree(n, alpha, seed),
            Model::Rrt => recursive_tree(n, seed),
            Model::Er { p } => erdos_renyi(n, p, seed),
        }
    }
}

/// Measurements on one replication.
#[derive(Debug, Clone, PartialEq)]
pub struct RunRecord {
    pub experiment: &'static str,
    pub rep: usize,
    pub model: Model,
    pub seed: Seed,
    pub n: usize,
    pub m: usize,
    pub e22: usize,
    pub energy: f64,
    /// Star-partition tree bound; absent for non-trees.
    pub thm31: Option<f64>,
    /// Pair-refined tree bound; absent unless backed by enough merges.
    pub thm4: Option<f64>,
    /// Not part of the CSV output, which must not depend on timing.
    pub wall_time: Duration,
}

pub const RECORD_HEADER: [&str; 14] = [
    "experiment",
    "rep",
    "model",
    "alpha",
    "p",
    "seed",
    "stream",
    "n",
    "m",
    "e22",
    "energy",
    "energy_over_n",
    "thm31_over_n",
    "thm4_over_n",
];

impl RunRecord {
    pub fn measure(experiment: &'static str, rep: usize, model: Model, n: usize, seed: Seed) -> Self {
        let start = Instant::now();
        let g = model.generate(n, seed);
        let e = energy(&g);
        let report = bound_report_with_energy(&g, e);
        RunRecord {
            experiment,
            rep,
            model,
            seed,
            n,
            m: report.m,
            e22: report.e22,
            energy: e,
            thm31: report.tree_star.ok(),
            thm4: report.tree_star_paired.ok(),
            wall_time: start.elapsed(),
        }
    }

    pub fn energy_over_n(&self) -> f64 {
        self.energy / self.n as f64
    }

    pub fn thm31_over_n(&self) -> Option<f64> {
        self.thm31.map(|b| b / self.n as f64)
    }

    pub fn thm4_over_n(&self) -> Option<f64> {
        self.thm4.map(|b| b / self.n as f64)
    }

    pub fn csv_row(&self) -> Vec<String> {
        let (alpha, p) = match self.model {
            Model::Ba { alpha } => (Some(alpha), None),
            Model::Rrt => (Some(0.0), None),
            Model::Er { p } => (None, Some(p)),
        };
        vec![
            self.experiment.to_string(),
            self.rep.to_string(),
            self.model.name().to_string(),
            fmt_opt(alpha),
            fmt_opt(p),
            self.seed.master.to_string(),
            self.seed.stream.to_string(),
            self.n.to_string(),
            self.m.to_string(),
            self.e22.to_string(),
            fmt_sig(self.energy),
            fmt_sig(self.energy_over_n()),
            fmt_opt(self.thm31_over_n()),
            fmt_opt(self.thm4_over_n()),
        ]
    }
}

pub fn records_csv(records: &[RunRecord]) -> CsvTable {
    let mut t = CsvTable::new(RECORD_HEADER);
    for r in records {
        t.push(r.csv_row());
    }
    t
}

/// Sample mean and (n - 1)-normalized standard deviation; the deviation is
/// 0 for a single value.
pub fn mean_std(xs: &[f64]) -> (f64, f64) {
    let k = xs.len();
    if k == 0 {
        return (f64::NAN, f64::NAN);
    }
    let mean = xs.iter().sum::<f64>() / k as f64;
    if k == 1 {
        return (mean, 0.0);
    }
    let ss: f64 = xs.iter().map(|x| (x - mean) * (x - mean)).sum();
    (mean, (ss / (k - 1) as f64).sqrt())
}

/// BA(`alpha`) trees with replication `r` drawn from `Seed(master, r)`.
pub fn run_ba_bound_series(
    n: usize,
    reps: usize,
    alpha: f64,
    master_seed: u64,
    workers: usize,
) -> Vec<RunRecord> {
    run_indexed(reps, workers, |r| {
        RunRecord::measure("fig3", r, Model::Ba { alpha }, n, Seed::new(master_seed, r as u64))
    })
}

/// Every `(alpha, rep)` pair, alpha-major, replication `r` on stream `r`
/// regardless of alpha.
fn run_alpha_grid(
    experiment: &'static str,
    alphas: &[f64],
    n: usize,
    reps: usize,
    master_seed: u64,
    workers: usize,
) -> Vec<RunRecord> {
    run_indexed(alphas.len() * reps, workers, |k| {
        let (a, r) = (k / reps, k % reps);
        RunRecord::measure(
            experiment,
            r,
            Model::Ba { alpha: alphas[a] },
            n,
            Seed::new(master_seed, r as u64),
        )
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CumulativePoint {
    pub alpha: f64,
    pub rep: usize,
    pub energy_over_n: f64,
    /// Mean of `energy_over_n` over replications `0..=rep`.
    pub cumulative_mean: f64,
}

/// Running mean of energy/n per alpha, one point per replication.
pub fn run_alpha_cumulative(
    alphas: &[f64],
    n: usize,
    reps: usize,
    master_seed: u64,
    workers: usize,
) -> Vec<CumulativePoint> {
    let records = run_alpha_grid("fig4", alphas, n, reps, master_seed, workers);
    let mut out = Vec::with_capacity(records.len());
    for chunk in records.chunks(reps) {
        let mut sum = 0.0;
        for (i, rec) in chunk.iter().enumerate() {
            let ratio = rec.energy_over_n();
            sum += ratio;
            let Model::Ba { alpha } = rec.model else {
                unreachable!("alpha grid only holds BA trees")
            };
            out.push(CumulativePoint {
                alpha,
                rep: rec.rep,
                energy_over_n: ratio,
                cumulative_mean: sum / (i + 1) as f64,
            });
        }
    }
    out
}

pub fn cumulative_csv(points: &[CumulativePoint]) -> CsvTable {
    let mut t = CsvTable::new(["alpha", "rep", "energy_over_n", "cumulative_mean"]);
    for p in points {
        t.push(vec![
            fmt_sig(p.alpha),
            p.rep.to_string(),
            fmt_sig(p.energy_over_n),
            fmt_sig(p.cumulative_mean),
        ]);
    }
    t
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepPoint {
    pub alpha: f64,
    pub mean: f64,
    pub std: f64,
    pub reps: usize,
}

/// Mean and standard deviation of energy/n for each alpha.
pub fn run_alpha_sweep(
    alphas: &[f64],
    n: usize,
    reps: usize,
    master_seed: u64,
    workers: usize,
) -> Vec<SweepPoint> {
    let records = run_alpha_grid("fig5", alphas, n, reps, master_seed, workers);
    records
        .chunks(reps)
        .zip(alphas)
        .map(|(chunk, &alpha)| {
            let ratios: Vec<f64> = chunk.iter().map(RunRecord::energy_over_n).collect();
            let (mean, std) = mean_std(&ratios);
            SweepPoint {
                alpha,
                mean,
                std,
                reps,
            }
        })
        .collect()
}

pub fn sweep_csv(points: &[SweepPoint]) -> CsvTable {
    let mut t = CsvTable::new(["alpha", "mean", "std", "reps"]);
    for p in points {
        t.push(vec![
            fmt_sig(p.alpha),
            fmt_sig(p.mean),
            fmt_sig(p.std),
            p.reps.to_string(),
        ]);
    }
    t
}

/// `count` evenly spaced points from `lo` to `hi` inclusive.
pub fn linspace(lo: f64, hi: f64, count: usize) -> Vec<f64> {
    match count {
        0 => Vec::new(),
        1 => vec![lo],
        _ => (0..count)
            .map(|i| {
                if i == count - 1 {
                    hi
                } else {
                    lo + (hi - lo) * i as f64 / (count - 1) as f64
                }
            })
            .collect(),
    }
}

/// Alpha where the mean ratio first falls through 1, scanning alpha upward,
/// by linear interpolation between the two bracketing grid points.
pub fn estimate_threshold(points: &[(f64, f64)]) -> Result<f64, HarnessError> {
    let mut sorted = points.to_vec();
    sorted.sort_by(|a, b| a.0.total_cmp(&b.0));
    for w in sorted.windows(2) {
        let ((a0, m0), (a1, m1)) = (w[0], w[1]);
        if m0 >= 1.0 && m1 < 1.0 {
            if m0 == 1.0 {
                return Ok(a0);
            }
            return Ok(a0 + (m0 - 1.0) * (a1 - a0) / (m0 - m1));
        }
    }
    Err(HarnessError::NoCrossing)
}

/// Paired recursive-tree and G(n, p) replications; `p` defaults to `2/n`
/// so both models have about `n` edges.
#[derive(Debug, Clone, PartialEq)]
pub struct ErVsRrt {
    pub p: f64,
    pub rrt: Vec<RunRecord>,
    pub er: Vec<RunRecord>,
}

pub fn run_er_vs_rrt(n: usize, reps: usize, master_seed: u64, workers: usize) -> ErVsRrt {
    let p = 2.0 / n as f64;
    let mut both = run_indexed(2 * reps, workers, |k| {
        let r = k / 2;
        if k % 2 == 0 {
            RunRecord::measure("fig6", r, Model::Rrt, n, Seed::new(master_seed, r as u64))
        } else {
            RunRecord::measure(
                "fig6",
                r,
                Model::Er { p },
                n,
                Seed::new(master_seed, ER_STREAM_OFFSET + r as u64),
            )
        }
    });
    let mut rrt = Vec::with_capacity(reps);
    let mut er = Vec::with_capacity(reps);
    for (k, rec) in both.drain(..).enumerate() {
        if k % 2 == 0 {
            rrt.push(rec);
        } else {
            er.push(rec);
        }
    }
    ErVsRrt { p, rrt, er }
}

impl ErVsRrt {
    pub fn rrt_ratios(&self) -> Vec<f64> {
        self.rrt.iter().map(RunRecord::energy_over_n).collect()
    }

    pub fn er_ratios(&self) -> Vec<f64> {
        self.er.iter().map(RunRecord::energy_over_n).collect()
    }

    /// One row per replication with both ratios side by side.
    pub fn to_csv(&self) -> CsvTable {
        let mut t = CsvTable::new(["rep", "n", "p", "rrt_energy_over_n", "er_energy_over_n", "er_m"]);
        for (a, b) in self.rrt.iter().zip(&self.er) {
            t.push(vec![
                a.rep.to_string(),
                a.n.to_string(),
                fmt_sig(self.p),
                fmt_sig(a.energy_over_n()),
                fmt_sig(b.energy_over_n()),
                b.m.to_string(),
            ]);
        }
        t
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn threshold_interpolation() {
        assert_eq!(estimate_threshold(&[(0.0, 1.2), (1.0, 0.8)]).unwrap(), 0.5);
        assert_eq!(estimate_threshold(&[(1.0, 0.8), (0.0, 1.2)]).unwrap(), 0.5);
        assert!(matches!(
            estimate_threshold(&[(0.0, 1.2), (1.0, 1.1)]),
            Err(HarnessError::NoCrossing)
        ));
        // upward crossings are ignored
        assert!(estimate_threshold(&[(0.0, 0.9), (1.0, 1.1)]).is_err());
        assert_eq!(
            estimate_threshold(&[(-1.0, 1.3), (0.0, 1.0), (1.0, 0.5)]).unwrap(),
            0.0
        );
    }

    #[test]
    fn grid_endpoints() {
        let g = linspace(-2.0, 5.0, 20);
        assert_eq!(g.len(), 20);
        assert_eq!((g[0], g[19]), (-2.0, 5.0));
        assert!(g.windows(2).all(|w| w[1] > w[0]));
        assert_eq!(linspace(1.0, 2.0, 1), vec![1.0]);
    }

    #[test]
    fn mean_std_values() {
        let (m, s) = mean_std(&[1.0, 2.0, 3.0, 4.0]);
        assert_eq!(m, 2.5);
        assert!((s - (5.0f64 / 3.0).sqrt()).abs() < 1e-15);
        assert_eq!(mean_std(&[7.0]), (7.0, 0.0));
    }

    #[test]
    fn series_records_are_dominated() {
        let recs = run_ba_bound_series(60, 6, 1.0, 11, 2);
        assert_eq!(recs.len(), 6);
        for (r, rec) in recs.iter().enumerate() {
            assert_eq!(rec.rep, r);
            assert_eq!(rec.seed, Seed::new(11, r as u64));
            let b = rec.thm31_over_n().unwrap();
            assert!(rec.energy_over_n() < b);
            if let Some(b4) = rec.thm4_over_n() {
                assert!(rec.energy_over_n() <= b4 + 1e-12 && b4 <= b);
            }
        }
    }

    #[test]
    fn cumulative_final_mean_matches() {
        let pts = run_alpha_cumulative(&[-1.0, 1.0], 40, 5, 3, 1);
        assert_eq!(pts.len(), 10);
        for chunk in pts.chunks(5) {
            let plain = chunk.iter().map(|p| p.energy_over_n).sum::<f64>() / 5.0;
            assert!((chunk[4].cumulative_mean - plain).abs() < 1e-12);
        }
    }

    #[test]
    fn zero_alpha_matches_recursive_series() {
        let pts = run_alpha_cumulative(&[0.0], 50, 4, 9, 1);
        let pair = run_er_vs_rrt(50, 4, 9, 1);
        let a: Vec<f64> = pts.iter().map(|p| p.energy_over_n).collect();
        assert_eq!(a, pair.rrt_ratios());
    }

    #[test]
    fn er_pairing() {
        let pair = run_er_vs_rrt(80, 3, 5, 3);
        assert_eq!(pair.p, 2.0 / 80.0);
        assert!(pair.rrt.iter().all(|r| r.m == 79 && r.thm31.is_some()));
        for (r, rec) in pair.er.iter().enumerate() {
            assert_eq!(rec.seed.stream, ER_STREAM_OFFSET + r as u64);
        }
        assert_eq!(pair.to_csv().rows().len(), 3);
    }
}
