//! Monte Carlo runs over a grid of (mode, dt) cells and their aggregation.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use rayon::prelude::*;

use pursuit_core::{active_time_totals, run_episode, Mode, Outcome};

use crate::config::ExperimentSpec;
use crate::error::{HarnessError, Result};
use crate::export::export_trace;

pub const REPORT_FILE: &str = "report.csv";
pub const BREAKDOWN_FILE: &str = "pursuer_breakdown.csv";
pub const TRACE_DIR: &str = "traces";

/// Metrics of one episode.
#[derive(Debug, Clone, PartialEq)]
pub struct EpisodeSummary {
    pub seed: u64,
    pub outcome: Outcome,
    /// Chasing time of each pursuer.
    pub active_times: Vec<f64>,
    pub steps: usize,
    pub mean_active_final_half: f64,
}

impl EpisodeSummary {
    pub fn total_active_time(&self) -> f64 {
        self.active_times.iter().sum()
    }
}

/// Aggregates of one (mode, dt) cell.
#[derive(Debug, Clone, PartialEq)]
pub struct CellReport {
    pub mode: Mode,
    pub dt: f64,
    pub n_runs: u64,
    /// Sum over pursuers of chasing time, averaged over runs.
    pub mean_total_active_time: f64,
    /// Mean capture time over captured runs; NaN when none was captured.
    pub mean_capture_time: f64,
    pub capture_rate: f64,
    /// Per-pursuer chasing time averaged over runs.
    pub mean_active_time_by_pursuer: Vec<f64>,
    /// How many runs each pursuer ended by capture.
    pub captures_by_pursuer: Vec<u64>,
    /// Mean number of active pursuers over the second half of each run.
    pub mean_active_final_half: f64,
}

impl CellReport {
    /// Reduce run summaries, in run order.
    pub fn aggregate(mode: Mode, dt: f64, runs: &[EpisodeSummary]) -> Self {
        let n_pursuers = runs.first().map_or(0, |r| r.active_times.len());
        let count = runs.len() as f64;
        let mut by_pursuer = vec![0.0; n_pursuers];
        let mut captures_by = vec![0u64; n_pursuers];
        let mut total_active = 0.0;
        let mut capture_sum = 0.0;
        let mut captured = 0u64;
        let mut final_half = 0.0;
        for r in runs {
            total_active += r.total_active_time();
            for (acc, t) in by_pursuer.iter_mut().zip(&r.active_times) {
                *acc += t;
            }
            if let Outcome::Captured { by, at } = r.outcome {
                captured += 1;
                capture_sum += at;
                captures_by[by] += 1;
            }
            final_half += r.mean_active_final_half;
        }
        Self {
            mode,
            dt,
            n_runs: runs.len() as u64,
            mean_total_active_time: total_active / count,
            mean_capture_time: if captured > 0 { capture_sum / captured as f64 } else { f64::NAN },
            capture_rate: captured as f64 / count,
            mean_active_time_by_pursuer: by_pursuer.into_iter().map(|t| t / count).collect(),
            captures_by_pursuer: captures_by,
            mean_active_final_half: final_half / count,
        }
    }
}

/// Results of every cell, in (mode, dt) order of the spec.
#[derive(Debug, Clone, PartialEq)]
pub struct AggregateReport {
    pub cells: Vec<CellReport>,
}

impl AggregateReport {
    pub fn cell(&self, mode: Mode, dt: f64) -> Option<&CellReport> {
        self.cells.iter().find(|c| c.mode == mode && c.dt == dt)
    }

    /// `mode,dt,n_runs,mean_total_active_time,mean_capture_time,capture_rate`
    pub fn to_csv(&self) -> String {
        let mut out =
            String::from("mode,dt,n_runs,mean_total_active_time,mean_capture_time,capture_rate\n");
        for c in &self.cells {
            writeln!(
                out,
                "{},{},{},{},{},{}",
                c.mode, c.dt, c.n_runs, c.mean_total_active_time, c.mean_capture_time, c.capture_rate
            )
            .unwrap();
        }
        out
    }

    /// `mode,dt,pursuer,mean_active_time,captures`
    pub fn breakdown_csv(&self) -> String {
        let mut out = String::from("mode,dt,pursuer,mean_active_time,captures\n");
        for c in &self.cells {
            for (i, (t, k)) in c.mean_active_time_by_pursuer.iter().zip(&c.captures_by_pursuer).enumerate() {
                writeln!(out, "{},{},{i},{t},{k}", c.mode, c.dt).unwrap();
            }
        }
        out
    }
}

pub fn trace_file_name(mode: Mode, dt: f64, run: u64) -> String {
    format!("{mode}_dt{dt}_run{run:04}.csv")
}

/// Run one episode of a cell, optionally exporting its trace.
pub fn run_one(
    spec: &ExperimentSpec,
    mode: Mode,
    dt: f64,
    run: u64,
    trace_dir: Option<&Path>,
) -> Result<EpisodeSummary> {
    let config = spec.episode_config(mode, dt, run);
    let trace = run_episode(&config).map_err(|source| HarnessError::Episode {
        mode,
        dt,
        run,
        seed: config.seed,
        source,
    })?;
    if let Some(dir) = trace_dir {
        export_trace(&trace, &dir.join(trace_file_name(mode, dt, run)))?;
    }
    Ok(EpisodeSummary {
        seed: config.seed,
        outcome: trace.outcome,
        active_times: active_time_totals(&trace, dt),
        steps: trace.len(),
        mean_active_final_half: trace.mean_active_final_half(),
    })
}

/// Run all episodes of one cell. Episodes run in parallel; the reduction is
/// in run order, so results do not depend on scheduling.
pub fn run_cell(spec: &ExperimentSpec, mode: Mode, dt: f64, trace_dir: Option<&Path>) -> Result<CellReport> {
    let runs = (0..spec.n_runs)
        .into_par_iter()
        .map(|run| run_one(spec, mode, dt, run, trace_dir))
        .collect::<Result<Vec<_>>>()?;
    Ok(CellReport::aggregate(mode, dt, &runs))
}

/// Run every cell without touching the filesystem.
pub fn run_cells(spec: &ExperimentSpec) -> Result<AggregateReport> {
    spec.validate()?;
    let mut cells = Vec::new();
    for &mode in &spec.modes {
        for &dt in &spec.dt_grid {
            cells.push(run_cell(spec, mode, dt, None)?);
        }
    }
    Ok(AggregateReport { cells })
}

/// Run the experiment and write the report, the per-pursuer breakdown and
/// (when enabled) every trace under `spec.output_dir`.
pub fn run_experiment(spec: &ExperimentSpec) -> Result<AggregateReport> {
    spec.validate()?;
    let out = &spec.output_dir;
    fs::create_dir_all(out).map_err(|e| HarnessError::io(out, e))?;
    let trace_dir: Option<PathBuf> = spec.write_traces.then(|| out.join(TRACE_DIR));
    if let Some(dir) = &trace_dir {
        fs::create_dir_all(dir).map_err(|e| HarnessError::io(dir, e))?;
    }

    let mut cells = Vec::new();
    for &mode in &spec.modes {
        for &dt in &spec.dt_grid {
            cells.push(run_cell(spec, mode, dt, trace_dir.as_deref())?);
        }
    }
    let report = AggregateReport { cells };

    let path = out.join(REPORT_FILE);
    fs::write(&path, report.to_csv()).map_err(|e| HarnessError::io(&path, e))?;
    let path = out.join(BREAKDOWN_FILE);
    fs::write(&path, report.breakdown_csv()).map_err(|e| HarnessError::io(&path, e))?;
    Ok(report)
}
