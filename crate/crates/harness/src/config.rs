//! Flat `key=value` experiment configuration.
//!
//! One assignment per line; `#` starts a comment; lists are comma-separated.
//! Keys are the field names of [`GameConfig`] and [`ExperimentSpec`]. Every
//! key is optional and defaults to the reference scenario: ten pursuers in
//! `[0,20]^2` (nine at speed 1, the last at speed 2), the evader in
//! `[8,12]^2` at speed 0.9, `t_f = 30`, capture radius 0.1, temperature
//! `10 / eta^2`, both modes, `dt` in {0.1, 0.01, 0.001}, 100 runs per cell.
//!
//! When `n_pursuers` is set without `pursuer_speeds`, the speeds default to 1
//! for every pursuer but the last, which gets 2.

use std::collections::HashSet;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use pursuit_core::config::default_speeds;
use pursuit_core::{GameConfig, Interval, Mode};

use crate::error::{HarnessError, Result};

/// A Monte Carlo experiment: every (mode, dt) cell runs `n_runs` episodes.
///
/// Run `k` of every cell uses seed `master_seed + k`, so cells are paired on
/// identical initial configurations.
#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentSpec {
    pub base: GameConfig,
    pub modes: Vec<Mode>,
    pub dt_grid: Vec<f64>,
    pub n_runs: u64,
    pub master_seed: u64,
    pub output_dir: PathBuf,
    /// Write one trace file per episode under `output_dir/traces`.
    pub write_traces: bool,
}

impl Default for ExperimentSpec {
    fn default() -> Self {
        Self {
            base: GameConfig::default(),
            modes: vec![Mode::Centralized, Mode::Decentralized],
            dt_grid: vec![0.1, 0.01, 0.001],
            n_runs: 100,
            master_seed: 0,
            output_dir: PathBuf::from("results"),
            write_traces: true,
        }
    }
}

impl ExperimentSpec {
    /// Seed of run `run` in every cell.
    pub fn run_seed(&self, run: u64) -> u64 {
        self.master_seed.wrapping_add(run)
    }

    /// Episode configuration for one run of one cell.
    pub fn episode_config(&self, mode: Mode, dt: f64, run: u64) -> GameConfig {
        GameConfig { mode, dt, seed: self.run_seed(run), ..self.base.clone() }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n_runs == 0 {
            return Err(invalid("n_runs", "must be at least 1"));
        }
        if self.modes.is_empty() {
            return Err(invalid("modes", "must list at least one mode"));
        }
        if self.dt_grid.is_empty() {
            return Err(invalid("dt_grid", "must list at least one step size"));
        }
        self.base.validate().map_err(core_invalid)?;
        for &dt in &self.dt_grid {
            GameConfig { dt, ..self.base.clone() }
                .validate()
                .map_err(|e| match e {
                    pursuit_core::Error::InvalidConfig { key: "dt", reason } => {
                        invalid("dt_grid", format!("{dt}: {reason}"))
                    }
                    other => core_invalid(other),
                })?;
        }
        Ok(())
    }
}

fn invalid(key: &str, reason: impl Into<String>) -> HarnessError {
    HarnessError::Invalid { key: key.to_string(), reason: reason.into() }
}

fn core_invalid(e: pursuit_core::Error) -> HarnessError {
    match e {
        pursuit_core::Error::InvalidConfig { key, reason } => invalid(key, reason),
        other => HarnessError::Core(other),
    }
}

const KEYS: &[&str] = &[
    "n_pursuers",
    "pursuer_speeds",
    "evader_speed",
    "t_f",
    "dt",
    "capture_radius",
    "pursuer_init_range",
    "evader_init_range",
    "tau_numerator",
    "seed",
    "mode",
    "modes",
    "dt_grid",
    "n_runs",
    "master_seed",
    "output_dir",
    "write_traces",
];

fn scalar<T: FromStr>(key: &str, value: &str, expected: &'static str) -> Result<T> {
    value.trim().parse().map_err(|_| HarnessError::Malformed {
        key: key.to_string(),
        value: value.to_string(),
        expected,
    })
}

fn list<T: FromStr>(key: &str, value: &str, expected: &'static str) -> Result<Vec<T>> {
    value.split(',').map(|item| scalar(key, item, expected)).collect()
}

fn range(key: &str, value: &str) -> Result<Interval> {
    match list::<f64>(key, value, "two numbers `lo,hi`")?.as_slice() {
        &[lo, hi] => Ok(Interval::new(lo, hi)),
        _ => Err(HarnessError::Malformed {
            key: key.to_string(),
            value: value.to_string(),
            expected: "two numbers `lo,hi`",
        }),
    }
}

fn boolean(key: &str, value: &str) -> Result<bool> {
    match value.trim().to_ascii_lowercase().as_str() {
        "true" | "1" | "yes" => Ok(true),
        "false" | "0" | "no" => Ok(false),
        _ => Err(HarnessError::Malformed {
            key: key.to_string(),
            value: value.to_string(),
            expected: "true or false",
        }),
    }
}

fn mode(key: &str, value: &str) -> Result<Mode> {
    value.parse().map_err(|_| HarnessError::Malformed {
        key: key.to_string(),
        value: value.to_string(),
        expected: "centralized or decentralized",
    })
}

/// Parse configuration text into a validated spec.
pub fn parse_config(text: &str) -> Result<ExperimentSpec> {
    let mut spec = ExperimentSpec::default();
    let mut seen = HashSet::new();
    let mut speeds_given = false;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(HarnessError::Syntax { line: line_no, content: raw.to_string() });
        };
        let key = key.trim();
        let value = value.trim();
        if !KEYS.contains(&key) {
            return Err(HarnessError::UnknownKey { line: line_no, key: key.to_string() });
        }
        if !seen.insert(key.to_string()) {
            return Err(HarnessError::DuplicateKey { line: line_no, key: key.to_string() });
        }

        let base = &mut spec.base;
        match key {
            "n_pursuers" => base.n_pursuers = scalar(key, value, "a positive integer")?,
            "pursuer_speeds" => {
                base.pursuer_speeds = list(key, value, "comma-separated numbers")?;
                speeds_given = true;
            }
            "evader_speed" => base.evader_speed = scalar(key, value, "a number")?,
            "t_f" => base.t_f = scalar(key, value, "a number")?,
            "dt" => base.dt = scalar(key, value, "a number")?,
            "capture_radius" => base.capture_radius = scalar(key, value, "a number")?,
            "pursuer_init_range" => base.pursuer_init_range = range(key, value)?,
            "evader_init_range" => base.evader_init_range = range(key, value)?,
            "tau_numerator" => base.tau_numerator = scalar(key, value, "a number")?,
            "seed" => base.seed = scalar(key, value, "an unsigned 64-bit integer")?,
            "mode" => base.mode = mode(key, value)?,
            "modes" => {
                spec.modes = value.split(',').map(|m| mode(key, m)).collect::<Result<_>>()?
            }
            "dt_grid" => spec.dt_grid = list(key, value, "comma-separated numbers")?,
            "n_runs" => spec.n_runs = scalar(key, value, "a positive integer")?,
            "master_seed" => spec.master_seed = scalar(key, value, "an unsigned 64-bit integer")?,
            "output_dir" => spec.output_dir = PathBuf::from(value),
            "write_traces" => spec.write_traces = boolean(key, value)?,
            _ => unreachable!("key list and match arms disagree"),
        }
    }

    if !speeds_given {
        spec.base.pursuer_speeds = default_speeds(spec.base.n_pursuers);
    }
    spec.validate()?;
    Ok(spec)
}

/// Read and parse a configuration file.
pub fn load_config(path: &Path) -> Result<ExperimentSpec> {
    if !path.exists() {
        return Err(HarnessError::MissingFile(path.to_path_buf()));
    }
    let text = fs::read_to_string(path).map_err(|e| HarnessError::io(path, e))?;
    parse_config(&text)
}
