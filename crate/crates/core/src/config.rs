use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// How the active pursuer is chosen each step.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Mode {
    /// A central server activates the pursuer with the smallest capture time.
    Centralized,
    /// Pursuers negotiate through spatial adaptive play, one update per step.
    Decentralized,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Centralized => "centralized",
            Mode::Decentralized => "decentralized",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "centralized" | "central" => Ok(Mode::Centralized),
            "decentralized" | "sap" => Ok(Mode::Decentralized),
            other => Err(Error::InvalidArgument(format!("unknown mode `{other}`"))),
        }
    }
}

/// Closed interval `[lo, hi]` applied to each coordinate independently.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

impl Interval {
    pub const fn new(lo: f64, hi: f64) -> Self {
        Self { lo, hi }
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }
}

/// Scenario parameters for one episode.
#[derive(Debug, Clone, PartialEq)]
pub struct GameConfig {
    pub n_pursuers: usize,
    pub pursuer_speeds: Vec<f64>,
    pub evader_speed: f64,
    /// Game horizon.
    pub t_f: f64,
    /// Duration of one turn.
    pub dt: f64,
    pub capture_radius: f64,
    pub pursuer_init_range: Interval,
    pub evader_init_range: Interval,
    /// Temperature schedule is `tau_numerator / eta^2` at step `eta`.
    pub tau_numerator: f64,
    pub seed: u64,
    pub mode: Mode,
}

impl Default for GameConfig {
    /// Ten pursuers, the last of which is the only one faster than the evader.
    fn default() -> Self {
        Self {
            n_pursuers: 10,
            pursuer_speeds: default_speeds(10),
            evader_speed: 0.9,
            t_f: 30.0,
            dt: 0.1,
            capture_radius: 0.1,
            pursuer_init_range: Interval::new(0.0, 20.0),
            evader_init_range: Interval::new(8.0, 12.0),
            tau_numerator: 10.0,
            seed: 0,
            mode: Mode::Decentralized,
        }
    }
}

/// Unit speed for every pursuer except the last, which moves at speed 2.
pub fn default_speeds(n: usize) -> Vec<f64> {
    (0..n).map(|i| if i + 1 == n { 2.0 } else { 1.0 }).collect()
}

fn invalid(key: &'static str, reason: impl Into<String>) -> Error {
    Error::InvalidConfig { key, reason: reason.into() }
}

fn positive(key: &'static str, x: f64) -> Result<()> {
    if x.is_finite() && x > 0.0 {
        Ok(())
    } else {
        Err(invalid(key, format!("must be a positive finite number, got {x}")))
    }
}

fn interval(key: &'static str, iv: Interval) -> Result<()> {
    if iv.lo.is_finite() && iv.hi.is_finite() && iv.lo <= iv.hi {
        Ok(())
    } else {
        Err(invalid(key, format!("must satisfy lo <= hi, got [{}, {}]", iv.lo, iv.hi)))
    }
}

impl GameConfig {
    /// Check every invariant, reporting the first offending field.
    pub fn validate(&self) -> Result<()> {
        if self.n_pursuers == 0 {
            return Err(invalid("n_pursuers", "must be at least 1"));
        }
        if self.pursuer_speeds.len() != self.n_pursuers {
            return Err(invalid(
                "pursuer_speeds",
                format!("expected {} entries, got {}", self.n_pursuers, self.pursuer_speeds.len()),
            ));
        }
        for &v in &self.pursuer_speeds {
            positive("pursuer_speeds", v)?;
        }
        positive("evader_speed", self.evader_speed)?;
        positive("t_f", self.t_f)?;
        positive("dt", self.dt)?;
        if self.dt >= self.t_f {
            return Err(invalid("dt", format!("must be smaller than t_f ({})", self.t_f)));
        }
        positive("capture_radius", self.capture_radius)?;
        interval("pursuer_init_range", self.pursuer_init_range)?;
        interval("evader_init_range", self.evader_init_range)?;
        positive("tau_numerator", self.tau_numerator)?;
        if !self.pursuer_speeds.iter().any(|&v| v > self.evader_speed) {
            return Err(invalid(
                "pursuer_speeds",
                format!("at least one pursuer must be faster than the evader ({})", self.evader_speed),
            ));
        }
        Ok(())
    }

    pub fn max_speed(&self) -> f64 {
        self.pursuer_speeds.iter().copied().fold(self.evader_speed, f64::max)
    }

    /// Number of turns until the horizon is reached.
    pub fn horizon_steps(&self) -> usize {
        // tolerate t_f / dt landing a hair above an integer
        let ratio = self.t_f / self.dt;
        let rounded = ratio.round();
        if (ratio - rounded).abs() <= 1e-9 * ratio.max(1.0) {
            rounded as usize
        } else {
            ratio.ceil() as usize
        }
    }
}
