//! Utilities of the pursuer assignment game.
//!
//! The team's capture utility is the nominal reward `t_f - t` minus the mean
//! capture time of the active pursuers. Each pursuer is paid its marginal
//! contribution to that utility (wonderful-life utility), which makes the
//! capture utility an exact potential for the game.
//!
//! Conventions:
//! - an empty active set has utility 0;
//! - an active pursuer with infinite capture time drives the utility to `-inf`.
//!
//! Differences of utilities are taken on [`TeamUtility`], which remembers how
//! many infeasible pursuers are active. Two infeasible profiles compare by
//! that count, so adding an infeasible chaser is always worth `-inf` and the
//! potential stays exact even when both sides are `-inf`.

use std::cmp::Ordering;

use crate::capture::{capture_time, CaptureTime};
use crate::config::GameConfig;
use crate::error::{Error, Result};
use crate::state::{Action, ActionProfile, WorldState};

/// Largest pursuer count accepted by [`enumerate_nash`].
pub const MAX_ENUMERATION_PURSUERS: usize = 20;

/// The static game faced by the pursuers at one instant.
#[derive(Debug, Clone, PartialEq)]
pub struct GameSnapshot {
    t: f64,
    t_f: f64,
    capture_times: Vec<CaptureTime>,
    world: Option<WorldState>,
}

impl GameSnapshot {
    /// Snapshot of `world` with every pursuer's capture time evaluated.
    pub fn observe(world: &WorldState, config: &GameConfig) -> Result<Self> {
        let capture_times = world
            .pursuer_pos
            .iter()
            .zip(&config.pursuer_speeds)
            .map(|(&p, &v)| {
                capture_time(p, v, world.evader_pos, config.evader_speed, config.capture_radius)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { t: world.t, t_f: config.t_f, capture_times, world: Some(world.clone()) })
    }

    /// Snapshot built directly from capture times, with no geometry attached.
    pub fn from_capture_times(t: f64, t_f: f64, capture_times: Vec<CaptureTime>) -> Self {
        Self { t, t_f, capture_times, world: None }
    }

    pub fn t(&self) -> f64 {
        self.t
    }

    pub fn t_f(&self) -> f64 {
        self.t_f
    }

    pub fn n_pursuers(&self) -> usize {
        self.capture_times.len()
    }

    pub fn capture_times(&self) -> &[CaptureTime] {
        &self.capture_times
    }

    pub fn world(&self) -> Option<&WorldState> {
        self.world.as_ref()
    }

    /// Time left before the horizon.
    pub fn remaining(&self) -> f64 {
        nominal_reward(self.t, self.t_f)
    }
}

/// Reward for capturing at time `t`; negative past the horizon.
pub fn nominal_reward(t: f64, t_f: f64) -> f64 {
    t_f - t
}

/// Capture utility that keeps track of infeasible chasers.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TeamUtility {
    Feasible(f64),
    /// At least one active pursuer can never capture; holds how many.
    Infeasible(usize),
}

impl TeamUtility {
    /// Plain extended-real value: `-inf` for infeasible profiles.
    pub fn value(self) -> f64 {
        match self {
            TeamUtility::Feasible(u) => u,
            TeamUtility::Infeasible(_) => f64::NEG_INFINITY,
        }
    }

    /// `self - other`, infinite whenever the infeasible counts differ.
    pub fn diff(self, other: TeamUtility) -> f64 {
        use TeamUtility::*;
        match (self, other) {
            (Feasible(a), Feasible(b)) => a - b,
            (Feasible(_), Infeasible(_)) => f64::INFINITY,
            (Infeasible(_), Feasible(_)) => f64::NEG_INFINITY,
            (Infeasible(a), Infeasible(b)) => match a.cmp(&b) {
                Ordering::Equal => 0.0,
                Ordering::Less => f64::INFINITY,
                Ordering::Greater => f64::NEG_INFINITY,
            },
        }
    }
}

impl PartialOrd for TeamUtility {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.diff(*other).partial_cmp(&0.0)
    }
}

/// Team capture utility with infeasible chasers counted.
pub fn team_utility(profile: &ActionProfile, snapshot: &GameSnapshot) -> TeamUtility {
    let mut active = 0usize;
    let mut infeasible = 0usize;
    let mut total = 0.0;
    for i in profile.active_set() {
        let phi = snapshot.capture_times[i];
        active += 1;
        if phi.is_finite() {
            total += phi.value();
        } else {
            infeasible += 1;
        }
    }
    if infeasible > 0 {
        TeamUtility::Infeasible(infeasible)
    } else if active == 0 {
        TeamUtility::Feasible(0.0)
    } else {
        TeamUtility::Feasible(nominal_reward(snapshot.t, snapshot.t_f) - total / active as f64)
    }
}

/// Sum of the capture times of the active pursuers.
pub fn total_capture_time(profile: &ActionProfile, snapshot: &GameSnapshot) -> f64 {
    profile.active_set().map(|i| snapshot.capture_times[i].value()).sum()
}

/// Team capture utility: nominal reward minus mean active capture time.
pub fn capture_utility(profile: &ActionProfile, snapshot: &GameSnapshot) -> f64 {
    team_utility(profile, snapshot).value()
}

/// Wonderful-life utility of pursuer `i`: the capture utility minus the
/// capture utility with `i` idle. Exactly 0 when `i` is idle.
pub fn wlu(i: usize, profile: &ActionProfile, snapshot: &GameSnapshot) -> f64 {
    if !profile.is_active(i) {
        return 0.0;
    }
    let with = team_utility(profile, snapshot);
    let without = team_utility(&profile.with(i, Action::Idle), snapshot);
    with.diff(without)
}

/// Potential of the game, equal to the team capture utility.
pub fn potential(profile: &ActionProfile, snapshot: &GameSnapshot) -> f64 {
    capture_utility(profile, snapshot)
}

/// `potential(b) - potential(a)`, well defined when both are `-inf`.
pub fn potential_diff(b: &ActionProfile, a: &ActionProfile, snapshot: &GameSnapshot) -> f64 {
    team_utility(b, snapshot).diff(team_utility(a, snapshot))
}

fn check_enumerable(n: usize) -> Result<()> {
    if n > MAX_ENUMERATION_PURSUERS {
        Err(Error::TooManyPursuers(n))
    } else {
        Ok(())
    }
}

fn all_profiles(n: usize) -> impl Iterator<Item = ActionProfile> {
    (0..1u64 << n).map(move |mask| ActionProfile::from_mask(n, mask))
}

/// Whether no pursuer can strictly gain by switching its own action.
pub fn is_nash(profile: &ActionProfile, snapshot: &GameSnapshot) -> bool {
    (0..profile.len()).all(|i| {
        let current = wlu(i, profile, snapshot);
        Action::ALL.iter().all(|&alt| current >= wlu(i, &profile.with(i, alt), snapshot))
    })
}

/// Every pure Nash equilibrium, by exhaustive search over all `2^N` profiles.
pub fn enumerate_nash(snapshot: &GameSnapshot) -> Result<Vec<ActionProfile>> {
    let n = snapshot.n_pursuers();
    check_enumerable(n)?;
    Ok(all_profiles(n).filter(|p| is_nash(p, snapshot)).collect())
}

/// Every profile attaining the maximum potential.
pub fn potential_maximizers(snapshot: &GameSnapshot) -> Result<Vec<ActionProfile>> {
    let n = snapshot.n_pursuers();
    check_enumerable(n)?;
    let mut best = team_utility(&ActionProfile::all_idle(n), snapshot);
    let mut argmax = Vec::new();
    for p in all_profiles(n) {
        let phi = team_utility(&p, snapshot);
        if phi > best {
            best = phi;
            argmax.clear();
        }
        if phi == best {
            argmax.push(p);
        }
    }
    Ok(argmax)
}
