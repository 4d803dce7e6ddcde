//! Turn-based episode loop.
//!
//! Each turn: observe the world and evaluate every pursuer's capture time,
//! choose the assignment (spatial adaptive play or the centralized relay
//! rule), let the evader move, then let the chasing pursuers move toward the
//! evader's new position, and finally test for capture.

use crate::capture::CaptureTime;
use crate::config::{GameConfig, Mode};
use crate::error::Result;
use crate::game::{potential, wlu, GameSnapshot};
use crate::learning::{sap_update, TemperatureSchedule};
use crate::rng::{make_rng, SimRng};
use crate::state::{Action, ActionProfile, WorldState};
use crate::strategies::{evasion_direction, pursuit_direction};
use crate::trace::{EpisodeTrace, Outcome, StepRecord};

/// Mutable state of a running episode.
#[derive(Debug, Clone)]
pub struct EngineState {
    pub world: WorldState,
    pub profile: ActionProfile,
    pub rng: SimRng,
    /// Completed turns; `world.t == step_index * dt`.
    pub step_index: u64,
}

impl EngineState {
    /// Seed the stream and draw the initial positions.
    pub fn new(config: &GameConfig) -> Self {
        let mut rng = make_rng(config.seed);
        let world = WorldState::sample_initial(config, &mut rng);
        Self::from_world(world, config.n_pursuers, rng)
    }

    pub fn from_world(world: WorldState, n_pursuers: usize, rng: SimRng) -> Self {
        Self { world, profile: ActionProfile::all_idle(n_pursuers), rng, step_index: 0 }
    }
}

/// Advance the world by one turn under the current profile.
///
/// The evader flees first, using the pursuer positions at the start of the
/// turn; chasing pursuers then steer at the evader's updated position.
pub fn world_step(mut state: EngineState, config: &GameConfig) -> Result<EngineState> {
    let dt = config.dt;
    let world = &mut state.world;

    let flee = evasion_direction(&world.pursuer_pos, world.evader_pos)?;
    world.evader_pos += flee * (config.evader_speed * dt);

    for (i, pos) in world.pursuer_pos.iter_mut().enumerate() {
        if state.profile.is_active(i) {
            let dir = pursuit_direction(*pos, world.evader_pos);
            *pos += dir * (config.pursuer_speeds[i] * dt);
        }
    }

    state.step_index += 1;
    world.t = state.step_index as f64 * dt;
    Ok(state)
}

/// Lowest-index pursuer inside the closed capture ball, with the current time.
pub fn check_capture(world: &WorldState, epsilon: f64) -> Option<(usize, f64)> {
    world
        .pursuer_pos
        .iter()
        .position(|p| p.distance(world.evader_pos) <= epsilon)
        .map(|i| (i, world.t))
}

/// Decentralized assignment for the current turn.
///
/// At step 0 every pursuer flips a fair coin. Afterwards a single pursuer,
/// chosen uniformly, revises its action by spatial adaptive play at
/// temperature `tau_numerator / step^2`; everyone else keeps their action.
pub fn dynamic_assignment_step(
    state: &mut EngineState,
    snapshot: &GameSnapshot,
    config: &GameConfig,
) -> Result<ActionProfile> {
    let n = state.profile.len();
    if state.step_index == 0 {
        let actions = (0..n).map(|_| Action::ALL[state.rng.uniform_index(2)]).collect();
        return Ok(ActionProfile::new(actions));
    }
    let i = state.rng.uniform_index(n);
    let tau = TemperatureSchedule::new(config.tau_numerator).tau(state.step_index);
    let action = sap_update(i, &state.profile, snapshot, tau, &mut state.rng)?;
    Ok(state.profile.with(i, action))
}

/// Centralized relay rule: only the pursuer with the smallest capture time
/// chases, provided it can capture within the remaining horizon.
pub fn centralized_assignment(snapshot: &GameSnapshot) -> ActionProfile {
    let n = snapshot.n_pursuers();
    let mut best: Option<(usize, CaptureTime)> = None;
    for (i, &phi) in snapshot.capture_times().iter().enumerate() {
        if best.is_none_or(|(_, b)| phi < b) {
            best = Some((i, phi));
        }
    }
    match best {
        Some((i, phi)) if phi.value() <= snapshot.remaining() => ActionProfile::only(n, i),
        _ => ActionProfile::all_idle(n),
    }
}

/// Simulate a full episode from `config.seed`.
pub fn run_episode(config: &GameConfig) -> Result<EpisodeTrace> {
    config.validate()?;
    let n = config.n_pursuers;
    let horizon = config.horizon_steps() as u64;
    let t_limit = config.t_f + 1e-9 * config.dt;

    let mut state = EngineState::new(config);
    let mut records = Vec::with_capacity(horizon.min(1 << 16) as usize);

    let outcome = loop {
        if state.step_index >= horizon {
            break Outcome::Timeout;
        }
        let snapshot = GameSnapshot::observe(&state.world, config)?;
        let profile = match config.mode {
            Mode::Centralized => centralized_assignment(&snapshot),
            Mode::Decentralized => dynamic_assignment_step(&mut state, &snapshot, config)?,
        };
        records.push(StepRecord {
            t: state.world.t,
            world: state.world.clone(),
            wlu: (0..n).map(|i| wlu(i, &profile, &snapshot)).collect(),
            potential: potential(&profile, &snapshot),
            profile: profile.clone(),
        });
        state.profile = profile;

        state = world_step(state, config)?;
        if let Some((by, at)) = check_capture(&state.world, config.capture_radius) {
            break if at <= t_limit { Outcome::Captured { by, at } } else { Outcome::Timeout };
        }
    };

    Ok(EpisodeTrace {
        records,
        outcome,
        final_world: state.world,
        pursuer_speeds: config.pursuer_speeds.clone(),
        evader_speed: config.evader_speed,
    })
}

/// Time each pursuer spent chasing: active turns times `dt`.
pub fn active_time_totals(trace: &EpisodeTrace, dt: f64) -> Vec<f64> {
    let mut counts = vec![0u64; trace.n_pursuers()];
    for r in &trace.records {
        for i in r.profile.active_set() {
            counts[i] += 1;
        }
    }
    counts.into_iter().map(|c| c as f64 * dt).collect()
}
