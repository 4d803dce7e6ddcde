//! Pursuit-evasion between several heterogeneous pursuers and one evader,
//! where the active pursuer is chosen either by a centralized relay rule or
//! by the pursuers themselves playing a potential game through spatial
//! adaptive play.
//!
//! Modules, bottom-up:
//! - [`vec2`], [`config`], [`rng`], [`state`], [`trace`]: shared value types;
//! - [`strategies`]: pure pursuit and pure evasion;
//! - [`capture`]: time-of-capture estimate;
//! - [`game`]: capture utility, wonderful-life utility, potential, Nash oracle;
//! - [`learning`]: softmax and the spatial-adaptive-play update;
//! - [`engine`]: the turn loop and both assignment rules.

pub mod capture;
pub mod config;
pub mod engine;
pub mod error;
pub mod game;
pub mod learning;
pub mod rng;
pub mod state;
pub mod strategies;
pub mod trace;
pub mod vec2;

pub use capture::{capture_time, CaptureTime};
pub use config::{GameConfig, Interval, Mode};
pub use engine::{
    active_time_totals, centralized_assignment, check_capture, dynamic_assignment_step,
    run_episode, world_step, EngineState,
};
pub use error::{Error, Result};
pub use game::GameSnapshot;
pub use rng::{make_rng, SimRng};
pub use state::{Action, ActionProfile, WorldState};
pub use trace::{EpisodeTrace, Outcome, StepRecord};
pub use vec2::{norm, Vec2};
