use crate::state::{ActionProfile, WorldState};

/// How an episode ended.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Outcome {
    Captured { by: usize, at: f64 },
    Timeout,
}

impl Outcome {
    pub fn is_captured(&self) -> bool {
        matches!(self, Outcome::Captured { .. })
    }

    pub fn capture_time(&self) -> Option<f64> {
        match *self {
            Outcome::Captured { at, .. } => Some(at),
            Outcome::Timeout => None,
        }
    }
}

/// One turn: the world observed at the start of the turn, the assignment
/// chosen from it, and the utilities of that assignment.
#[derive(Debug, Clone, PartialEq)]
pub struct StepRecord {
    pub t: f64,
    pub world: WorldState,
    pub profile: ActionProfile,
    /// Wonderful-life utility of every pursuer under `profile`.
    pub wlu: Vec<f64>,
    /// Team capture utility of `profile`.
    pub potential: f64,
}

/// Full log of an episode.
#[derive(Debug, Clone, PartialEq)]
pub struct EpisodeTrace {
    pub records: Vec<StepRecord>,
    pub outcome: Outcome,
    /// World after the last turn; the capture configuration when captured.
    pub final_world: WorldState,
    pub pursuer_speeds: Vec<f64>,
    pub evader_speed: f64,
}

impl EpisodeTrace {
    pub fn n_pursuers(&self) -> usize {
        self.final_world.n_pursuers()
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    /// Pursuers strictly faster than the evader.
    pub fn super_pursuers(&self) -> impl Iterator<Item = usize> + '_ {
        self.pursuer_speeds
            .iter()
            .enumerate()
            .filter(|(_, &v)| v > self.evader_speed)
            .map(|(i, _)| i)
    }

    /// Positions of pursuer `i` at every record followed by the final world.
    pub fn pursuer_path(&self, i: usize) -> Vec<crate::Vec2> {
        self.records
            .iter()
            .map(|r| r.world.pursuer_pos[i])
            .chain(std::iter::once(self.final_world.pursuer_pos[i]))
            .collect()
    }

    pub fn evader_path(&self) -> Vec<crate::Vec2> {
        self.records
            .iter()
            .map(|r| r.world.evader_pos)
            .chain(std::iter::once(self.final_world.evader_pos))
            .collect()
    }

    /// Mean number of simultaneously active pursuers over the second half of
    /// the records (the middle record is included for odd lengths).
    pub fn mean_active_final_half(&self) -> f64 {
        let n = self.records.len();
        if n == 0 {
            return 0.0;
        }
        let tail = &self.records[n / 2..];
        tail.iter().map(|r| r.profile.active_count() as f64).sum::<f64>() / tail.len() as f64
    }
}
