use std::fmt;

use crate::config::GameConfig;
use crate::rng::SimRng;
use crate::vec2::Vec2;

/// A pursuer's assignment: chase the evader or stay put.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Action {
    Chase,
    Idle,
}

impl Action {
    pub const ALL: [Action; 2] = [Action::Chase, Action::Idle];

    pub fn as_str(self) -> &'static str {
        match self {
            Action::Chase => "CHASE",
            Action::Idle => "IDLE",
        }
    }
}

impl fmt::Display for Action {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Joint assignment of all pursuers.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ActionProfile {
    actions: Vec<Action>,
}

impl ActionProfile {
    pub fn new(actions: Vec<Action>) -> Self {
        Self { actions }
    }

    pub fn all_idle(n: usize) -> Self {
        Self::new(vec![Action::Idle; n])
    }

    /// Profile whose only active pursuer is `i`.
    pub fn only(n: usize, i: usize) -> Self {
        let mut p = Self::all_idle(n);
        p.actions[i] = Action::Chase;
        p
    }

    /// Profile decoded from the low `n` bits of `mask` (bit `i` set = pursuer `i` chases).
    pub fn from_mask(n: usize, mask: u64) -> Self {
        Self::new(
            (0..n)
                .map(|i| if mask >> i & 1 == 1 { Action::Chase } else { Action::Idle })
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.actions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.actions.is_empty()
    }

    pub fn actions(&self) -> &[Action] {
        &self.actions
    }

    pub fn get(&self, i: usize) -> Action {
        self.actions[i]
    }

    pub fn set(&mut self, i: usize, action: Action) {
        self.actions[i] = action;
    }

    /// Copy of `self` with pursuer `i` switched to `action`.
    pub fn with(&self, i: usize, action: Action) -> Self {
        let mut p = self.clone();
        p.actions[i] = action;
        p
    }

    pub fn is_active(&self, i: usize) -> bool {
        self.actions[i] == Action::Chase
    }

    /// Indices of the pursuers that chase.
    pub fn active_set(&self) -> impl Iterator<Item = usize> + '_ {
        self.actions
            .iter()
            .enumerate()
            .filter(|(_, &a)| a == Action::Chase)
            .map(|(i, _)| i)
    }

    pub fn active_count(&self) -> usize {
        self.actions.iter().filter(|&&a| a == Action::Chase).count()
    }

    /// Number of pursuers whose action differs between the two profiles.
    pub fn hamming(&self, other: &ActionProfile) -> usize {
        self.actions.iter().zip(&other.actions).filter(|(a, b)| a != b).count()
    }
}

/// Positions of every player at time `t`.
#[derive(Debug, Clone, PartialEq)]
pub struct WorldState {
    pub t: f64,
    pub pursuer_pos: Vec<Vec2>,
    pub evader_pos: Vec2,
}

impl WorldState {
    pub fn new(t: f64, pursuer_pos: Vec<Vec2>, evader_pos: Vec2) -> Self {
        Self { t, pursuer_pos, evader_pos }
    }

    pub fn n_pursuers(&self) -> usize {
        self.pursuer_pos.len()
    }

    /// Draw the initial positions for an episode.
    ///
    /// Coordinates are uniform within the configured intervals. The evader is
    /// redrawn while it starts inside any pursuer's capture ball.
    pub fn sample_initial(config: &GameConfig, rng: &mut SimRng) -> Self {
        let pr = config.pursuer_init_range;
        let pursuer_pos: Vec<Vec2> = (0..config.n_pursuers)
            .map(|_| {
                let x = rng.uniform_real(pr.lo, pr.hi);
                let y = rng.uniform_real(pr.lo, pr.hi);
                Vec2::new(x, y)
            })
            .collect();
        let er = config.evader_init_range;
        let evader_pos = loop {
            let x = rng.uniform_real(er.lo, er.hi);
            let y = rng.uniform_real(er.lo, er.hi);
            let e = Vec2::new(x, y);
            if pursuer_pos.iter().all(|p| p.distance(e) > config.capture_radius) {
                break e;
            }
        };
        Self::new(0.0, pursuer_pos, evader_pos)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::make_rng;
    use proptest::prelude::*;

    #[test]
    fn mask_decoding() {
        let p = ActionProfile::from_mask(3, 0b101);
        assert_eq!(p.actions(), &[Action::Chase, Action::Idle, Action::Chase]);
        assert_eq!(p.active_set().collect::<Vec<_>>(), vec![0, 2]);
        assert_eq!(p.active_count(), 2);
        assert_eq!(p.hamming(&ActionProfile::all_idle(3)), 2);
        assert_eq!(ActionProfile::only(3, 1).active_set().collect::<Vec<_>>(), vec![1]);
    }

    #[test]
    fn evader_is_resampled_away_from_pursuers() {
        // Pursuer range collapsed onto the evader range forces collisions to be rejected.
        let mut config = GameConfig::default();
        config.pursuer_init_range = crate::config::Interval::new(9.0, 9.2);
        config.evader_init_range = crate::config::Interval::new(9.0, 9.4);
        config.capture_radius = 0.15;
        for seed in 0..200 {
            let w = WorldState::sample_initial(&config, &mut make_rng(seed));
            for p in &w.pursuer_pos {
                assert!(p.distance(w.evader_pos) > config.capture_radius);
            }
        }
    }

    proptest! {
        #[test]
        fn initial_positions_respect_ranges(seed in any::<u64>()) {
            let config = GameConfig::default();
            let w = WorldState::sample_initial(&config, &mut make_rng(seed));
            prop_assert_eq!(w.t, 0.0);
            prop_assert_eq!(w.pursuer_pos.len(), config.n_pursuers);
            for p in &w.pursuer_pos {
                prop_assert!(config.pursuer_init_range.contains(p.x));
                prop_assert!(config.pursuer_init_range.contains(p.y));
            }
            prop_assert!(config.evader_init_range.contains(w.evader_pos.x));
            prop_assert!(config.evader_init_range.contains(w.evader_pos.y));
        }
    }
}
