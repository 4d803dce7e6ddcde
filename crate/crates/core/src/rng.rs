//! Seeded random stream shared by every stochastic choice in an episode.
//!
//! One [`SimRng`] is created per episode from the configured seed. Draws are
//! consumed in a fixed order, which is part of the reproducibility contract:
//!
//! 1. initial positions: for each pursuer in index order its `x` then `y`,
//!    then the evader's `x` then `y` (the evader pair is redrawn while it lies
//!    within the capture radius of any pursuer);
//! 2. decentralized mode, step 0: one fair coin per pursuer in index order;
//! 3. decentralized mode, each later step: the index of the updating pursuer,
//!    then one categorical draw for its new action.
//!
//! Centralized mode consumes nothing after initialisation.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Deterministic, platform-independent random stream.
#[derive(Debug, Clone)]
pub struct SimRng(ChaCha8Rng);

impl SimRng {
    pub fn new(seed: u64) -> Self {
        SimRng(ChaCha8Rng::seed_from_u64(seed))
    }

    /// Uniform real in the closed interval `[lo, hi]` (half-open in practice;
    /// `lo == hi` returns `lo`).
    pub fn uniform_real(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.0.gen::<f64>()
    }

    /// Uniform integer in `0..n`. Panics if `n == 0`.
    pub fn uniform_index(&mut self, n: usize) -> usize {
        self.0.gen_range(0..n)
    }

    /// Sample an index from an explicit probability list.
    ///
    /// Entries with probability zero are never returned. The weights are not
    /// required to sum to exactly one; the draw is scaled by their total.
    pub fn categorical(&mut self, probs: &[f64]) -> usize {
        let total: f64 = probs.iter().sum();
        let target = self.0.gen::<f64>() * total;
        let mut acc = 0.0;
        let mut last_positive = 0;
        for (k, &p) in probs.iter().enumerate() {
            if p <= 0.0 {
                continue;
            }
            acc += p;
            last_positive = k;
            if target < acc {
                return k;
            }
        }
        // rounding left `target` just past the cumulative sum
        last_positive
    }
}

/// Fresh random stream for `seed`.
pub fn make_rng(seed: u64) -> SimRng {
    SimRng::new(seed)
}
