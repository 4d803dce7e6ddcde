//! Spatial adaptive play: a randomly selected pursuer resamples its action
//! from a Boltzmann distribution over the utilities it would receive for each
//! of its actions, holding everyone else fixed.

use crate::error::{Error, Result};
use crate::game::{wlu, GameSnapshot};
use crate::rng::SimRng;
use crate::state::{Action, ActionProfile};

/// Temperature that decays with the square of the step index.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TemperatureSchedule {
    pub numerator: f64,
}

impl Default for TemperatureSchedule {
    fn default() -> Self {
        Self { numerator: 10.0 }
    }
}

impl TemperatureSchedule {
    pub fn new(numerator: f64) -> Self {
        Self { numerator }
    }

    /// Temperature at step `eta >= 1`.
    pub fn tau(&self, eta: u64) -> f64 {
        assert!(eta >= 1, "temperature is undefined at step 0");
        let eta = eta as f64;
        self.numerator / (eta * eta)
    }
}

/// Boltzmann distribution over `scores` at temperature `tau`.
///
/// `-inf` scores get probability exactly 0. Uses the max-subtraction trick,
/// so large scores or tiny temperatures do not overflow.
pub fn softmax(scores: &[f64], tau: f64) -> Result<Vec<f64>> {
    if !(tau > 0.0) {
        return Err(Error::InvalidArgument(format!("temperature must be positive, got {tau}")));
    }
    let max = scores
        .iter()
        .copied()
        .filter(|s| s.is_finite())
        .fold(f64::NEG_INFINITY, f64::max);
    if max == f64::NEG_INFINITY {
        return Err(Error::NoFeasibleAction);
    }
    let weights: Vec<f64> = scores
        .iter()
        .map(|&s| if s.is_finite() { ((s - max) / tau).exp() } else { 0.0 })
        .collect();
    let total: f64 = weights.iter().sum();
    Ok(weights.into_iter().map(|w| w / total).collect())
}

/// Hypothetical utility of pursuer `i` for each action in [`Action::ALL`].
pub fn sap_scores(i: usize, profile: &ActionProfile, snapshot: &GameSnapshot) -> [f64; 2] {
    Action::ALL.map(|a| wlu(i, &profile.with(i, a), snapshot))
}

/// One spatial-adaptive-play update of pursuer `i`. Consumes one draw.
pub fn sap_update(
    i: usize,
    profile: &ActionProfile,
    snapshot: &GameSnapshot,
    tau: f64,
    rng: &mut SimRng,
) -> Result<Action> {
    let probs = softmax(&sap_scores(i, profile, snapshot), tau)?;
    Ok(Action::ALL[rng.categorical(&probs)])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::capture::CaptureTime;
    use crate::rng::make_rng;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    const NEG_INF: f64 = f64::NEG_INFINITY;

    fn snap(phis: &[f64]) -> GameSnapshot {
        GameSnapshot::from_capture_times(
            0.0,
            30.0,
            phis.iter().map(|&p| CaptureTime::new(p).unwrap()).collect(),
        )
    }

    #[test]
    fn softmax_examples() {
        assert_eq!(softmax(&[0.0, 0.0], 1.0).unwrap(), vec![0.5, 0.5]);

        let e = std::f64::consts::E;
        let p = softmax(&[1.0, 0.0], 1.0).unwrap();
        assert_abs_diff_eq!(p[0], e / (e + 1.0), epsilon = 1e-15);
        assert_abs_diff_eq!(p[1], 1.0 / (e + 1.0), epsilon = 1e-15);

        assert_eq!(softmax(&[5.0, NEG_INF], 0.3).unwrap(), vec![1.0, 0.0]);

        let p = softmax(&[2.5, 0.0], 0.01).unwrap();
        assert!(p[1] < 1e-100 && p[1] > 0.0);
        assert_eq!(p[0], 1.0);
    }

    #[test]
    fn softmax_errors() {
        assert_eq!(softmax(&[NEG_INF, NEG_INF], 1.0), Err(Error::NoFeasibleAction));
        assert!(softmax(&[0.0], 0.0).is_err());
    }

    #[test]
    fn schedule() {
        let s = TemperatureSchedule::default();
        assert_eq!(s.tau(1), 10.0);
        assert_eq!(s.tau(10), 0.1);
    }

    #[test]
    #[should_panic]
    fn schedule_rejects_step_zero() {
        TemperatureSchedule::default().tau(0);
    }

    #[test]
    fn sap_scores_from_wlu() {
        let s = snap(&[5.0, 10.0]);
        let both = ActionProfile::new(vec![Action::Chase, Action::Chase]);
        let [chase, idle] = sap_scores(1, &both, &s);
        assert_abs_diff_eq!(chase, -2.5, epsilon = 1e-12);
        assert_eq!(idle, 0.0);
        let p = softmax(&[chase, idle], 0.01).unwrap();
        assert!(p[0] < 1e-100);
        let mut rng = make_rng(1);
        for _ in 0..1000 {
            assert_eq!(sap_update(1, &both, &s, 0.01, &mut rng).unwrap(), Action::Idle);
        }
    }

    #[test]
    fn infeasible_chase_is_never_chosen() {
        let s = snap(&[f64::INFINITY]);
        let p = ActionProfile::all_idle(1);
        assert_eq!(sap_scores(0, &p, &s), [NEG_INF, 0.0]);
        let mut rng = make_rng(5);
        for _ in 0..1000 {
            assert_eq!(sap_update(0, &p, &s, 1e6, &mut rng).unwrap(), Action::Idle);
        }
    }

    #[test]
    fn hot_temperature_is_uniform() {
        let s = snap(&[5.0, 10.0]);
        let both = ActionProfile::new(vec![Action::Chase, Action::Chase]);
        let p = softmax(&sap_scores(1, &both, &s), 1e9).unwrap();
        assert!((p[0] - 0.5).abs() < 1e-9 && (p[1] - 0.5).abs() < 1e-9);
    }

    fn scores() -> impl Strategy<Value = Vec<f64>> {
        prop::collection::vec(prop_oneof![8 => -50.0f64..50.0, 1 => Just(NEG_INF)], 1..6)
            .prop_filter("need a finite score", |v| v.iter().any(|s| s.is_finite()))
    }

    proptest! {
        #[test]
        fn sums_to_one(s in scores(), tau in 1e-6f64..1e6) {
            let p = softmax(&s, tau).unwrap();
            prop_assert!((p.iter().sum::<f64>() - 1.0).abs() <= 1e-12);
            for (pk, sk) in p.iter().zip(&s) {
                if !sk.is_finite() {
                    prop_assert_eq!(*pk, 0.0);
                }
            }
        }

        #[test]
        fn shift_invariance(s in scores(), tau in 1e-2f64..1e3, c in -100.0f64..100.0) {
            let shifted: Vec<f64> = s.iter().map(|x| x + c).collect();
            let p = softmax(&s, tau).unwrap();
            let q = softmax(&shifted, tau).unwrap();
            for (a, b) in p.iter().zip(&q) {
                prop_assert!((a - b).abs() <= 1e-12);
            }
        }

        #[test]
        fn temperature_limits(s in scores()) {
            let finite: Vec<usize> = (0..s.len()).filter(|&k| s[k].is_finite()).collect();
            let max = finite.iter().map(|&k| s[k]).fold(NEG_INF, f64::max);
            // keep the cold limit away from near-ties the temperature cannot resolve
            prop_assume!(finite.iter().all(|&k| s[k] == max || max - s[k] > 1e-3));
            let argmax: Vec<usize> = finite.iter().copied().filter(|&k| s[k] == max).collect();

            let cold = softmax(&s, 1e-6).unwrap();
            for k in 0..s.len() {
                let want = if argmax.contains(&k) { 1.0 / argmax.len() as f64 } else { 0.0 };
                prop_assert!((cold[k] - want).abs() <= 1e-6);
            }
            let hot = softmax(&s, 1e9).unwrap();
            for k in 0..s.len() {
                let want = if s[k].is_finite() { 1.0 / finite.len() as f64 } else { 0.0 };
                prop_assert!((hot[k] - want).abs() <= 1e-6);
            }
        }
    }
}
