//! Time-of-capture estimate for one pursuer against a fleeing evader.
//!
//! The evader is assumed to run straight away from the pursuer being
//! evaluated, and the pursuer to run straight at the evader. With
//! `xi = evader - pursuer`, `d = |xi|` and `u_e = xi / d`, capture time `phi`
//! solves
//!
//! ```text
//! (v_e^2 - v_i^2) phi^2 + 2 (<xi, v_e u_e> - eps v_i) phi + d^2 - eps^2 = 0
//! ```
//!
//! and the estimate is its smallest strictly positive root. When the evader
//! actually flees some other (closer) pursuer, the value is an upper bound on
//! the true capture time.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::vec2::Vec2;

/// Capture time, `+inf` when capture is infeasible under the model.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CaptureTime(f64);

impl CaptureTime {
    pub const ZERO: CaptureTime = CaptureTime(0.0);
    pub const INFINITE: CaptureTime = CaptureTime(f64::INFINITY);

    /// Wrap a nonnegative value (or `+inf`). Returns `None` for negatives and NaN.
    pub fn new(value: f64) -> Option<Self> {
        (value >= 0.0).then_some(CaptureTime(value))
    }

    pub fn value(self) -> f64 {
        self.0
    }

    pub fn is_finite(self) -> bool {
        self.0.is_finite()
    }
}

impl Eq for CaptureTime {}

impl PartialOrd for CaptureTime {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CaptureTime {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.total_cmp(&other.0)
    }
}

impl fmt::Display for CaptureTime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Estimated time for a pursuer to capture the evader.
pub fn capture_time(
    pursuer_pos: Vec2,
    pursuer_speed: f64,
    evader_pos: Vec2,
    evader_speed: f64,
    epsilon: f64,
) -> Result<CaptureTime> {
    if !(epsilon > 0.0) {
        return Err(Error::InvalidArgument(format!("capture radius must be positive, got {epsilon}")));
    }
    if !(pursuer_speed > 0.0) || !(evader_speed > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "speeds must be positive, got pursuer {pursuer_speed}, evader {evader_speed}"
        )));
    }

    let xi = evader_pos - pursuer_pos;
    let d = xi.norm();
    if d <= epsilon {
        return Ok(CaptureTime::ZERO);
    }
    let u_e = xi * (1.0 / d);

    let a = evader_speed * evader_speed - pursuer_speed * pursuer_speed;
    let b = 2.0 * (xi.dot(u_e * evader_speed) - epsilon * pursuer_speed);
    let c = d * d - epsilon * epsilon;

    Ok(smallest_positive_root(a, b, c).map_or(CaptureTime::INFINITE, CaptureTime))
}

/// Smallest strictly positive real root of `a x^2 + b x + c`, if any.
fn smallest_positive_root(a: f64, b: f64, c: f64) -> Option<f64> {
    if a == 0.0 {
        if b == 0.0 {
            return None;
        }
        let x = -c / b;
        return (x > 0.0).then_some(x);
    }
    let disc = b * b - 4.0 * a * c;
    if disc < 0.0 {
        return None;
    }
    // larger-magnitude root first, the other from the product of roots
    let sign = if b >= 0.0 { 1.0 } else { -1.0 };
    let q = -0.5 * (b + sign * disc.sqrt());
    let r1 = q / a;
    let r2 = if q != 0.0 { c / q } else { r1 };
    [r1, r2].into_iter().filter(|&x| x > 0.0).min_by(f64::total_cmp)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    fn collinear(d: f64, vi: f64, ve: f64, eps: f64) -> CaptureTime {
        capture_time(Vec2::ZERO, vi, Vec2::new(d, 0.0), ve, eps).unwrap()
    }

    #[test]
    fn faster_pursuer_closes_at_relative_speed() {
        // -3 phi^2 + 2 phi + 8 = 0 has roots 2 and -4/3
        let phi = collinear(3.0, 2.0, 1.0, 1.0).value();
        assert_abs_diff_eq!(phi, 2.0, epsilon = 1e-12);
        assert_abs_diff_eq!(-3.0 * phi * phi + 2.0 * phi + 8.0, 0.0, epsilon = 1e-12);
    }

    #[test]
    fn inside_capture_ball_is_zero() {
        assert_eq!(collinear(0.05, 1.0, 0.9, 0.1), CaptureTime::ZERO);
        assert_eq!(collinear(0.1, 1.0, 0.9, 0.1), CaptureTime::ZERO);
    }

    #[test]
    fn equal_speeds_never_close() {
        assert_eq!(collinear(3.0, 1.0, 1.0, 1.0), CaptureTime::INFINITE);
    }

    #[test]
    fn faster_evader_escapes() {
        assert_eq!(collinear(3.0, 1.0, 2.0, 1.0), CaptureTime::INFINITE);
    }

    #[test]
    fn rejects_bad_arguments() {
        assert!(capture_time(Vec2::ZERO, 1.0, Vec2::new(1.0, 0.0), 1.0, 0.0).is_err());
        assert!(capture_time(Vec2::ZERO, 0.0, Vec2::new(1.0, 0.0), 1.0, 0.1).is_err());
        assert!(capture_time(Vec2::ZERO, 1.0, Vec2::new(1.0, 0.0), -1.0, 0.1).is_err());
    }

    #[test]
    fn root_helper_cases() {
        assert_eq!(smallest_positive_root(0.0, 0.0, 1.0), None);
        assert_eq!(smallest_positive_root(0.0, 2.0, -4.0), Some(2.0));
        assert_eq!(smallest_positive_root(1.0, 0.0, 1.0), None);
        // (x-1)(x-3)
        assert_abs_diff_eq!(smallest_positive_root(1.0, -4.0, 3.0).unwrap(), 1.0, epsilon = 1e-15);
        // (x+1)(x-3) with negative leading coefficient
        assert_abs_diff_eq!(smallest_positive_root(-1.0, 2.0, 3.0).unwrap(), 3.0, epsilon = 1e-15);
        // badly scaled: roots 1e-8 and 1e8
        let r = smallest_positive_root(1.0, -(1e8 + 1e-8), 1.0).unwrap();
        assert!((r - 1e-8).abs() < 1e-20);
    }

    fn position() -> impl Strategy<Value = Vec2> {
        (-20.0f64..20.0, -20.0f64..20.0).prop_map(|(x, y)| Vec2::new(x, y))
    }

    proptest! {
        #[test]
        fn finite_roots_satisfy_the_quadratic(
            p in position(), e in position(),
            vi in 0.1f64..3.0, ve in 0.1f64..3.0, eps in 0.01f64..1.0,
        ) {
            let phi = capture_time(p, vi, e, ve, eps).unwrap();
            let xi = e - p;
            let d = xi.norm();
            prop_assume!(phi.is_finite() && d > eps);
            let phi = phi.value();
            let u_e = xi * (1.0 / d);
            let residual = (ve * ve - vi * vi) * phi * phi
                + 2.0 * (xi.dot(u_e * ve) - eps * vi) * phi
                + d * d - eps * eps;
            prop_assert!(residual.abs() <= 1e-9 * d.max(1.0).powi(2), "residual {}", residual);
        }

        #[test]
        fn increasing_in_distance(d1 in 0.2f64..30.0, gap in 1e-3f64..10.0, vi in 1.0f64..3.0, frac in 0.0f64..0.99) {
            let ve = vi * frac;
            prop_assume!(ve > 0.0);
            let a = collinear(d1, vi, ve, 0.1).value();
            let b = collinear(d1 + gap, vi, ve, 0.1).value();
            prop_assert!(b > a);
        }

        #[test]
        fn scales_with_geometry(
            p in position(), e in position(), c in 0.1f64..10.0,
            vi in 0.5f64..3.0, ve in 0.1f64..3.0,
        ) {
            let base = capture_time(p, vi, e, ve, 0.1).unwrap();
            let scaled = capture_time(p * c, vi, e * c, ve, 0.1 * c).unwrap();
            prop_assert_eq!(base.is_finite(), scaled.is_finite());
            if base.is_finite() {
                let want = base.value() * c;
                prop_assert!((scaled.value() - want).abs() <= 1e-9 * want.max(1.0));
            }
        }
    }
}
