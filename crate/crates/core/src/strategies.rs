//! Low-level motion policies.
//!
//! Controls are unit vectors, or zero for "stay put".

use crate::error::{Error, Result};
use crate::vec2::Vec2;

/// Pure pursuit: head straight at the evader's current position.
///
/// Returns the zero vector when the two positions coincide.
pub fn pursuit_direction(pursuer_pos: Vec2, evader_pos: Vec2) -> Vec2 {
    (evader_pos - pursuer_pos).normalize_or_zero()
}

/// Index of the pursuer nearest to the evader; ties go to the lowest index.
pub fn closest_pursuer(pursuer_pos: &[Vec2], evader_pos: Vec2) -> Result<usize> {
    let mut best: Option<(usize, f64)> = None;
    for (i, p) in pursuer_pos.iter().enumerate() {
        let d = (evader_pos - *p).norm_squared();
        if best.is_none_or(|(_, bd)| d < bd) {
            best = Some((i, d));
        }
    }
    best.map(|(i, _)| i).ok_or(Error::NoPursuers)
}

/// Pure evasion: flee directly away from the closest pursuer, whether or not
/// that pursuer is currently chasing.
pub fn evasion_direction(pursuer_pos: &[Vec2], evader_pos: Vec2) -> Result<Vec2> {
    let k = closest_pursuer(pursuer_pos, evader_pos)?;
    (evader_pos - pursuer_pos[k]).normalized().ok_or(Error::DegenerateEvasion(k))
}
