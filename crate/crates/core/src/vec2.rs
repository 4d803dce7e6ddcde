use std::ops::{Add, AddAssign, Mul, Neg, Sub};

/// A point or direction in the plane.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Vec2 {
    pub x: f64,
    pub y: f64,
}

impl Vec2 {
    pub const ZERO: Vec2 = Vec2 { x: 0.0, y: 0.0 };

    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    /// Euclidean length.
    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn norm_squared(self) -> f64 {
        self.x * self.x + self.y * self.y
    }

    pub fn dot(self, other: Vec2) -> f64 {
        self.x * other.x + self.y * other.y
    }

    pub fn distance(self, other: Vec2) -> f64 {
        (other - self).norm()
    }

    /// Unit vector along `self`, or `None` for the zero vector.
    pub fn normalized(self) -> Option<Vec2> {
        let n = self.norm();
        (n > 0.0).then(|| Vec2::new(self.x / n, self.y / n))
    }

    /// Unit vector along `self`; the zero vector maps to itself.
    pub fn normalize_or_zero(self) -> Vec2 {
        self.normalized().unwrap_or(Vec2::ZERO)
    }
}

/// Free-function form of [`Vec2::norm`].
pub fn norm(v: Vec2) -> f64 {
    v.norm()
}

impl Add for Vec2 {
    type Output = Vec2;
    fn add(self, rhs: Vec2) -> Vec2 {
        Vec2::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl AddAssign for Vec2 {
    fn add_assign(&mut self, rhs: Vec2) {
        self.x += rhs.x;
        self.y += rhs.y;
    }
}

impl Sub for Vec2 {
    type Output = Vec2;
    fn sub(self, rhs: Vec2) -> Vec2 {
        Vec2::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Neg for Vec2 {
    type Output = Vec2;
    fn neg(self) -> Vec2 {
        Vec2::new(-self.x, -self.y)
    }
}

impl Mul<f64> for Vec2 {
    type Output = Vec2;
    fn mul(self, rhs: f64) -> Vec2 {
        Vec2::new(self.x * rhs, self.y * rhs)
    }
}

impl From<(f64, f64)> for Vec2 {
    fn from((x, y): (f64, f64)) -> Self {
        Vec2::new(x, y)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    #[test]
    fn norm_examples() {
        assert_eq!(norm(Vec2::new(3.0, 4.0)), 5.0);
        assert_eq!(norm(Vec2::ZERO), 0.0);
        assert_abs_diff_eq!(norm(Vec2::new(1.0, 1.0)), std::f64::consts::SQRT_2, epsilon = 1e-15);
    }

    #[test]
    fn zero_has_no_direction() {
        assert_eq!(Vec2::ZERO.normalized(), None);
        assert_eq!(Vec2::ZERO.normalize_or_zero(), Vec2::ZERO);
    }

    proptest! {
        #[test]
        fn norm_is_nonnegative_and_zero_only_at_origin(x in -1e6f64..1e6, y in -1e6f64..1e6) {
            let v = Vec2::new(x, y);
            prop_assert!(v.norm() >= 0.0);
            prop_assert_eq!(v.norm() == 0.0, x == 0.0 && y == 0.0);
        }

        #[test]
        fn normalized_has_unit_length(x in -1e6f64..1e6, y in -1e6f64..1e6) {
            let v = Vec2::new(x, y);
            prop_assume!(v.norm() > 1e-300);
            prop_assert!((v.normalized().unwrap().norm() - 1.0).abs() < 1e-12);
        }
    }
}
