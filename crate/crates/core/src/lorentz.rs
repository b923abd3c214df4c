//! Minkowski 3-space `E³₁` with metric `-dx1² + dx2² + dx3²`.
//!
//! `x1` is the time-like coordinate. The Lorentzian vector product is the
//! determinant with first row `(i, -j, -k)`, stored here as its expansion
//! so the sign convention is fixed in one place.

use std::ops::{Add, AddAssign, Div, Index, Mul, Neg, Sub, SubAssign};

use serde::{Deserialize, Serialize};

use crate::error::{CurveError, Result};
use crate::tolerance::NULL_RELATIVE;

/// A vector of `E³₁`.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Vec3M {
    x1: f64,
    x2: f64,
    x3: f64,
}

/// Causal character of a vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CausalCharacter {
    SpaceLike,
    TimeLike,
    LightLike,
}

impl Vec3M {
    pub const ZERO: Vec3M = Vec3M { x1: 0.0, x2: 0.0, x3: 0.0 };
    pub const E1: Vec3M = Vec3M { x1: 1.0, x2: 0.0, x3: 0.0 };
    pub const E2: Vec3M = Vec3M { x1: 0.0, x2: 1.0, x3: 0.0 };
    pub const E3: Vec3M = Vec3M { x1: 0.0, x2: 0.0, x3: 1.0 };

    /// Builds a vector. Components must be finite.
    #[inline]
    pub fn new(x1: f64, x2: f64, x3: f64) -> Self {
        debug_assert!(
            x1.is_finite() && x2.is_finite() && x3.is_finite(),
            "non-finite Vec3M component"
        );
        Vec3M { x1, x2, x3 }
    }

    /// Checked constructor for untrusted input.
    pub fn try_new(x1: f64, x2: f64, x3: f64) -> Result<Self> {
        if x1.is_finite() && x2.is_finite() && x3.is_finite() {
            Ok(Vec3M { x1, x2, x3 })
        } else {
            Err(CurveError::NonFinite)
        }
    }

    #[inline]
    pub fn x1(&self) -> f64 {
        self.x1
    }

    #[inline]
    pub fn x2(&self) -> f64 {
        self.x2
    }

    #[inline]
    pub fn x3(&self) -> f64 {
        self.x3
    }

    pub fn to_array(self) -> [f64; 3] {
        [self.x1, self.x2, self.x3]
    }

    pub fn is_finite(&self) -> bool {
        self.x1.is_finite() && self.x2.is_finite() && self.x3.is_finite()
    }

    /// `<self, other>` in the Minkowski metric.
    #[inline]
    pub fn inner(&self, other: &Vec3M) -> f64 {
        minkowski_inner(*self, *other)
    }

    #[inline]
    pub fn cross(&self, other: &Vec3M) -> Vec3M {
        lorentz_cross(*self, *other)
    }

    #[inline]
    pub fn mnorm(&self) -> f64 {
        mnorm(*self)
    }

    /// Squared Euclidean length, used only for scale estimates.
    #[inline]
    pub fn euclid_sq(&self) -> f64 {
        self.x1 * self.x1 + self.x2 * self.x2 + self.x3 * self.x3
    }

    /// Largest absolute component.
    #[inline]
    pub fn max_abs(&self) -> f64 {
        self.x1.abs().max(self.x2.abs()).max(self.x3.abs())
    }

    pub fn causal_character(&self) -> CausalCharacter {
        causal_character(*self)
    }
}

/// `-u1 v1 + u2 v2 + u3 v3`.
#[inline]
pub fn minkowski_inner(u: Vec3M, v: Vec3M) -> f64 {
    -u.x1 * v.x1 + u.x2 * v.x2 + u.x3 * v.x3
}

/// Lorentzian vector product: `(u2v3 - u3v2, u1v3 - u3v1, u2v1 - u1v2)`.
#[inline]
pub fn lorentz_cross(u: Vec3M, v: Vec3M) -> Vec3M {
    Vec3M {
        x1: u.x2 * v.x3 - u.x3 * v.x2,
        x2: u.x1 * v.x3 - u.x3 * v.x1,
        x3: u.x2 * v.x1 - u.x1 * v.x2,
    }
}

/// Classifies by the sign of `<v,v>`. The zero vector is space-like.
pub fn causal_character(v: Vec3M) -> CausalCharacter {
    let q = minkowski_inner(v, v);
    if q < 0.0 {
        CausalCharacter::TimeLike
    } else if q == 0.0 && v != Vec3M::ZERO {
        CausalCharacter::LightLike
    } else {
        CausalCharacter::SpaceLike
    }
}

/// `sqrt(|<v,v>|)`.
#[inline]
pub fn mnorm(v: Vec3M) -> f64 {
    minkowski_inner(v, v).abs().sqrt()
}

/// True when `v` sits on the light cone up to cancellation error.
#[inline]
pub fn is_near_null(v: Vec3M) -> bool {
    minkowski_inner(v, v).abs() <= NULL_RELATIVE * (1.0 + v.euclid_sq())
}

/// `v / |v|`. Rejects null and near-null input.
pub fn normalize(v: Vec3M) -> Result<Vec3M> {
    if !v.is_finite() {
        return Err(CurveError::NonFinite);
    }
    if is_near_null(v) {
        return Err(CurveError::NearNullVector);
    }
    Ok(v / mnorm(v))
}

impl Add for Vec3M {
    type Output = Vec3M;
    #[inline]
    fn add(self, rhs: Vec3M) -> Vec3M {
        Vec3M { x1: self.x1 + rhs.x1, x2: self.x2 + rhs.x2, x3: self.x3 + rhs.x3 }
    }
}

impl AddAssign for Vec3M {
    #[inline]
    fn add_assign(&mut self, rhs: Vec3M) {
        *self = *self + rhs;
    }
}

impl Sub for Vec3M {
    type Output = Vec3M;
    #[inline]
    fn sub(self, rhs: Vec3M) -> Vec3M {
        Vec3M { x1: self.x1 - rhs.x1, x2: self.x2 - rhs.x2, x3: self.x3 - rhs.x3 }
    }
}

impl SubAssign for Vec3M {
    #[inline]
    fn sub_assign(&mut self, rhs: Vec3M) {
        *self = *self - rhs;
    }
}

impl Neg for Vec3M {
    type Output = Vec3M;
    #[inline]
    fn neg(self) -> Vec3M {
        Vec3M { x1: -self.x1, x2: -self.x2, x3: -self.x3 }
    }
}

impl Mul<f64> for Vec3M {
    type Output = Vec3M;
    #[inline]
    fn mul(self, s: f64) -> Vec3M {
        Vec3M { x1: self.x1 * s, x2: self.x2 * s, x3: self.x3 * s }
    }
}

impl Mul<Vec3M> for f64 {
    type Output = Vec3M;
    #[inline]
    fn mul(self, v: Vec3M) -> Vec3M {
        v * self
    }
}

impl Div<f64> for Vec3M {
    type Output = Vec3M;
    #[inline]
    fn div(self, s: f64) -> Vec3M {
        Vec3M { x1: self.x1 / s, x2: self.x2 / s, x3: self.x3 / s }
    }
}

impl Index<usize> for Vec3M {
    type Output = f64;
    fn index(&self, i: usize) -> &f64 {
        match i {
            0 => &self.x1,
            1 => &self.x2,
            2 => &self.x3,
            _ => panic!("Vec3M index {i} out of range"),
        }
    }
}

impl From<[f64; 3]> for Vec3M {
    fn from(a: [f64; 3]) -> Self {
        Vec3M::new(a[0], a[1], a[2])
    }
}
