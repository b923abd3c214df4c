//! Adaptive Simpson quadrature for scalar and vector integrands.

use std::ops::{Add, Mul, Sub};

use crate::error::{CurveError, Result};
use crate::lorentz::Vec3M;
use crate::tolerance::{QUADRATURE_MAX_DEPTH, QUADRATURE_TOL};

/// Values the integrator can accumulate.
pub trait Integrand: Copy + Add<Output = Self> + Sub<Output = Self> + Mul<f64, Output = Self> {
    fn zero() -> Self;
    /// Size used in the error estimate.
    fn magnitude(&self) -> f64;
}

impl Integrand for f64 {
    fn zero() -> Self {
        0.0
    }
    fn magnitude(&self) -> f64 {
        self.abs()
    }
}

impl Integrand for Vec3M {
    fn zero() -> Self {
        Vec3M::ZERO
    }
    fn magnitude(&self) -> f64 {
        self.max_abs()
    }
}

/// Integration settings.
#[derive(Debug, Clone, Copy)]
pub struct Simpson {
    pub tol: f64,
    pub max_depth: u32,
}

impl Default for Simpson {
    fn default() -> Self {
        Simpson { tol: QUADRATURE_TOL, max_depth: QUADRATURE_MAX_DEPTH }
    }
}

impl Simpson {
    /// `∫_a^b f`. Orientation is respected (`b < a` gives the negated integral).
    pub fn integrate<V, F>(&self, f: F, a: f64, b: f64) -> Result<V>
    where
        V: Integrand,
        F: Fn(f64) -> Result<V>,
    {
        if a == b {
            return Ok(V::zero());
        }
        let fa = f(a)?;
        let fb = f(b)?;
        let m = 0.5 * (a + b);
        let fm = f(m)?;
        let whole = simpson(a, b, fa, fm, fb);
        self.recurse(&f, a, b, fa, fm, fb, whole, self.tol, 0)
    }

    #[allow(clippy::too_many_arguments)]
    fn recurse<V, F>(
        &self,
        f: &F,
        a: f64,
        b: f64,
        fa: V,
        fm: V,
        fb: V,
        whole: V,
        tol: f64,
        depth: u32,
    ) -> Result<V>
    where
        V: Integrand,
        F: Fn(f64) -> Result<V>,
    {
        let m = 0.5 * (a + b);
        let lm = 0.5 * (a + m);
        let rm = 0.5 * (m + b);
        let flm = f(lm)?;
        let frm = f(rm)?;
        let left = simpson(a, m, fa, flm, fm);
        let right = simpson(m, b, fm, frm, fb);
        let delta = left + right - whole;
        let err = delta.magnitude();
        if !err.is_finite() {
            return Err(CurveError::QuadratureFailure { a, b });
        }
        if err <= 15.0 * tol {
            // Richardson correction
            return Ok(left + right + delta * (1.0 / 15.0));
        }
        if depth >= self.max_depth || m == a || m == b {
            return Err(CurveError::QuadratureFailure { a, b });
        }
        let l = self.recurse(f, a, m, fa, flm, fm, left, 0.5 * tol, depth + 1)?;
        let r = self.recurse(f, m, b, fm, frm, fb, right, 0.5 * tol, depth + 1)?;
        Ok(l + r)
    }

    /// Integrates over consecutive pieces `[p0,p1], [p1,p2], ...`, splitting the
    /// tolerance in proportion to piece length. The integrand also receives the
    /// midpoint of the piece it is evaluated on.
    pub fn integrate_pieces<V, F>(&self, f: F, points: &[f64]) -> Result<V>
    where
        V: Integrand,
        F: Fn(f64, f64) -> Result<V>,
    {
        if points.len() < 2 {
            return Ok(V::zero());
        }
        let total = (points[points.len() - 1] - points[0]).abs();
        let mut acc = V::zero();
        for w in points.windows(2) {
            let (a, b) = (w[0], w[1]);
            let mid = 0.5 * (a + b);
            let share = if total > 0.0 { (b - a).abs() / total } else { 1.0 };
            let piece = Simpson { tol: (self.tol * share).max(f64::MIN_POSITIVE), ..*self };
            acc = acc + piece.integrate(|u| f(mid, u), a, b)?;
        }
        Ok(acc)
    }
}

#[inline]
fn simpson<V: Integrand>(a: f64, b: f64, fa: V, fm: V, fb: V) -> V {
    (fa + fm * 4.0 + fb) * ((b - a) / 6.0)
}

/// Shorthand with default settings.
pub fn integrate<V, F>(f: F, a: f64, b: f64) -> Result<V>
where
    V: Integrand,
    F: Fn(f64) -> Result<V>,
{
    Simpson::default().integrate(f, a, b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_is_exact() {
        let v: f64 = integrate(|x| Ok(x * x * x - 2.0 * x + 1.0), 0.0, 2.0).unwrap();
        assert!((v - 2.0).abs() < 1e-14);
    }

    #[test]
    fn smooth_integrands() {
        let v: f64 = integrate(|x: f64| Ok(x.cosh()), 0.0, 3.0).unwrap();
        assert!((v - 3.0f64.sinh()).abs() < 1e-10);
        let w: f64 = integrate(|x: f64| Ok((5.0 * x).sin()), 0.0, 1.0).unwrap();
        assert!((w - (1.0 - 5.0f64.cos()) / 5.0).abs() < 1e-10);
    }

    #[test]
    fn reversed_and_empty() {
        let fwd: f64 = integrate(|x: f64| Ok(x.exp()), 0.0, 1.0).unwrap();
        let rev: f64 = integrate(|x: f64| Ok(x.exp()), 1.0, 0.0).unwrap();
        assert!((fwd + rev).abs() < 1e-14);
        let zero: f64 = integrate(|x: f64| Ok(x), 0.7, 0.7).unwrap();
        assert_eq!(zero, 0.0);
    }

    #[test]
    fn vector_integrand() {
        let v: Vec3M =
            integrate(|x: f64| Ok(Vec3M::new(1.0, 2.0 * x, x.sinh())), 0.0, 1.0).unwrap();
        assert!((v - Vec3M::new(1.0, 1.0, 1.0f64.cosh() - 1.0)).max_abs() < 1e-10);
    }

    #[test]
    fn singular_integrand_fails() {
        let r: Result<f64> = Simpson { tol: 1e-12, max_depth: 12 }
            .integrate(|x: f64| Ok(1.0 / x.abs().max(1e-300).sqrt()), 0.0, 1.0);
        assert!(matches!(r, Err(CurveError::QuadratureFailure { .. })));
    }

    #[test]
    fn pieces_sum() {
        let v: f64 = Simpson::default()
            .integrate_pieces(|_, u| Ok(u * u), &[0.0, 0.25, 0.5, 1.0])
            .unwrap();
        assert!((v - 1.0 / 3.0).abs() < 1e-14);
    }

    #[test]
    fn errors_propagate() {
        let r: Result<f64> = integrate(
            |x| if x > 0.5 { Err(CurveError::NotTimeLike { t: x }) } else { Ok(1.0) },
            0.0,
            1.0,
        );
        assert!(matches!(r, Err(CurveError::NotTimeLike { .. })));
    }
}
