//! Frenet apparatus of a time-like curve under an arbitrary regular parameter.
//!
//! Curvature and torsion are defined for unit-speed curves; here they are
//! reached through the chain rule, dividing parameter derivatives by the
//! speed. Two independent routes are available:
//!
//! * [`DerivativeMethod::Analytic`] evaluates exact derivatives `α', α'', α'''`
//!   and uses `κ = |α'×α''|/v³`, `τ = <α''', α'×α''>/|α'×α''|²`.
//! * [`DerivativeMethod::FiniteDifference`] builds `T = α'/|α'|` and then
//!   central-differences the frame fields: `κ = |dT/dt|/v`,
//!   `N = (dT/dt)/|dT/dt|`, `τ = <dN/dt, B>/v`. The stencil reaches `t ± 2h`.
//!
//! In both, `B = T × N` with the Lorentzian vector product.

use serde::{Deserialize, Serialize};

use crate::curve::CurveSpec;
use crate::error::{CurveError, Result};
use crate::lorentz::{is_near_null, lorentz_cross, minkowski_inner, mnorm, Vec3M};
use crate::quadrature::Simpson;
use crate::tolerance::{default_step, KAPPA_MIN};

/// Frenet trihedron `{T, N, B}`: `T` time-like, `N` and `B` space-like.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Frame {
    pub tangent: Vec3M,
    pub normal: Vec3M,
    pub binormal: Vec3M,
}

impl Frame {
    /// Largest violation of `<T,T> = −1`, `<N,N> = <B,B> = 1` and mutual orthogonality.
    pub fn orthonormality_defect(&self) -> f64 {
        let (t, n, b) = (self.tangent, self.normal, self.binormal);
        [
            (minkowski_inner(t, t) + 1.0).abs(),
            (minkowski_inner(n, n) - 1.0).abs(),
            (minkowski_inner(b, b) - 1.0).abs(),
            minkowski_inner(t, n).abs(),
            minkowski_inner(n, b).abs(),
            minkowski_inner(b, t).abs(),
        ]
        .into_iter()
        .fold(0.0, f64::max)
    }

    /// `max |B − T×N|` over components.
    pub fn binormal_defect(&self) -> f64 {
        (self.binormal - lorentz_cross(self.tangent, self.normal)).max_abs()
    }

    /// Largest component difference between two frames.
    pub fn max_difference(&self, other: &Frame) -> f64 {
        (self.tangent - other.tangent)
            .max_abs()
            .max((self.normal - other.normal).max_abs())
            .max((self.binormal - other.binormal).max_abs())
    }
}

/// Everything known about the curve at one parameter value.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FrenetSample {
    pub t: f64,
    pub position: Vec3M,
    pub frame: Frame,
    pub kappa: f64,
    pub tau: f64,
    pub speed: f64,
    /// Arc-length from the start of the curve's domain.
    pub arclength: f64,
}

/// Local Frenet data without position or arc-length.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LocalFrenet {
    pub frame: Frame,
    pub kappa: f64,
    pub tau: f64,
    pub speed: f64,
}

/// How derivatives are obtained.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum DerivativeMethod {
    /// Exact derivatives from the curve representation.
    Analytic,
    /// Central differences; `None` uses `h = 1e-4·max(1, |t|)`.
    FiniteDifference { step: Option<f64> },
}

impl DerivativeMethod {
    pub const FD_DEFAULT: DerivativeMethod = DerivativeMethod::FiniteDifference { step: None };

    pub fn fd(step: f64) -> Self {
        DerivativeMethod::FiniteDifference { step: Some(step) }
    }

    fn step_at(&self, t: f64) -> Option<f64> {
        match self {
            DerivativeMethod::Analytic => None,
            DerivativeMethod::FiniteDifference { step } => Some(step.unwrap_or_else(|| default_step(t))),
        }
    }

    /// How far the method looks on either side of `t`.
    pub fn reach(&self, t: f64) -> f64 {
        self.step_at(t).map_or(0.0, |h| 2.0 * h)
    }
}

/// Central-difference estimate of the `order`-th derivative of the position,
/// `O(h²)` accurate. The stencil must stay inside the domain.
pub fn finite_difference(curve: &CurveSpec, t: f64, order: usize, h: f64) -> Result<Vec3M> {
    if !(h > 0.0 && h.is_finite()) {
        return Err(CurveError::InvalidParameter(format!("step must be positive (got {h})")));
    }
    if !(1..=3).contains(&order) {
        return Err(CurveError::InvalidParameter(format!("order must be 1, 2 or 3 (got {order})")));
    }
    let reach = order as f64 * h;
    curve.domain().require(t - reach, t + reach)?;
    let x = |k: f64| curve.position(t + k * h);
    Ok(match order {
        1 => (x(1.0)? - x(-1.0)?) / (2.0 * h),
        2 => (x(1.0)? - x(0.0)? * 2.0 + x(-1.0)?) / (h * h),
        _ => (x(2.0)? - x(1.0)? * 2.0 + x(-1.0)? * 2.0 - x(-2.0)?) / (2.0 * h * h * h),
    })
}

/// `order`-th derivative of the position by the chosen method.
pub fn derivatives(curve: &CurveSpec, t: f64, order: usize, method: DerivativeMethod) -> Result<Vec3M> {
    match method.step_at(t) {
        Some(h) => finite_difference(curve, t, order, h),
        None => {
            if !(1..=3).contains(&order) {
                return Err(CurveError::InvalidParameter(format!(
                    "order must be 1, 2 or 3 (got {order})"
                )));
            }
            Ok(curve.derivatives(t, order)?[order - 1])
        }
    }
}

fn require_timelike(v: Vec3M, t: f64) -> Result<()> {
    if minkowski_inner(v, v) < 0.0 && !is_near_null(v) {
        Ok(())
    } else {
        Err(CurveError::NotTimeLike { t })
    }
}

/// Frenet data from exact derivatives `α', α'', α'''`.
pub fn frenet_from_jet(t: f64, d1: Vec3M, d2: Vec3M, d3: Vec3M) -> Result<LocalFrenet> {
    require_timelike(d1, t)?;
    let speed = mnorm(d1);
    let tangent = d1 / speed;
    let c = lorentz_cross(d1, d2);
    let cc = minkowski_inner(c, c);
    let kappa = cc.max(0.0).sqrt() / (speed * speed * speed);
    if !(kappa > KAPPA_MIN) {
        return Err(CurveError::VanishingCurvature { t, kappa });
    }
    // component of α'' orthogonal to T (note <T,T> = −1)
    let perp = d2 + tangent * minkowski_inner(d2, tangent);
    let normal = perp / mnorm(perp);
    let binormal = lorentz_cross(tangent, normal);
    let tau = minkowski_inner(d3, c) / cc;
    Ok(LocalFrenet { frame: Frame { tangent, normal, binormal }, kappa, tau, speed })
}

fn frenet_finite_difference(curve: &CurveSpec, t: f64, h: f64) -> Result<LocalFrenet> {
    if !(h > 0.0 && h.is_finite()) {
        return Err(CurveError::InvalidParameter(format!("step must be positive (got {h})")));
    }
    curve.domain().require(t - 2.0 * h, t + 2.0 * h)?;
    let tangent_at = |u: f64| -> Result<Vec3M> {
        let v = curve.derivatives_near(t, u, 1)?[0];
        require_timelike(v, u)?;
        Ok(v / mnorm(v))
    };
    // T(c + h) − T(c − h); closed-form tangents avoid cancellation in the subtraction
    let difference = |c: f64| -> Result<Vec3M> {
        match curve.tangent_stencil(c, h) {
            Some((_, d)) => Ok(d),
            None => Ok(tangent_at(c + h)? - tangent_at(c - h)?),
        }
    };
    let [dt_prev, dt_mid, dt_next] =
        [difference(t - h)?, difference(t)?, difference(t + h)?].map(|d| d / (2.0 * h));
    let tangent = match curve.tangent_stencil(t, h) {
        Some((tangent, _)) => tangent,
        None => tangent_at(t)?,
    };
    let speed = mnorm(curve.derivatives_near(t, t, 1)?[0]);

    let kappa = mnorm(dt_mid) / speed;
    if !(kappa > KAPPA_MIN) || is_near_null(dt_mid) {
        return Err(CurveError::VanishingCurvature { t, kappa });
    }
    let normal_from = |d: Vec3M, u: f64| -> Result<Vec3M> {
        if is_near_null(d) {
            return Err(CurveError::VanishingCurvature { t: u, kappa: mnorm(d) / speed });
        }
        Ok(d / mnorm(d))
    };
    let normal = normal_from(dt_mid, t)?;
    let normal_prev = normal_from(dt_prev, t - h)?;
    let normal_next = normal_from(dt_next, t + h)?;
    let binormal = lorentz_cross(tangent, normal);
    let d_normal = (normal_next - normal_prev) / (2.0 * h);
    let tau = minkowski_inner(d_normal, binormal) / speed;
    Ok(LocalFrenet { frame: Frame { tangent, normal, binormal }, kappa, tau, speed })
}

/// Frame, curvature, torsion and speed at `t`.
pub fn local_frenet(curve: &CurveSpec, t: f64, method: DerivativeMethod) -> Result<LocalFrenet> {
    match method.step_at(t) {
        Some(h) => frenet_finite_difference(curve, t, h),
        None => {
            curve.domain().require(t, t)?;
            let d = curve.derivatives(t, 3)?;
            frenet_from_jet(t, d[0], d[1], d[2])
        }
    }
}

/// Full Frenet sample at `t`, including position and arc-length from the domain start.
pub fn frenet_at(curve: &CurveSpec, t: f64, method: DerivativeMethod) -> Result<FrenetSample> {
    let local = local_frenet(curve, t, method)?;
    let s = arclength(curve, curve.domain().start, t)?;
    Ok(FrenetSample {
        t,
        position: curve.position(t)?,
        frame: local.frame,
        kappa: local.kappa,
        tau: local.tau,
        speed: local.speed,
        arclength: s,
    })
}

/// Frenet samples over a grid; arc-length is accumulated along a sorted grid.
pub fn frenet_samples(curve: &CurveSpec, grid: &[f64], method: DerivativeMethod) -> Result<Vec<FrenetSample>> {
    let sorted = grid.windows(2).all(|w| w[0] <= w[1]);
    let mut out = Vec::with_capacity(grid.len());
    let mut last: Option<(f64, f64)> = None;
    for &t in grid {
        let local = local_frenet(curve, t, method)?;
        let s = match last {
            Some((t0, s0)) if sorted => s0 + arclength(curve, t0, t)?,
            _ => arclength(curve, curve.domain().start, t)?,
        };
        last = Some((t, s));
        out.push(FrenetSample {
            t,
            position: curve.position(t)?,
            frame: local.frame,
            kappa: local.kappa,
            tau: local.tau,
            speed: local.speed,
            arclength: s,
        });
    }
    Ok(out)
}

/// Max-norm residuals `(r_T, r_N, r_B)` of
/// `T' = κN`, `N' = κT + τB`, `B' = −τN` (arc-length derivatives).
///
/// Frames at `t ± h` come from `method`; their central difference is divided
/// by the speed at `t`.
pub fn frenet_residuals(
    curve: &CurveSpec,
    t: f64,
    method: DerivativeMethod,
    h: f64,
) -> Result<(f64, f64, f64)> {
    if !(h > 0.0 && h.is_finite()) {
        return Err(CurveError::InvalidParameter(format!("step must be positive (got {h})")));
    }
    let here = local_frenet(curve, t, method)?;
    let prev = local_frenet(curve, t - h, method)?;
    let next = local_frenet(curve, t + h, method)?;
    let ds = 2.0 * h * here.speed;
    let f = here.frame;
    let dt = (next.frame.tangent - prev.frame.tangent) / ds;
    let dn = (next.frame.normal - prev.frame.normal) / ds;
    let db = (next.frame.binormal - prev.frame.binormal) / ds;
    Ok((
        (dt - f.normal * here.kappa).max_abs(),
        (dn - f.tangent * here.kappa - f.binormal * here.tau).max_abs(),
        (db + f.normal * here.tau).max_abs(),
    ))
}

/// `∫_{t0}^{t1} |α'(t)| dt` by adaptive Simpson.
pub fn arclength(curve: &CurveSpec, t0: f64, t1: f64) -> Result<f64> {
    if t0 == t1 {
        return Ok(0.0);
    }
    curve.domain().require(t0.min(t1), t0.max(t1))?;
    Simpson::default().integrate_pieces(
        |center, u| Ok(mnorm(curve.derivatives_near(center, u, 1)?[0])),
        &curve.pieces(t0, t1),
    )
}
