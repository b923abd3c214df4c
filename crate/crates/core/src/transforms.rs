//! Integral transforms that normalize torsion or curvature while keeping the
//! Frenet frame.
//!
//! Torsion-normalizing: `β(t) = ∫ T_α |B'_α| du`, giving `κ_β = κ_α/|τ_α|`, `τ_β = ±1`.
//! Curvature-normalizing: `β(t) = ∫ T_α |T'_α| du`, giving `κ_β = 1`, `τ_β = τ_α/κ_α`.
//!
//! The integral starts at the base curve's domain start, so `β` vanishes there.

use serde::{Deserialize, Serialize};

use crate::curve::CurveSpec;
use crate::error::Result;
use crate::frenet::{local_frenet, DerivativeMethod};
use crate::lorentz::{mnorm, normalize, Vec3M};
use crate::tolerance::{default_step, FD_TOL, SPEED_LAW_TOL, TRANSFORM_TOL};
use crate::verify::{translation_match, InvariantReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum TransformKind {
    /// Weight `|B'_α| = |τ_α|·ds/dt`.
    TorsionNormalizing,
    /// Weight `|T'_α| = κ_α·ds/dt`.
    CurvatureNormalizing,
}

impl TransformKind {
    /// Predicted `(κ_β, τ_β)` from the base invariants.
    pub fn predicted(self, kappa: f64, tau: f64) -> (f64, f64) {
        match self {
            TransformKind::TorsionNormalizing => (kappa / tau.abs(), tau.signum()),
            TransformKind::CurvatureNormalizing => (1.0, tau / kappa),
        }
    }

    /// Speed factor `|β'|/|α'|`.
    pub fn weight(self, kappa: f64, tau: f64) -> f64 {
        match self {
            TransformKind::TorsionNormalizing => tau.abs(),
            TransformKind::CurvatureNormalizing => kappa,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            TransformKind::TorsionNormalizing => "torsion-normalizing",
            TransformKind::CurvatureNormalizing => "curvature-normalizing",
        }
    }
}

/// The transformed curve on the base curve's domain.
pub fn transformed(curve: &CurveSpec, kind: TransformKind) -> CurveSpec {
    CurveSpec::transformed(kind, curve.clone())
}

/// `β(t)` for the torsion-normalizing transform.
pub fn torsion_normalizing_transform(curve: &CurveSpec, t: f64) -> Result<Vec3M> {
    transformed(curve, TransformKind::TorsionNormalizing).position(t)
}

/// `β(t)` for the curvature-normalizing transform.
pub fn curvature_normalizing_transform(curve: &CurveSpec, t: f64) -> Result<Vec3M> {
    transformed(curve, TransformKind::CurvatureNormalizing).position(t)
}

/// Per-point deviation of a transformed curve from the predicted invariants and frame.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TransformDeviation {
    pub t: f64,
    pub kappa: f64,
    pub tau: f64,
    pub kappa_error: f64,
    pub tau_error: f64,
    /// Largest component difference between the two frames.
    pub frame_error: f64,
}

/// Compares finite-difference invariants and frame of `β` with the values
/// predicted from the exact invariants of the base curve.
pub fn transform_deviations(curve: &CurveSpec, kind: TransformKind, grid: &[f64]) -> Result<Vec<TransformDeviation>> {
    let beta = transformed(curve, kind);
    grid.iter()
        .map(|&t| {
            let a = local_frenet(curve, t, DerivativeMethod::Analytic)?;
            let b = local_frenet(&beta, t, DerivativeMethod::FD_DEFAULT)?;
            let (k, tau) = kind.predicted(a.kappa, a.tau);
            Ok(TransformDeviation {
                t,
                kappa: b.kappa,
                tau: b.tau,
                kappa_error: (b.kappa - k).abs(),
                tau_error: (b.tau - tau).abs(),
                frame_error: b.frame.max_difference(&a.frame),
            })
        })
        .collect()
}

/// Invariants and frame transport of the transform over the grid.
pub fn transform_invariant_check(curve: &CurveSpec, kind: TransformKind, grid: &[f64]) -> Result<InvariantReport> {
    let dev = transform_deviations(curve, kind, grid)?;
    let values = dev
        .iter()
        .map(|d| match kind {
            TransformKind::TorsionNormalizing => d.tau,
            TransformKind::CurvatureNormalizing => d.kappa,
        })
        .collect();
    let details = dev.iter().map(|d| d.kappa_error.max(d.tau_error).max(d.frame_error)).collect();
    Ok(InvariantReport::new(
        format!("{} transform invariants and shared frame", kind.label()),
        grid.to_vec(),
        values,
        details,
        TRANSFORM_TOL,
    ))
}

fn chord(beta: &CurveSpec, t: f64) -> Result<(Vec3M, f64)> {
    // short chords: the displacement integral is accurate far below the chord error
    let h = 0.1 * default_step(t);
    Ok((beta.displacement(t - h, t + h)?, 2.0 * h))
}

/// `ds_β/dt = weight·ds_α/dt`, with the left side from a central difference
/// of the integrated curve. Residuals are relative to the predicted speed.
pub fn speed_law_check(curve: &CurveSpec, kind: TransformKind, grid: &[f64]) -> Result<InvariantReport> {
    let beta = transformed(curve, kind);
    let mut values = Vec::with_capacity(grid.len());
    let mut details = Vec::with_capacity(grid.len());
    for &t in grid {
        let a = local_frenet(curve, t, DerivativeMethod::Analytic)?;
        let (dx, dt) = chord(&beta, t)?;
        let speed = mnorm(dx) / dt;
        values.push(speed);
        let predicted = kind.weight(a.kappa, a.tau) * a.speed;
        details.push((speed / predicted - 1.0).abs());
    }
    Ok(InvariantReport::new(format!("{} transform speed law", kind.label()), grid.to_vec(), values, details, SPEED_LAW_TOL))
}

/// Central-difference tangent of the integrated curve against `T_α`.
pub fn tangent_transport_check(curve: &CurveSpec, kind: TransformKind, grid: &[f64]) -> Result<InvariantReport> {
    let beta = transformed(curve, kind);
    let mut details = Vec::with_capacity(grid.len());
    for &t in grid {
        let a = local_frenet(curve, t, DerivativeMethod::Analytic)?;
        let (dx, _) = chord(&beta, t)?;
        details.push((normalize(dx)? - a.frame.tangent).max_abs());
    }
    Ok(InvariantReport::new(format!("{} transform keeps the tangent", kind.label()), grid.to_vec(), details.clone(), details, FD_TOL))
}

/// Curvature-normalizing after torsion-normalizing returns a unit-curvature
/// curve to itself up to translation.
pub fn round_trip_check(curve: &CurveSpec, grid: &[f64]) -> Result<InvariantReport> {
    let there = transformed(curve, TransformKind::TorsionNormalizing);
    let back = transformed(&there, TransformKind::CurvatureNormalizing);
    let original = curve.sample(grid)?;
    let returned = back.sample(grid)?;
    Ok(translation_match("transform round trip restores the curve", &returned, &original, grid, TRANSFORM_TOL))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::uniform_grid;
    use crate::families::{anti_salkowski_point, salkowski_point, SalkowskiParams};

    fn gamma(m: f64) -> CurveSpec {
        CurveSpec::salkowski(m).unwrap()
    }

    #[test]
    fn empty_integral_at_origin() {
        let c = gamma(2.0);
        let start = c.domain().start;
        assert_eq!(torsion_normalizing_transform(&c, start).unwrap(), Vec3M::ZERO);
        assert_eq!(curvature_normalizing_transform(&c, start).unwrap(), Vec3M::ZERO);
    }

    #[test]
    fn torsion_normalizing_gives_anti_salkowski() {
        let p = SalkowskiParams::new(2.0).unwrap();
        let c = gamma(2.0);
        let start = c.domain().start;
        let offset = anti_salkowski_point(&p, start);
        for t in [0.1, 0.7, 1.3, 2.0] {
            let b = torsion_normalizing_transform(&c, t).unwrap();
            assert!((b - (anti_salkowski_point(&p, t) - offset)).max_abs() < 1e-6);
        }
    }

    #[test]
    fn unit_curvature_input_is_translated() {
        let p = SalkowskiParams::new(2.0).unwrap();
        let c = gamma(2.0);
        let start = c.domain().start;
        for t in [0.5, 1.5] {
            let b = curvature_normalizing_transform(&c, t).unwrap();
            assert!((b - (salkowski_point(&p, t) - salkowski_point(&p, start))).max_abs() < 1e-8);
        }
    }

    #[test]
    fn unit_torsion_input_is_translated() {
        let p = SalkowskiParams::new(2.0).unwrap();
        let c = CurveSpec::anti_salkowski(2.0).unwrap();
        let start = c.domain().start;
        let b = torsion_normalizing_transform(&c, 1.2).unwrap();
        assert!((b - (anti_salkowski_point(&p, 1.2) - anti_salkowski_point(&p, start))).max_abs() < 1e-8);
    }

    #[test]
    fn invariant_checks() {
        let g = uniform_grid(0.2, 2.0, 20);
        let r = transform_invariant_check(&gamma(2.0), TransformKind::TorsionNormalizing, &g).unwrap();
        assert!(r.passed, "{}", r.max_residual);
        let anti = CurveSpec::anti_salkowski(2.0).unwrap();
        let r = transform_invariant_check(&anti, TransformKind::CurvatureNormalizing, &g).unwrap();
        assert!(r.passed, "{}", r.max_residual);
        let n = 2.0 / 3f64.sqrt();
        for d in transform_deviations(&anti, TransformKind::CurvatureNormalizing, &g).unwrap() {
            assert!((d.kappa - 1.0).abs() < 1e-4);
            assert!((d.tau - 1.0 / (n * d.t).tanh()).abs() < 1e-3);
        }
    }

    #[test]
    fn speed_and_tangent() {
        let g = uniform_grid(0.3, 2.0, 8);
        for kind in [TransformKind::TorsionNormalizing, TransformKind::CurvatureNormalizing] {
            let c = CurveSpec::anti_salkowski(1.5).unwrap();
            assert!(speed_law_check(&c, kind, &g).unwrap().passed);
            assert!(tangent_transport_check(&c, kind, &g).unwrap().passed);
        }
    }

    #[test]
    fn round_trip() {
        let r = round_trip_check(&gamma(2.0), &uniform_grid(0.3, 2.0, 10)).unwrap();
        assert!(r.passed, "{}", r.max_residual);
    }

    #[test]
    fn helix_torsion_sign_is_kept() {
        // τ < 0 on this fixture, so the transformed torsion is −1
        let c = CurveSpec::helix(6f64.sqrt(), 2.0, 0.0, 5.0).unwrap();
        let d = transform_deviations(&c, TransformKind::TorsionNormalizing, &[1.0, 2.0]).unwrap();
        for x in d {
            assert!((x.tau + 1.0).abs() < 1e-6);
            assert!(x.frame_error < 1e-6);
        }
    }
}
