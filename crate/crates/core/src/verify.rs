//! Invariant checks: helix and slant-helix classifiers, the constant-angle
//! axis in both directions, and closed-form consistency of the families.
//!
//! Each check returns an [`InvariantReport`]. Tolerances default to
//! `1e-8` for exact-derivative pipelines and `1e-5` for finite differences.

use serde::{Deserialize, Serialize};

use crate::curve::{CurveKind, CurveSpec};
use crate::error::{CurveError, Result};
use crate::families::{
    anti_salkowski_invariants, axis_decomposition, branch_sign, salkowski_arclength, salkowski_frame,
    salkowski_frenet_residuals, salkowski_invariants, SalkowskiParams,
};
use crate::frenet::{arclength, frenet_residuals, local_frenet, DerivativeMethod, LocalFrenet};
use crate::lorentz::{minkowski_inner, Vec3M};
use crate::tolerance::{CLOSED_FORM_TOL, FD_TOL, RATIO_STEP_RELATIVE, TRANSFORM_TOL};

/// Outcome of one check over a grid.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub name: String,
    pub grid: Vec<f64>,
    /// The quantity examined at each grid point.
    pub values: Vec<f64>,
    /// Residual at each grid point.
    pub details: Vec<f64>,
    pub max_residual: f64,
    pub tolerance: f64,
    pub passed: bool,
    /// Summary value, e.g. the mean of a quantity expected to be constant.
    pub value: Option<f64>,
    pub note: Option<String>,
}

impl InvariantReport {
    /// `passed` is `max_residual <= tolerance`; a NaN residual fails.
    pub fn new(name: impl Into<String>, grid: Vec<f64>, values: Vec<f64>, details: Vec<f64>, tolerance: f64) -> Self {
        let max_residual = details.iter().fold(0.0_f64, |m, &d| if d.is_nan() || m.is_nan() { f64::NAN } else { m.max(d) });
        InvariantReport {
            name: name.into(),
            grid,
            values,
            details,
            max_residual,
            tolerance,
            passed: max_residual <= tolerance,
            value: None,
            note: None,
        }
    }

    /// Report on how far `values` stray from their first entry.
    pub fn constancy(name: impl Into<String>, grid: Vec<f64>, values: Vec<f64>, tolerance: f64) -> Self {
        let first = values.first().copied().unwrap_or(0.0);
        let details = values.iter().map(|v| (v - first).abs()).collect();
        let mean = if values.is_empty() { None } else { Some(values.iter().sum::<f64>() / values.len() as f64) };
        let mut r = InvariantReport::new(name, grid, values, details, tolerance);
        r.value = mean;
        if r.grid.len() < 2 {
            r.note = Some("insufficient grid: constancy is trivial".into());
        }
        r
    }

    /// Turns a constancy report into the claim that the quantity varies by at
    /// least `min_variation`. The residual is the shortfall.
    pub fn expect_varies(self, name: impl Into<String>, min_variation: f64) -> Self {
        let (lo, hi) = self.values.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), &v| (a.min(v), b.max(v)));
        let variation = if self.values.is_empty() { 0.0 } else { hi - lo };
        let shortfall = (min_variation - variation).max(0.0);
        let mut r = InvariantReport::new(name, self.grid, self.values, vec![shortfall], 0.0);
        r.value = Some(variation);
        r.note = Some(format!("variation must be at least {min_variation:e}"));
        r
    }

    /// Turns a report into the claim that it fails by a margin: passes when
    /// `max_residual >= min_residual`.
    pub fn expect_fails(self, name: impl Into<String>, min_residual: f64) -> Self {
        let shortfall = if self.max_residual.is_nan() { 0.0 } else { (min_residual - self.max_residual).max(0.0) };
        let mut r = InvariantReport::new(name, self.grid, self.values, vec![shortfall], 0.0);
        r.value = Some(self.max_residual);
        r.note = Some(format!("residual must be at least {min_residual:e}"));
        r
    }

    pub fn with_value(mut self, value: f64) -> Self {
        self.value = Some(value);
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    /// Multiplies the tolerance by `scale` and re-judges.
    pub fn rescaled(mut self, scale: f64) -> Self {
        self.tolerance *= scale;
        self.passed = self.max_residual <= self.tolerance;
        self
    }
}

/// Signature `(ε₁, ε₂)` in the slant invariant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SlantConfig {
    pub eps1: i8,
    pub eps2: i8,
}

impl Default for SlantConfig {
    /// `(−1, +1)`: the radicand is `τ² − κ²` for time-like curves.
    fn default() -> Self {
        SlantConfig { eps1: -1, eps2: 1 }
    }
}

impl SlantConfig {
    pub fn new(eps1: i8, eps2: i8) -> Result<Self> {
        for e in [eps1, eps2] {
            if e != 1 && e != -1 {
                return Err(CurveError::InvalidParameter(format!("signature entries must be ±1 (got {e})")));
            }
        }
        Ok(SlantConfig { eps1, eps2 })
    }
}

/// Default pass threshold for a derivative method.
pub fn tolerance_for(method: DerivativeMethod) -> f64 {
    match method {
        DerivativeMethod::Analytic => CLOSED_FORM_TOL,
        DerivativeMethod::FiniteDifference { .. } => FD_TOL,
    }
}

fn frenet_on(curve: &CurveSpec, grid: &[f64], method: DerivativeMethod) -> Result<Vec<LocalFrenet>> {
    grid.iter().map(|&t| local_frenet(curve, t, method)).collect()
}

/// Variation of `τ/κ` over the grid; constant exactly for general helices.
pub fn helix_ratio(curve: &CurveSpec, grid: &[f64], method: DerivativeMethod) -> Result<InvariantReport> {
    let values = frenet_on(curve, grid, method)?.iter().map(|f| f.tau / f.kappa).collect();
    Ok(InvariantReport::constancy("helix ratio tau/kappa is constant", grid.to_vec(), values, tolerance_for(method)))
}

/// `σ = κ²/(ε₁κ² + ε₂τ²)^{3/2} · d(τ/κ)/ds` at `t`.
///
/// The ratio is differentiated in `t` with a five-point stencil and divided by the speed.
pub fn slant_value(curve: &CurveSpec, t: f64, cfg: SlantConfig, method: DerivativeMethod) -> Result<f64> {
    let h = RATIO_STEP_RELATIVE * t.abs().max(1.0);
    let reach = 2.0 * h;
    curve.domain().require(t - reach - method.reach(t - reach), t + reach + method.reach(t + reach))?;
    let ratio = |u: f64| -> Result<f64> {
        let f = local_frenet(curve, u, method)?;
        Ok(f.tau / f.kappa)
    };
    let here = local_frenet(curve, t, method)?;
    let d_ratio = (ratio(t - 2.0 * h)? - 8.0 * ratio(t - h)? + 8.0 * ratio(t + h)? - ratio(t + 2.0 * h)?) / (12.0 * h);
    let (k2, t2) = (here.kappa * here.kappa, here.tau * here.tau);
    let radicand = f64::from(cfg.eps1) * k2 + f64::from(cfg.eps2) * t2;
    if !(radicand > 0.0) {
        return Err(CurveError::SignatureInvalid { t });
    }
    Ok(k2 / radicand.powf(1.5) * d_ratio / here.speed)
}

/// Variation of the slant invariant over the grid; constant exactly for slant helices.
pub fn slant_invariant(
    curve: &CurveSpec,
    grid: &[f64],
    cfg: SlantConfig,
    method: DerivativeMethod,
) -> Result<InvariantReport> {
    let values = grid.iter().map(|&t| slant_value(curve, t, cfg, method)).collect::<Result<Vec<_>>>()?;
    Ok(InvariantReport::constancy("slant invariant is constant", grid.to_vec(), values, FD_TOL))
}

/// Variation of `<N, axis>` over the grid.
pub fn fixed_axis_angle(
    curve: &CurveSpec,
    axis: Vec3M,
    grid: &[f64],
    method: DerivativeMethod,
) -> Result<InvariantReport> {
    let norm = minkowski_inner(axis, axis);
    if !((norm - 1.0).abs() <= 1e-9) {
        return Err(CurveError::InvalidParameter(format!("axis must be unit space-like (<a,a> = {norm})")));
    }
    let values = frenet_on(curve, grid, method)?.iter().map(|f| minkowski_inner(f.frame.normal, axis)).collect();
    Ok(InvariantReport::constancy("normal makes a constant angle with the axis", grid.to_vec(), values, tolerance_for(method)))
}

/// Arc-length at each grid point with the origin chosen so that the
/// constant-angle intrinsic equation can hold.
///
/// Salkowski curves use `s = cosh(nt)/m`. Other curves shift the measured
/// arc-length by the mean of the per-point offsets implied by `τ`.
fn calibrated_arclength(curve: &CurveSpec, grid: &[f64], taus: &[f64], phi: f64) -> Result<(Vec<f64>, &'static str)> {
    if let CurveKind::Salkowski(p) = curve.kind() {
        return Ok((grid.iter().map(|&t| salkowski_arclength(p, t)).collect(), "closed-form arc-length"));
    }
    let th = phi.tanh();
    let start = curve.domain().start;
    let mut measured = Vec::with_capacity(grid.len());
    let mut offset = 0.0;
    for (&t, &tau) in grid.iter().zip(taus) {
        let s = arclength(curve, start, t)?;
        if !(tau * tau > 1.0) {
            return Err(CurveError::ArclengthOriginUnresolved);
        }
        offset += th * tau.abs() / (tau * tau - 1.0).sqrt() - s;
        measured.push(s);
    }
    if measured.is_empty() {
        return Err(CurveError::ArclengthOriginUnresolved);
    }
    let c = offset / measured.len() as f64;
    Ok((measured.into_iter().map(|s| s + c).collect(), "calibrated arc-length origin"))
}

fn require_unit_curvature(frames: &[LocalFrenet]) -> Result<()> {
    let deviation = frames.iter().map(|f| (f.kappa - 1.0).abs()).fold(0.0, f64::max);
    if deviation > TRANSFORM_TOL {
        return Err(CurveError::CurvatureNotUnit { deviation });
    }
    Ok(())
}

/// Residual of `τ(s)²·(s² − tanh²φ) − s²`, the squared form of the
/// intrinsic equation of curves whose normal makes hyperbolic angle `φ` with a fixed axis.
pub fn lemma1_forward_check(
    curve: &CurveSpec,
    phi: f64,
    grid: &[f64],
    method: DerivativeMethod,
) -> Result<InvariantReport> {
    let frames = frenet_on(curve, grid, method)?;
    require_unit_curvature(&frames)?;
    let taus: Vec<f64> = frames.iter().map(|f| f.tau).collect();
    let (s, how) = calibrated_arclength(curve, grid, &taus, phi)?;
    let th2 = phi.tanh().powi(2);
    let details = s.iter().zip(&taus).map(|(s, tau)| (tau * tau * (s * s - th2) - s * s).abs()).collect();
    Ok(InvariantReport::new("intrinsic equation of the constant-angle normal", grid.to_vec(), taus, details, tolerance_for(method))
        .with_note(how))
}

/// Builds `d = cosh φ·(−sT + N − branch·√(s² − tanh²φ)·B)` at each grid point
/// and reports the largest pairwise spread, together with `|<d,N> − cosh φ|`
/// and `|<d,d> − 1|`.
pub fn lemma1_converse_axis(
    curve: &CurveSpec,
    phi: f64,
    branch: i8,
    grid: &[f64],
    method: DerivativeMethod,
) -> Result<InvariantReport> {
    let sign = branch_sign(branch)?;
    let frames = frenet_on(curve, grid, method)?;
    require_unit_curvature(&frames)?;
    let taus: Vec<f64> = frames.iter().map(|f| f.tau).collect();
    let (s, how) = calibrated_arclength(curve, grid, &taus, phi)?;
    let (ch, th2) = (phi.cosh(), phi.tanh().powi(2));
    let mut axes = Vec::with_capacity(grid.len());
    let mut own = Vec::with_capacity(grid.len());
    for ((f, &s), &t) in frames.iter().zip(&s).zip(grid) {
        let r = s * s - th2;
        if r < 0.0 {
            return Err(CurveError::TorsionBranchInvalid { t, tau: f.tau });
        }
        let fr = f.frame;
        let d = (fr.tangent * (-s) + fr.normal - fr.binormal * (sign * r.sqrt())) * ch;
        own.push(
            (minkowski_inner(d, fr.normal) - ch)
                .abs()
                .max((minkowski_inner(d, d) - 1.0).abs()),
        );
        axes.push(d);
    }
    let details: Vec<f64> = axes
        .iter()
        .zip(&own)
        .map(|(a, &o)| axes.iter().map(|b| (*a - *b).max_abs()).fold(o, f64::max))
        .collect();
    let values = axes.iter().map(|d| d.x3()).collect();
    let mut r = InvariantReport::new("constructed axis is constant", grid.to_vec(), values, details, tolerance_for(method))
        .with_note(how);
    if grid.len() < 2 {
        r.note = Some("insufficient grid: constancy is trivial".into());
    }
    Ok(r)
}

/// The axis rebuilt from the closed-form frame: spread over the grid and `|<d,d> − 1|`.
pub fn axis_decomposition_check(p: &SalkowskiParams, grid: &[f64], branch: i8) -> Result<InvariantReport> {
    let axes = grid.iter().map(|&t| Ok(axis_decomposition(p, t, branch)?.d)).collect::<Result<Vec<_>>>()?;
    let first = axes.first().copied().unwrap_or(Vec3M::ZERO);
    let details = axes.iter().map(|d| (*d - first).max_abs().max((minkowski_inner(*d, *d) - 1.0).abs())).collect();
    let values = axes.iter().map(|d| d.x3()).collect();
    Ok(InvariantReport::new("axis from the frame decomposition is fixed", grid.to_vec(), values, details, CLOSED_FORM_TOL))
}

/// Closed-form frames: orthonormality and `B = T×N`.
pub fn closed_form_frame_check(p: &SalkowskiParams, grid: &[f64]) -> Result<InvariantReport> {
    let mut details = Vec::with_capacity(grid.len());
    for &t in grid {
        let f = salkowski_frame(p, t)?;
        details.push(f.orthonormality_defect().max(f.binormal_defect()));
    }
    Ok(InvariantReport::new("closed-form frame is orthonormal with B = T x N", grid.to_vec(), details.clone(), details, CLOSED_FORM_TOL))
}

/// Closed-form frames satisfy the Frenet equations.
pub fn closed_form_frenet_check(p: &SalkowskiParams, grid: &[f64]) -> Result<InvariantReport> {
    let mut details = Vec::with_capacity(grid.len());
    for &t in grid {
        let (a, b, c) = salkowski_frenet_residuals(p, t)?;
        details.push(a.max(b).max(c));
    }
    Ok(InvariantReport::new("closed-form frame satisfies the Frenet equations", grid.to_vec(), details.clone(), details, CLOSED_FORM_TOL))
}

/// Numerical frames against the closed-form frame.
pub fn frame_agreement(curve: &CurveSpec, grid: &[f64], method: DerivativeMethod) -> Result<InvariantReport> {
    let CurveKind::Salkowski(p) = curve.kind() else {
        return Err(CurveError::InvalidParameter("frame agreement needs a Salkowski curve".into()));
    };
    let mut details = Vec::with_capacity(grid.len());
    for &t in grid {
        let numeric = local_frenet(curve, t, method)?;
        details.push(numeric.frame.max_difference(&salkowski_frame(p, t)?));
    }
    Ok(InvariantReport::new("numerical frame matches the closed form", grid.to_vec(), details.clone(), details, tolerance_for(method)))
}

/// Frenet-equation residuals of numerically computed frames.
pub fn frenet_equations_check(curve: &CurveSpec, grid: &[f64], method: DerivativeMethod, h: f64) -> Result<InvariantReport> {
    let mut details = Vec::with_capacity(grid.len());
    for &t in grid {
        let (a, b, c) = frenet_residuals(curve, t, method, h)?;
        details.push(a.max(b).max(c));
    }
    Ok(InvariantReport::new("numerical frame satisfies the Frenet equations", grid.to_vec(), details.clone(), details, TRANSFORM_TOL))
}

/// Computed `κ`, `τ` against the closed forms of the families:
/// `(1, coth nt)` for Salkowski and `(tanh nt, 1)` for anti-Salkowski curves.
pub fn family_invariants_check(curve: &CurveSpec, grid: &[f64], method: DerivativeMethod) -> Result<InvariantReport> {
    let mut values = Vec::with_capacity(grid.len());
    let mut details = Vec::with_capacity(grid.len());
    for &t in grid {
        let expected = match curve.kind() {
            CurveKind::Salkowski(p) => salkowski_invariants(p, t)?,
            CurveKind::AntiSalkowski(p) => {
                let inv = anti_salkowski_invariants(p, t)?;
                (inv.kappa, inv.tau)
            }
            _ => return Err(CurveError::InvalidParameter("closed-form invariants need a family curve".into())),
        };
        let f = local_frenet(curve, t, method)?;
        values.push(f.tau);
        details.push((f.kappa - expected.0).abs().max((f.tau - expected.1).abs()));
    }
    let name = match curve.kind() {
        CurveKind::Salkowski(_) => "salkowski curvature 1 and torsion coth(nt)",
        _ => "anti-salkowski curvature tanh(nt) and torsion 1",
    };
    let tol = match method {
        DerivativeMethod::Analytic => CLOSED_FORM_TOL,
        DerivativeMethod::FiniteDifference { .. } => 1e-6,
    };
    Ok(InvariantReport::new(name, grid.to_vec(), values, details, tol))
}

/// `τ(s)·√(s² − 1/m²) = s` with `s = cosh(nt)/m` and exact torsion.
pub fn torsion_law_check(p: &SalkowskiParams, grid: &[f64]) -> Result<InvariantReport> {
    let inv_m2 = 1.0 / (p.m() * p.m());
    let mut values = Vec::with_capacity(grid.len());
    let mut details = Vec::with_capacity(grid.len());
    for &t in grid {
        let (_, tau) = salkowski_invariants(p, t)?;
        let s = salkowski_arclength(p, t);
        values.push(tau);
        details.push((tau * (s * s - inv_m2).sqrt() - s).abs());
    }
    Ok(InvariantReport::new("torsion as a function of arc-length", grid.to_vec(), values, details, CLOSED_FORM_TOL))
}

/// Largest deviation of `a − b` from its value at the first grid point.
pub fn translation_match(
    name: impl Into<String>,
    a: &[Vec3M],
    b: &[Vec3M],
    grid: &[f64],
    tolerance: f64,
) -> InvariantReport {
    let offset = match (a.first(), b.first()) {
        (Some(x), Some(y)) => *x - *y,
        _ => Vec3M::ZERO,
    };
    let details: Vec<f64> = a.iter().zip(b).map(|(x, y)| (*x - *y - offset).max_abs()).collect();
    InvariantReport::new(name, grid.to_vec(), details.clone(), details, tolerance)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::uniform_grid;

    fn grid() -> Vec<f64> {
        uniform_grid(0.3, 2.0, 32)
    }

    fn gamma(m: f64) -> CurveSpec {
        CurveSpec::salkowski(m).unwrap()
    }

    #[test]
    fn report_pass_rule() {
        let r = InvariantReport::new("x", vec![0.0, 1.0], vec![], vec![1e-9, 2e-9], 2e-9);
        assert!(r.passed);
        assert_eq!(r.max_residual, 2e-9);
        let r = InvariantReport::new("x", vec![0.0], vec![], vec![f64::NAN], 1.0);
        assert!(!r.passed);
        let empty = InvariantReport::new("x", vec![], vec![], vec![], 0.0);
        assert!(empty.passed);
    }

    #[test]
    fn rescale_rejudges() {
        let r = InvariantReport::new("x", vec![0.0], vec![], vec![3e-8], 1e-8);
        assert!(!r.passed);
        assert!(r.rescaled(10.0).passed);
    }

    #[test]
    fn slant_signature_validation() {
        assert!(SlantConfig::new(-1, 1).is_ok());
        assert!(SlantConfig::new(0, 1).is_err());
        assert_eq!(SlantConfig::default(), SlantConfig { eps1: -1, eps2: 1 });
    }

    #[test]
    fn salkowski_is_not_a_general_helix() {
        let n = 2.0 / 3f64.sqrt();
        let g = uniform_grid(0.5, 2.0, 16);
        let r = helix_ratio(&gamma(2.0), &g, DerivativeMethod::Analytic).unwrap();
        assert!(!r.passed);
        let expected = (1.0 / (0.5 * n).tanh()) - (1.0 / (2.0 * n).tanh());
        assert!((r.max_residual - expected).abs() < 1e-10);
        assert!(r.expect_varies("varies", 0.1).passed);
    }

    #[test]
    fn helix_fixture_is_a_general_helix() {
        let c = CurveSpec::helix(6f64.sqrt(), 2.0, 0.0, 10.0).unwrap();
        let r = helix_ratio(&c, &uniform_grid(0.5, 9.0, 20), DerivativeMethod::Analytic).unwrap();
        assert!(r.max_residual < 1e-10);
        let s = slant_invariant(&c, &uniform_grid(0.5, 9.0, 20), SlantConfig::default(), DerivativeMethod::Analytic).unwrap();
        assert!(s.value.unwrap().abs() < 1e-9);
    }

    #[test]
    fn slant_invariant_is_minus_m() {
        for m in [1.5, 2.0, 5.0] {
            let g = grid();
            let r = slant_invariant(&gamma(m), &g, SlantConfig::default(), DerivativeMethod::Analytic).unwrap();
            assert!(r.passed, "m = {m}: {}", r.max_residual);
            for v in &r.values {
                assert!((v + m).abs() < 1e-5, "m = {m}: {v}");
            }
        }
    }

    #[test]
    fn slant_rejects_negative_radicand() {
        // τ² − κ² > 0 on Salkowski curves, so (+1, −1) gives a negative radicand
        let r = slant_invariant(&gamma(2.0), &grid(), SlantConfig::new(1, -1).unwrap(), DerivativeMethod::Analytic);
        assert!(matches!(r, Err(CurveError::SignatureInvalid { .. })));
    }

    #[test]
    fn vertical_axis_angle() {
        let n = 2.0 / 3f64.sqrt();
        let r = fixed_axis_angle(&gamma(2.0), Vec3M::E3, &grid(), DerivativeMethod::Analytic).unwrap();
        assert!(r.max_residual < 1e-10);
        assert!((r.value.unwrap() - n).abs() < 1e-10);
        let fd = fixed_axis_angle(&gamma(2.0), Vec3M::E3, &grid(), DerivativeMethod::fd(1e-4)).unwrap();
        assert!(fd.passed);
        let other = fixed_axis_angle(&gamma(2.0), Vec3M::E2, &grid(), DerivativeMethod::Analytic).unwrap();
        assert!(!other.passed);
        let anti = fixed_axis_angle(&CurveSpec::anti_salkowski(2.0).unwrap(), Vec3M::E3, &grid(), DerivativeMethod::Analytic).unwrap();
        assert!(anti.max_residual < 1e-10);
        assert!(fixed_axis_angle(&gamma(2.0), Vec3M::E1, &grid(), DerivativeMethod::Analytic).is_err());
    }

    #[test]
    fn forward_intrinsic_equation() {
        for m in [2.0, 5.0] {
            let p = SalkowskiParams::new(m).unwrap();
            let r = lemma1_forward_check(&gamma(m), p.phi(), &grid(), DerivativeMethod::Analytic).unwrap();
            assert!(r.max_residual < 1e-8, "{}", r.max_residual);
        }
    }

    #[test]
    fn forward_check_calibrates_interpolated_salkowski() {
        let p = SalkowskiParams::new(2.0).unwrap();
        let samples = uniform_grid(0.2, 2.2, 200)
            .into_iter()
            .map(|t| (t, crate::families::salkowski_point(&p, t)))
            .collect();
        let tab = CurveSpec::tabulated(samples).unwrap();
        let r = lemma1_forward_check(&tab, p.phi(), &uniform_grid(0.4, 2.0, 12), DerivativeMethod::Analytic).unwrap();
        assert!(r.max_residual < 1e-5, "{}", r.max_residual);
        assert_eq!(r.note.as_deref(), Some("calibrated arc-length origin"));
    }

    #[test]
    fn forward_check_rejects_constant_torsion() {
        // κ = 1, τ = −√6/2 constant
        let c = CurveSpec::helix(6f64.sqrt(), 2.0, 0.0, 10.0).unwrap();
        let p = SalkowskiParams::new(2.0).unwrap();
        let r = lemma1_forward_check(&c, p.phi(), &uniform_grid(0.5, 9.0, 20), DerivativeMethod::Analytic).unwrap();
        assert!(r.max_residual > 0.1);
    }

    #[test]
    fn forward_check_needs_unit_curvature() {
        let p = SalkowskiParams::new(2.0).unwrap();
        let r = lemma1_forward_check(&CurveSpec::anti_salkowski(2.0).unwrap(), p.phi(), &grid(), DerivativeMethod::Analytic);
        assert!(matches!(r, Err(CurveError::CurvatureNotUnit { .. })));
    }

    #[test]
    fn converse_axis_branches() {
        let p = SalkowskiParams::new(2.0).unwrap();
        let good = lemma1_converse_axis(&gamma(2.0), p.phi(), 1, &grid(), DerivativeMethod::Analytic).unwrap();
        assert!(good.max_residual < 1e-7, "{}", good.max_residual);
        assert!(good.values.iter().all(|x3| (x3 - 1.0).abs() < 1e-9));
        let bad = lemma1_converse_axis(&gamma(2.0), p.phi(), -1, &grid(), DerivativeMethod::Analytic).unwrap();
        assert!(bad.max_residual > 1e-2);
        let single = lemma1_converse_axis(&gamma(2.0), p.phi(), 1, &[1.0], DerivativeMethod::Analytic).unwrap();
        assert!(single.passed);
        assert!(single.note.unwrap().contains("insufficient"));
        assert!(lemma1_converse_axis(&gamma(2.0), p.phi(), 0, &grid(), DerivativeMethod::Analytic).is_err());
    }

    #[test]
    fn closed_form_checks_pass() {
        for m in [1.5, 2.0, 5.0] {
            let p = SalkowskiParams::new(m).unwrap();
            assert!(closed_form_frame_check(&p, &grid()).unwrap().max_residual < 1e-10);
            assert!(closed_form_frenet_check(&p, &grid()).unwrap().passed);
            assert!(torsion_law_check(&p, &grid()).unwrap().passed);
            assert!(family_invariants_check(&gamma(m), &grid(), DerivativeMethod::fd(1e-4)).unwrap().passed);
            assert!(frame_agreement(&gamma(m), &grid(), DerivativeMethod::fd(1e-4)).unwrap().passed);
        }
    }

    #[test]
    fn decomposed_axis_is_vertical() {
        let p = SalkowskiParams::new(5.0).unwrap();
        let r = axis_decomposition_check(&p, &grid(), 1).unwrap();
        assert!(r.max_residual < 1e-10);
        assert!(r.values.iter().all(|x3| (x3 - 1.0).abs() < 1e-10));
    }

    #[test]
    fn translation_match_ignores_offset() {
        let a = vec![Vec3M::new(1.0, 2.0, 3.0), Vec3M::new(2.0, 2.0, 3.0)];
        let b: Vec<Vec3M> = a.iter().map(|v| *v + Vec3M::new(5.0, -1.0, 0.5)).collect();
        assert!(translation_match("t", &a, &b, &[0.0, 1.0], 1e-12).passed);
    }
}
