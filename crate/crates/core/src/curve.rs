//! Parametric curves: the two closed-form families, a circular helix fixture,
//! tabulated samples, and curves produced by the normalizing transforms.
//!
//! Every kind exposes exact derivatives of any order it can support. For
//! tabulated curves those are the derivatives of a local interpolating
//! polynomial; for transformed curves they are pushed through truncated
//! Taylor series of the base curve.

use serde::{Deserialize, Serialize};

use crate::error::{CurveError, Result};
use crate::families::{
    anti_salkowski_derivative, anti_salkowski_point, family_tangent, family_tangent_difference,
    salkowski_derivative, salkowski_point, SalkowskiParams,
};
use crate::lorentz::{is_near_null, Vec3M};
use crate::quadrature::Simpson;
use crate::series::{Series, VecSeries};
use crate::tolerance::{
    DEFAULT_T_MAX, DEFAULT_T_MIN, KAPPA_MIN, TABULATED_MIN_SAMPLES, TABULATED_WINDOW, TAU_MIN,
};
use crate::transforms::TransformKind;

/// Closed parameter interval `[start, end]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Domain {
    pub start: f64,
    pub end: f64,
}

impl Domain {
    pub fn new(start: f64, end: f64) -> Result<Self> {
        if !(start.is_finite() && end.is_finite() && start <= end) {
            return Err(CurveError::InvalidParameter(format!(
                "domain [{start}, {end}] is not an ordered finite interval"
            )));
        }
        Ok(Domain { start, end })
    }

    pub fn contains(&self, t: f64) -> bool {
        t >= self.start && t <= self.end
    }

    /// Errors unless `[lo, hi]` lies inside the domain.
    pub fn require(&self, lo: f64, hi: f64) -> Result<()> {
        if lo >= self.start && hi <= self.end {
            Ok(())
        } else {
            Err(CurveError::DomainTooSmall { lo, hi, start: self.start, end: self.end })
        }
    }

    pub fn len(&self) -> f64 {
        self.end - self.start
    }

    pub fn is_empty(&self) -> bool {
        self.end == self.start
    }
}

/// `(c·t, r·cos t, r·sin t)` with `c > r > 0`: a time-like circular helix with
/// `κ = r/(c² − r²)` and `τ = −c/(c² − r²)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TimelikeHelix {
    pub c: f64,
    pub r: f64,
}

impl TimelikeHelix {
    pub fn new(c: f64, r: f64) -> Result<Self> {
        if !(r > 0.0 && c > r && c.is_finite()) {
            return Err(CurveError::InvalidParameter(format!(
                "helix needs c > r > 0 (got c = {c}, r = {r})"
            )));
        }
        Ok(TimelikeHelix { c, r })
    }

    pub fn curvature(&self) -> f64 {
        self.r / (self.c * self.c - self.r * self.r)
    }

    pub fn torsion(&self) -> f64 {
        -self.c / (self.c * self.c - self.r * self.r)
    }

    fn derivative(&self, t: f64, order: usize) -> Vec3M {
        let phase = t + order as f64 * std::f64::consts::FRAC_PI_2;
        let lin = match order {
            0 => self.c * t,
            1 => self.c,
            _ => 0.0,
        };
        Vec3M::new(lin, self.r * phase.cos(), self.r * phase.sin())
    }
}

/// Samples `(t_i, x_i)` with strictly increasing `t_i`.
///
/// Values and derivatives come from the polynomial through the
/// [`TABULATED_WINDOW`] samples around the query (fewer when the table is
/// short). The window only changes at sample points, so the interpolant is
/// smooth between consecutive samples.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Tabulated {
    ts: Vec<f64>,
    xs: Vec<Vec3M>,
    window: usize,
}

impl Tabulated {
    pub fn new(samples: Vec<(f64, Vec3M)>) -> Result<Self> {
        if samples.len() < TABULATED_MIN_SAMPLES {
            return Err(CurveError::InvalidParameter(format!(
                "tabulated curve needs at least {TABULATED_MIN_SAMPLES} samples (got {})",
                samples.len()
            )));
        }
        for w in samples.windows(2) {
            if !(w[1].0 > w[0].0) {
                return Err(CurveError::InvalidParameter(format!(
                    "sample parameters must increase strictly ({} then {})",
                    w[0].0, w[1].0
                )));
            }
        }
        if samples.iter().any(|(t, x)| !t.is_finite() || !x.is_finite()) {
            return Err(CurveError::NonFinite);
        }
        let window = TABULATED_WINDOW.min(samples.len());
        let (ts, xs) = samples.into_iter().unzip();
        Ok(Tabulated { ts, xs, window })
    }

    pub fn params(&self) -> &[f64] {
        &self.ts
    }

    pub fn points(&self) -> &[Vec3M] {
        &self.xs
    }

    pub fn len(&self) -> usize {
        self.ts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ts.is_empty()
    }

    fn max_order(&self) -> usize {
        self.window - 1
    }

    fn window_start(&self, t: f64) -> usize {
        let n = self.ts.len();
        let i = self.ts.partition_point(|&s| s <= t).saturating_sub(1).min(n - 2);
        (i + 1).saturating_sub(self.window / 2).min(n - self.window)
    }

    /// Orders `0..=max_order` at `u` from the window selected by `center`.
    fn eval(&self, center: f64, u: f64, max_order: usize) -> Vec<Vec3M> {
        let lo = self.window_start(center);
        let nodes = &self.ts[lo..lo + self.window];
        let w = fornberg_weights(u, nodes, max_order);
        (0..=max_order)
            .map(|k| {
                nodes
                    .iter()
                    .enumerate()
                    .fold(Vec3M::ZERO, |acc, (i, _)| acc + self.xs[lo + i] * w[i][k])
            })
            .collect()
    }
}

/// Finite-difference weights for derivatives `0..=max_order` at `z` on
/// arbitrary `nodes` (Fornberg's recursion). `w[i][k]` multiplies `f(nodes[i])`
/// in the order-`k` derivative.
pub(crate) fn fornberg_weights(z: f64, nodes: &[f64], max_order: usize) -> Vec<Vec<f64>> {
    let n = nodes.len();
    let mut c = vec![vec![0.0; max_order + 1]; n];
    let mut c1 = 1.0;
    let mut c4 = nodes[0] - z;
    c[0][0] = 1.0;
    for i in 1..n {
        let mn = i.min(max_order);
        let mut c2 = 1.0;
        let c5 = c4;
        c4 = nodes[i] - z;
        for j in 0..i {
            let c3 = nodes[i] - nodes[j];
            c2 *= c3;
            if j == i - 1 {
                for k in (1..=mn).rev() {
                    c[i][k] = c1 * (k as f64 * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
                }
                c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
            }
            for k in (1..=mn).rev() {
                c[j][k] = (c4 * c[j][k] - k as f64 * c[j][k - 1]) / c3;
            }
            c[j][0] = c4 * c[j][0] / c3;
        }
        c1 = c2;
    }
    c
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum CurveKind {
    Salkowski(SalkowskiParams),
    AntiSalkowski(SalkowskiParams),
    Helix(TimelikeHelix),
    Tabulated(Tabulated),
    /// `β(t) = ∫_origin^t T_base(u)·w(u) du` with `w = |B'_base|` or `|T'_base|`.
    Transformed { transform: TransformKind, base: Box<CurveSpec>, origin: f64 },
}

/// A curve together with the parameter interval it is evaluated on.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CurveSpec {
    kind: CurveKind,
    domain: Domain,
}

impl CurveSpec {
    /// `γ_m` on the default domain `[1e-3, 3]`.
    pub fn salkowski(m: f64) -> Result<Self> {
        Ok(CurveSpec {
            kind: CurveKind::Salkowski(SalkowskiParams::new(m)?),
            domain: Domain::new(DEFAULT_T_MIN, DEFAULT_T_MAX)?,
        })
    }

    /// `β_m` on the default domain `[1e-3, 3]`.
    pub fn anti_salkowski(m: f64) -> Result<Self> {
        Ok(CurveSpec {
            kind: CurveKind::AntiSalkowski(SalkowskiParams::new(m)?),
            domain: Domain::new(DEFAULT_T_MIN, DEFAULT_T_MAX)?,
        })
    }

    pub fn helix(c: f64, r: f64, start: f64, end: f64) -> Result<Self> {
        Ok(CurveSpec { kind: CurveKind::Helix(TimelikeHelix::new(c, r)?), domain: Domain::new(start, end)? })
    }

    /// Tabulated samples; the domain spans the first to the last sample.
    pub fn tabulated(samples: Vec<(f64, Vec3M)>) -> Result<Self> {
        let tab = Tabulated::new(samples)?;
        let domain = Domain::new(tab.ts[0], tab.ts[tab.ts.len() - 1])?;
        Ok(CurveSpec { kind: CurveKind::Tabulated(tab), domain })
    }

    pub(crate) fn transformed(transform: TransformKind, base: CurveSpec) -> CurveSpec {
        let domain = base.domain;
        CurveSpec {
            kind: CurveKind::Transformed { transform, base: Box::new(base), origin: domain.start },
            domain,
        }
    }

    /// Restricts or moves the evaluation interval.
    pub fn with_domain(mut self, start: f64, end: f64) -> Result<Self> {
        let d = Domain::new(start, end)?;
        match &self.kind {
            CurveKind::Salkowski(_) | CurveKind::AntiSalkowski(_) if !(start > 0.0) => {
                return Err(CurveError::InvalidParameter(format!(
                    "closed-form families need a domain with t > 0 (got start = {start})"
                )));
            }
            CurveKind::Tabulated(tab) if start < tab.ts[0] || end > tab.ts[tab.ts.len() - 1] => {
                return Err(CurveError::InvalidParameter(
                    "domain exceeds the tabulated range".into(),
                ));
            }
            CurveKind::Transformed { base, .. } if start < base.domain.start || end > base.domain.end => {
                return Err(CurveError::InvalidParameter(
                    "domain exceeds the base curve's domain".into(),
                ));
            }
            _ => {}
        }
        self.domain = d;
        Ok(self)
    }

    pub fn kind(&self) -> &CurveKind {
        &self.kind
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    /// Family parameters when the curve is one of the closed-form families.
    pub fn family_params(&self) -> Option<SalkowskiParams> {
        match self.kind {
            CurveKind::Salkowski(p) | CurveKind::AntiSalkowski(p) => Some(p),
            _ => None,
        }
    }

    /// Highest derivative order available exactly, `None` when unbounded.
    pub fn max_exact_order(&self) -> Option<usize> {
        match &self.kind {
            CurveKind::Salkowski(_) | CurveKind::AntiSalkowski(_) | CurveKind::Helix(_) => None,
            CurveKind::Tabulated(tab) => Some(tab.max_order()),
            CurveKind::Transformed { base, .. } => {
                base.max_exact_order().map(|k| k.saturating_sub(2))
            }
        }
    }

    /// `α(t)`.
    pub fn position(&self, t: f64) -> Result<Vec3M> {
        match &self.kind {
            CurveKind::Salkowski(p) => Ok(salkowski_point(p, t)),
            CurveKind::AntiSalkowski(p) => Ok(anti_salkowski_point(p, t)),
            CurveKind::Helix(h) => Ok(h.derivative(t, 0)),
            CurveKind::Tabulated(tab) => Ok(tab.eval(t, t, 0)[0]),
            CurveKind::Transformed { origin, .. } => self.displacement(*origin, t),
        }
    }

    /// Exact derivatives `[α'(t), α''(t), ..., α^(order)(t)]`.
    pub fn derivatives(&self, t: f64, order: usize) -> Result<Vec<Vec3M>> {
        self.derivatives_near(t, t, order)
    }

    /// Positions over a grid. Integrated curves accumulate along a sorted grid
    /// instead of integrating from the origin for every point.
    pub fn sample(&self, grid: &[f64]) -> Result<Vec<Vec3M>> {
        let CurveKind::Transformed { origin, .. } = &self.kind else {
            return grid.iter().map(|&t| self.position(t)).collect();
        };
        let sorted = grid.windows(2).all(|w| w[0] <= w[1]);
        let mut out: Vec<Vec3M> = Vec::with_capacity(grid.len());
        let mut last = (*origin, Vec3M::ZERO);
        for &t in grid {
            let base = if sorted { last } else { (*origin, Vec3M::ZERO) };
            let x = base.1 + self.displacement(base.0, t)?;
            last = (t, x);
            out.push(x);
        }
        Ok(out)
    }

    /// `α'(t)`.
    pub fn velocity(&self, t: f64) -> Result<Vec3M> {
        Ok(self.derivatives_near(t, t, 1)?[0])
    }

    /// Like [`derivatives`](Self::derivatives) at `u`, with any local
    /// interpolation window chosen around `center`.
    pub(crate) fn derivatives_near(&self, center: f64, u: f64, order: usize) -> Result<Vec<Vec3M>> {
        if let Some(max) = self.max_exact_order() {
            if order > max {
                return Err(CurveError::DerivativeUnavailable { order });
            }
        }
        match &self.kind {
            CurveKind::Salkowski(p) => Ok((1..=order).map(|k| salkowski_derivative(p, u, k)).collect()),
            CurveKind::AntiSalkowski(p) => {
                Ok((1..=order).map(|k| anti_salkowski_derivative(p, u, k)).collect())
            }
            CurveKind::Helix(h) => Ok((1..=order).map(|k| h.derivative(u, k)).collect()),
            CurveKind::Tabulated(tab) => Ok(tab.eval(center, u, order).split_off(1)),
            CurveKind::Transformed { transform, base, .. } => {
                transformed_derivatives(*transform, base, center, u, order)
            }
        }
    }

    /// Closed-form unit tangent and its central difference `T(t+h) − T(t−h)`,
    /// when the curve provides them.
    pub(crate) fn tangent_stencil(&self, t: f64, h: f64) -> Option<(Vec3M, Vec3M)> {
        match &self.kind {
            CurveKind::Salkowski(p) | CurveKind::AntiSalkowski(p) => {
                Some((family_tangent(p, t), family_tangent_difference(p, t, h)))
            }
            _ => None,
        }
    }

    /// Parameters inside `(a, b)` where the local representation switches.
    pub(crate) fn breakpoints(&self, a: f64, b: f64) -> Vec<f64> {
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        let mut pts: Vec<f64> = match &self.kind {
            CurveKind::Tabulated(tab) => tab.ts.iter().copied().filter(|&s| s > lo && s < hi).collect(),
            CurveKind::Transformed { base, .. } => base.breakpoints(lo, hi),
            _ => Vec::new(),
        };
        if a > b {
            pts.reverse();
        }
        pts
    }

    /// `[a, breakpoints..., b]`.
    pub(crate) fn pieces(&self, a: f64, b: f64) -> Vec<f64> {
        let mut pts = Vec::with_capacity(2);
        pts.push(a);
        pts.extend(self.breakpoints(a, b));
        pts.push(b);
        pts
    }

    /// `α(b) − α(a)` as the integral of the velocity.
    pub fn displacement(&self, a: f64, b: f64) -> Result<Vec3M> {
        if a == b {
            return Ok(Vec3M::ZERO);
        }
        self.domain.require(a.min(b), a.max(b))?;
        Simpson::default().integrate_pieces(
            |center, u| Ok(self.derivatives_near(center, u, 1)?[0]),
            &self.pieces(a, b),
        )
    }
}

/// Closed-form weight series for the families: the jet formula for torsion is
/// badly conditioned near `t = 0`, where `γ_m` stops being regular.
fn family_weight(transform: TransformKind, base: &CurveSpec, u: f64, len: usize) -> Option<Series> {
    let one = || {
        let mut c = vec![0.0; len];
        c[0] = 1.0;
        Series(c)
    };
    let ratio = |p: &SalkowskiParams, cosh_over_sinh: bool| {
        let c = Series::hyperbolic(p.n(), u, len, true);
        let s = Series::hyperbolic(p.n(), u, len, false);
        if cosh_over_sinh { c.div(&s) } else { s.div(&c) }
    };
    match (transform, &base.kind) {
        (TransformKind::TorsionNormalizing, CurveKind::Salkowski(p)) => Some(ratio(p, true)),
        (TransformKind::CurvatureNormalizing, CurveKind::AntiSalkowski(p)) => Some(ratio(p, false)),
        (TransformKind::CurvatureNormalizing, CurveKind::Salkowski(_))
        | (TransformKind::TorsionNormalizing, CurveKind::AntiSalkowski(_)) => Some(one()),
        _ => None,
    }
}

/// `count` uniformly spaced parameters from `a` to `b` inclusive.
pub fn uniform_grid(a: f64, b: f64, count: usize) -> Vec<f64> {
    match count {
        0 => Vec::new(),
        1 => vec![a],
        _ => {
            let step = (b - a) / (count - 1) as f64;
            (0..count).map(|i| if i + 1 == count { b } else { a + step * i as f64 }).collect()
        }
    }
}

/// Derivatives of a transformed curve at `u`, orders `1..=order`.
///
/// The velocity is `α'·|τ_α|` (torsion-normalizing) or `α'·κ_α`
/// (curvature-normalizing), since `T_α·|B'_α| = α'|τ_α|` and `T_α·|T'_α| = α'κ_α`.
fn transformed_derivatives(
    transform: TransformKind,
    base: &CurveSpec,
    center: f64,
    u: f64,
    order: usize,
) -> Result<Vec<Vec3M>> {
    if order == 0 {
        return Ok(Vec::new());
    }
    // velocity series needs terms 0..order-1
    let len = order;
    let d = base.derivatives_near(center, u, order + 2)?;
    let shifted = |first: usize| VecSeries::from_derivatives(&d[first..first + len]);
    let v1 = shifted(0);
    let v2 = shifted(1);
    let v3 = shifted(2);
    let vv = v1.inner(&v1);
    if !(vv.value() < 0.0) || is_near_null(d[0]) {
        return Err(CurveError::NotTimeLike { t: u });
    }
    if let Some(weight) = family_weight(transform, base, u, len) {
        return Ok(v1.mul_scalar(&weight).derivatives());
    }
    let cross = v1.cross(&v2);
    let cc = cross.inner(&cross);
    let weight = match transform {
        TransformKind::TorsionNormalizing => {
            if !(cc.value() > 0.0) {
                return Err(CurveError::VanishingCurvature { t: u, kappa: 0.0 });
            }
            let tau = v3.inner(&cross).div(&cc);
            if !(tau.value().abs() >= TAU_MIN) {
                return Err(CurveError::TorsionVanishes { t: u });
            }
            tau.abs()
        }
        TransformKind::CurvatureNormalizing => {
            let speed = vv.scale(-1.0).sqrt();
            let speed3 = speed.mul(&speed).mul(&speed);
            let kappa = cc.sqrt().div(&speed3);
            if !(kappa.value() >= KAPPA_MIN) {
                return Err(CurveError::CurvatureVanishes { t: u });
            }
            kappa
        }
    };
    Ok(v1.mul_scalar(&weight).derivatives())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fornberg_reproduces_polynomials() {
        let nodes = [0.0, 0.3, 0.7, 1.2, 1.5, 2.1];
        let f = |x: f64| 1.0 - 2.0 * x + 0.5 * x.powi(3) - 0.1 * x.powi(5);
        let df = |x: f64| -2.0 + 1.5 * x * x - 0.5 * x.powi(4);
        let d2f = |x: f64| 3.0 * x - 2.0 * x.powi(3);
        let z = 0.9;
        let w = fornberg_weights(z, &nodes, 2);
        let apply = |k: usize| nodes.iter().enumerate().map(|(i, &x)| w[i][k] * f(x)).sum::<f64>();
        assert!((apply(0) - f(z)).abs() < 1e-12);
        assert!((apply(1) - df(z)).abs() < 1e-11);
        assert!((apply(2) - d2f(z)).abs() < 1e-10);
    }

    #[test]
    fn fornberg_central_stencil() {
        let w = fornberg_weights(0.0, &[-1.0, 0.0, 1.0], 2);
        assert!((w[0][1] + 0.5).abs() < 1e-15 && w[1][1].abs() < 1e-15 && (w[2][1] - 0.5).abs() < 1e-15);
        assert!((w[0][2] - 1.0).abs() < 1e-15 && (w[1][2] + 2.0).abs() < 1e-15);
    }

    fn line(n: usize) -> CurveSpec {
        let w = Vec3M::new(2.0, 0.5, -0.25);
        CurveSpec::tabulated((0..n).map(|i| (i as f64 * 0.1, w * (i as f64 * 0.1))).collect()).unwrap()
    }

    #[test]
    fn tabulated_validation() {
        let s = |n: usize| (0..n).map(|i| (i as f64, Vec3M::ZERO)).collect::<Vec<_>>();
        assert!(CurveSpec::tabulated(s(4)).is_err());
        assert!(CurveSpec::tabulated(s(5)).is_ok());
        let mut bad = s(6);
        bad[3].0 = bad[2].0;
        assert!(CurveSpec::tabulated(bad).is_err());
    }

    #[test]
    fn tabulated_line_derivatives() {
        let c = line(20);
        let d = c.derivatives(0.73, 3).unwrap();
        assert!((d[0] - Vec3M::new(2.0, 0.5, -0.25)).max_abs() < 1e-10);
        assert!(d[1].max_abs() < 1e-7);
        assert!(d[2].max_abs() < 1e-5);
        assert!(c.derivatives(0.5, 11).is_err());
    }

    #[test]
    fn tabulated_window_is_smooth_between_samples() {
        let c = line(30);
        if let CurveKind::Tabulated(tab) = c.kind() {
            assert_eq!(tab.window_start(1.01), tab.window_start(1.09));
            assert_eq!(tab.window_start(0.0), 0);
            assert_eq!(tab.window_start(2.9), 30 - 11);
        }
    }

    #[test]
    fn tabulated_interpolates_salkowski() {
        let p = SalkowskiParams::new(2.0).unwrap();
        let samples: Vec<_> = (0..64)
            .map(|i| {
                let t = 0.1 + 1.9 * i as f64 / 63.0;
                (t, salkowski_point(&p, t))
            })
            .collect();
        let c = CurveSpec::tabulated(samples).unwrap();
        for t in [0.15, 0.77, 1.5, 1.98] {
            assert!((c.position(t).unwrap() - salkowski_point(&p, t)).max_abs() < 1e-10);
            let v = c.velocity(t).unwrap();
            assert!((v - salkowski_derivative(&p, t, 1)).max_abs() < 1e-8);
        }
    }

    #[test]
    fn helix_derivatives() {
        let c = CurveSpec::helix(3.0, 1.0, 0.0, 10.0).unwrap();
        let d = c.derivatives(0.4, 3).unwrap();
        assert!((d[0] - Vec3M::new(3.0, -(0.4f64).sin(), (0.4f64).cos())).max_abs() < 1e-15);
        assert!((d[2] - Vec3M::new(0.0, (0.4f64).sin(), -(0.4f64).cos())).max_abs() < 1e-15);
        assert!(CurveSpec::helix(1.0, 1.0, 0.0, 1.0).is_err());
    }

    #[test]
    fn family_domain_rules() {
        let c = CurveSpec::salkowski(2.0).unwrap();
        assert_eq!(c.domain(), Domain { start: 1e-3, end: 3.0 });
        assert!(c.clone().with_domain(0.0, 1.0).is_err());
        assert!(c.with_domain(0.5, 4.0).is_ok());
        assert!(CurveSpec::salkowski(1.0).is_err());
        assert!(CurveSpec::salkowski(0.5).is_err());
    }
}
