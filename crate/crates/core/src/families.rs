//! Closed-form time-like Salkowski and anti-Salkowski curves.
//!
//! With `m > 1` and `n = m / sqrt(m² - 1)`, the Salkowski curve `γ_m` is
//!
//! ```text
//! γ_m(t) = n/(4m) · ( a·cosh((1+2n)t) − b·cosh((1−2n)t) + 2·cosh t,
//!                     a·sinh((1+2n)t) − b·sinh((1−2n)t) + 2·sinh t,
//!                     cosh(2nt)/m )
//! a = (n−1)/(1+2n),   b = (1+n)/(1−2n)
//! ```
//!
//! and the anti-Salkowski curve `β_m` is
//!
//! ```text
//! β_m(t) = n/(4m) · ( a·sinh((1+2n)t) − b'·sinh((1−2n)t) + 2n·sinh t,
//!                     a·cosh((1+2n)t) − b'·cosh((1−2n)t) + 2n·cosh t,
//!                     (sinh(2nt) + 2nt)/m )
//! b' = (n+1)/(2n−1)
//! ```
//!
//! Both are time-like for `t > 0` and share the Frenet frame
//!
//! ```text
//! T = (n cosh t cosh nt − sinh t sinh nt, n sinh t cosh nt − cosh t sinh nt, (n/m) cosh nt)
//! N = (n/m)(cosh t, sinh t, m)
//! B = (sinh t cosh nt − n cosh t sinh nt, cosh t cosh nt − n sinh t sinh nt, −(n/m) sinh nt)
//! ```
//!
//! `γ_m` has `κ = 1`, `τ = coth(nt)`, speed `sinh(nt)/sqrt(m²−1)` and
//! arc-length `s = cosh(nt)/m` measured from `t = 0`. `β_m` has `κ = tanh(nt)`
//! and `τ = 1`. The normal makes the constant hyperbolic angle `φ = arccosh(n)`
//! with the space-like axis `(0, 0, 1)`.

use serde::{Deserialize, Serialize};

use crate::error::{CurveError, Result};
use crate::frenet::Frame;
use crate::lorentz::Vec3M;
use crate::tolerance::REGULARITY_EPS;

/// Family parameter `m` with the derived `n` and `φ`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SalkowskiParams {
    m: f64,
    n: f64,
    phi: f64,
}

impl SalkowskiParams {
    pub fn new(m: f64) -> Result<Self> {
        if !(m.is_finite() && m > 1.0) {
            return Err(CurveError::InvalidParameter(format!("m must exceed 1 (got {m})")));
        }
        let n = m / (m * m - 1.0).sqrt();
        Ok(SalkowskiParams { m, n, phi: n.acosh() })
    }

    pub fn m(&self) -> f64 {
        self.m
    }

    pub fn n(&self) -> f64 {
        self.n
    }

    /// Hyperbolic angle between the normal and the fixed axis.
    pub fn phi(&self) -> f64 {
        self.phi
    }

    /// `n / m = 1 / sqrt(m² − 1)`.
    fn n_over_m(&self) -> f64 {
        self.n / self.m
    }
}

#[derive(Debug, Clone, Copy)]
enum Basis {
    Cosh,
    Sinh,
    Linear,
}

/// `coef · basis(rate · t)`, or `coef · t` for the linear basis.
#[derive(Debug, Clone, Copy)]
struct Term {
    coef: f64,
    rate: f64,
    basis: Basis,
}

impl Term {
    const NONE: Term = Term { coef: 0.0, rate: 0.0, basis: Basis::Linear };

    fn cosh(coef: f64, rate: f64) -> Term {
        Term { coef, rate, basis: Basis::Cosh }
    }

    fn sinh(coef: f64, rate: f64) -> Term {
        Term { coef, rate, basis: Basis::Sinh }
    }

    fn derivative(&self, t: f64, order: usize) -> f64 {
        match self.basis {
            Basis::Linear => match order {
                0 => self.coef * t,
                1 => self.coef,
                _ => 0.0,
            },
            Basis::Cosh | Basis::Sinh => {
                let x = self.rate * t;
                let even = order % 2 == 0;
                let f = match (self.basis, even) {
                    (Basis::Cosh, true) | (Basis::Sinh, false) => x.cosh(),
                    _ => x.sinh(),
                };
                self.coef * self.rate.powi(order as i32) * f
            }
        }
    }
}

impl Term {
    /// `f(t + h) − f(t − h)` without subtracting nearby values.
    fn central_difference(&self, t: f64, h: f64) -> f64 {
        match self.basis {
            Basis::Linear => 2.0 * self.coef * h,
            Basis::Cosh => 2.0 * self.coef * (self.rate * t).sinh() * (self.rate * h).sinh(),
            Basis::Sinh => 2.0 * self.coef * (self.rate * t).cosh() * (self.rate * h).sinh(),
        }
    }
}

type Components = [[Term; 3]; 3];

fn eval(comps: &Components, t: f64, order: usize) -> Vec3M {
    let c = |k: usize| comps[k].iter().map(|term| term.derivative(t, order)).sum::<f64>();
    Vec3M::new(c(0), c(1), c(2))
}

fn salkowski_components(p: &SalkowskiParams) -> Components {
    let (m, n) = (p.m, p.n);
    let c = n / (4.0 * m);
    let a = c * (n - 1.0) / (1.0 + 2.0 * n);
    let b = c * (1.0 + n) / (1.0 - 2.0 * n);
    let (r1, r2) = (1.0 + 2.0 * n, 1.0 - 2.0 * n);
    [
        [Term::cosh(a, r1), Term::cosh(-b, r2), Term::cosh(2.0 * c, 1.0)],
        [Term::sinh(a, r1), Term::sinh(-b, r2), Term::sinh(2.0 * c, 1.0)],
        [Term::cosh(c / m, 2.0 * n), Term::NONE, Term::NONE],
    ]
}

fn anti_salkowski_components(p: &SalkowskiParams) -> Components {
    let (m, n) = (p.m, p.n);
    let c = n / (4.0 * m);
    let a = c * (n - 1.0) / (2.0 * n + 1.0);
    let b = c * (n + 1.0) / (2.0 * n - 1.0);
    let (r1, r2) = (1.0 + 2.0 * n, 1.0 - 2.0 * n);
    [
        [Term::sinh(a, r1), Term::sinh(-b, r2), Term::sinh(2.0 * n * c, 1.0)],
        [Term::cosh(a, r1), Term::cosh(-b, r2), Term::cosh(2.0 * n * c, 1.0)],
        [
            Term::sinh(c / m, 2.0 * n),
            Term { coef: 2.0 * n * c / m, rate: 0.0, basis: Basis::Linear },
            Term::NONE,
        ],
    ]
}

/// The shared unit tangent as sums of hyperbolic terms:
/// `T = ((n−1)/2·cosh((1+n)t) + (n+1)/2·cosh((1−n)t), (n−1)/2·sinh((1+n)t) + (n+1)/2·sinh((1−n)t), (n/m) cosh nt)`.
fn tangent_components(p: &SalkowskiParams) -> Components {
    let n = p.n;
    let (a, b) = (0.5 * (n - 1.0), 0.5 * (n + 1.0));
    let (r1, r2) = (1.0 + n, 1.0 - n);
    [
        [Term::cosh(a, r1), Term::cosh(b, r2), Term::NONE],
        [Term::sinh(a, r1), Term::sinh(b, r2), Term::NONE],
        [Term::cosh(p.n_over_m(), n), Term::NONE, Term::NONE],
    ]
}

/// Unit tangent shared by `γ_m` and `β_m`.
pub(crate) fn family_tangent(p: &SalkowskiParams, t: f64) -> Vec3M {
    eval(&tangent_components(p), t, 0)
}

/// `T(t + h) − T(t − h)` for the shared tangent, accurate to rounding
/// relative to the difference itself.
pub(crate) fn family_tangent_difference(p: &SalkowskiParams, t: f64, h: f64) -> Vec3M {
    let comps = tangent_components(p);
    let c = |k: usize| comps[k].iter().map(|term| term.central_difference(t, h)).sum::<f64>();
    Vec3M::new(c(0), c(1), c(2))
}

/// `γ_m(t)`.
pub fn salkowski_point(p: &SalkowskiParams, t: f64) -> Vec3M {
    eval(&salkowski_components(p), t, 0)
}

/// `d^order γ_m / dt^order`, exact for every order.
pub fn salkowski_derivative(p: &SalkowskiParams, t: f64, order: usize) -> Vec3M {
    eval(&salkowski_components(p), t, order)
}

/// `β_m(t)`.
pub fn anti_salkowski_point(p: &SalkowskiParams, t: f64) -> Vec3M {
    eval(&anti_salkowski_components(p), t, 0)
}

/// `d^order β_m / dt^order`, exact for every order.
pub fn anti_salkowski_derivative(p: &SalkowskiParams, t: f64, order: usize) -> Vec3M {
    eval(&anti_salkowski_components(p), t, order)
}

/// Closed-form Frenet frame shared by `γ_m` and `β_m`.
pub fn salkowski_frame(p: &SalkowskiParams, t: f64) -> Result<Frame> {
    if !(t.abs() > REGULARITY_EPS) {
        return Err(CurveError::DegenerateAt0 { t });
    }
    let (n, k) = (p.n, p.n_over_m());
    let (ch, sh) = (t.cosh(), t.sinh());
    let (chn, shn) = ((n * t).cosh(), (n * t).sinh());
    Ok(Frame {
        tangent: Vec3M::new(n * ch * chn - sh * shn, n * sh * chn - ch * shn, k * chn),
        normal: Vec3M::new(k * ch, k * sh, n),
        binormal: Vec3M::new(sh * chn - n * ch * shn, ch * chn - n * sh * shn, -k * shn),
    })
}

/// `d/dt` of each closed-form frame vector.
pub fn salkowski_frame_derivative(p: &SalkowskiParams, t: f64) -> Result<Frame> {
    if !(t.abs() > REGULARITY_EPS) {
        return Err(CurveError::DegenerateAt0 { t });
    }
    let (n, k) = (p.n, p.n_over_m());
    let n2 = n * n;
    let (ch, sh) = (t.cosh(), t.sinh());
    let (chn, shn) = ((n * t).cosh(), (n * t).sinh());
    Ok(Frame {
        tangent: Vec3M::new((n2 - 1.0) * ch * shn, (n2 - 1.0) * sh * shn, n * k * shn),
        normal: Vec3M::new(k * sh, k * ch, 0.0),
        binormal: Vec3M::new((1.0 - n2) * ch * chn, (1.0 - n2) * sh * chn, -n * k * chn),
    })
}

/// Max-norm residuals of the arc-length Frenet equations
/// `T' = κN`, `N' = κT + τB`, `B' = −τN`, using closed-form frame derivatives.
pub fn salkowski_frenet_residuals(p: &SalkowskiParams, t: f64) -> Result<(f64, f64, f64)> {
    let f = salkowski_frame(p, t)?;
    let d = salkowski_frame_derivative(p, t)?;
    let v = salkowski_speed(p, t);
    let (kappa, tau) = salkowski_invariants(p, t)?;
    let r_t = (d.tangent / v - f.normal * kappa).max_abs();
    let r_n = (d.normal / v - f.tangent * kappa - f.binormal * tau).max_abs();
    let r_b = (d.binormal / v + f.normal * tau).max_abs();
    Ok((r_t, r_n, r_b))
}

/// `|γ_m'(t)| = sinh(nt)/sqrt(m²−1)`. Negative for `t < 0`; only `t > 0` is meaningful.
pub fn salkowski_speed(p: &SalkowskiParams, t: f64) -> f64 {
    (p.n * t).sinh() * p.n_over_m()
}

/// Arc-length `s = cosh(nt)/m`, measured with the origin used by the intrinsic equation.
pub fn salkowski_arclength(p: &SalkowskiParams, t: f64) -> f64 {
    (p.n * t).cosh() / p.m
}

/// `(κ, τ) = (1, coth(nt))`.
pub fn salkowski_invariants(p: &SalkowskiParams, t: f64) -> Result<(f64, f64)> {
    if !(t.abs() > REGULARITY_EPS) {
        return Err(CurveError::DegenerateAt0 { t });
    }
    Ok((1.0, 1.0 / (p.n * t).tanh()))
}

/// Torsion as a function of arc-length, `τ(s) = ms / sqrt(m²s² − 1)`, for `s > 1/m`.
pub fn salkowski_torsion_of_arclength(p: &SalkowskiParams, s: f64) -> f64 {
    let ms = p.m * s;
    ms / (ms * ms - 1.0).sqrt()
}

/// Speed of `β_m`: `(n/m) cosh(nt)`.
pub fn anti_salkowski_speed(p: &SalkowskiParams, t: f64) -> f64 {
    p.n_over_m() * (p.n * t).cosh()
}

/// Curvature and torsion of `β_m`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AntiSalkowskiInvariants {
    pub kappa: f64,
    pub tau: f64,
    /// Set for `t < 0`, where `tanh(nt)` is negative and `κ` is reported as its magnitude.
    pub orientation_flipped: bool,
}

/// `(κ, τ) = (|tanh(nt)|, 1)`.
pub fn anti_salkowski_invariants(p: &SalkowskiParams, t: f64) -> Result<AntiSalkowskiInvariants> {
    if !(t.abs() > REGULARITY_EPS) {
        return Err(CurveError::DegenerateAt0 { t });
    }
    let k = (p.n * t).tanh();
    Ok(AntiSalkowskiInvariants { kappa: k.abs(), tau: 1.0, orientation_flipped: k < 0.0 })
}

/// Coordinates of the fixed axis in the Frenet frame at one parameter value.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AxisDecomposition {
    /// Unit space-like axis.
    pub d: Vec3M,
    /// `<B, d>`.
    pub b: f64,
    /// Coefficient of `T`, equal to `τ·b`.
    pub coeff_t: f64,
    /// Coefficient of `N`, equal to `cosh φ`.
    pub coeff_n: f64,
}

/// Rebuilds the fixed axis `d = τb·T + cosh φ·N + b·B` from the frame at `t`,
/// with `b = −branch · sinh φ / sqrt(τ² − 1)`.
///
/// `branch = +1` is the positive sign of `τ = ±s/sqrt(s² − tanh²φ)`; for
/// `γ_m` it yields `d = (0, 0, 1)` at every `t`.
pub fn axis_decomposition(p: &SalkowskiParams, t: f64, branch: i8) -> Result<AxisDecomposition> {
    let sign = branch_sign(branch)?;
    let (_, tau) = salkowski_invariants(p, t)?;
    let frame = salkowski_frame(p, t)?;
    let radicand = tau * tau - 1.0;
    if !(radicand > 0.0) {
        return Err(CurveError::TorsionBranchInvalid { t, tau });
    }
    let b = -sign * p.phi.sinh() / radicand.sqrt();
    let coeff_t = tau * b;
    let coeff_n = p.phi.cosh();
    let d = frame.tangent * coeff_t + frame.normal * coeff_n + frame.binormal * b;
    Ok(AxisDecomposition { d, b, coeff_t, coeff_n })
}

pub(crate) fn branch_sign(branch: i8) -> Result<f64> {
    match branch {
        1 => Ok(1.0),
        -1 => Ok(-1.0),
        _ => Err(CurveError::InvalidParameter(format!("branch must be +1 or -1 (got {branch})"))),
    }
}
