//! Numerical constants shared by the Frenet machinery and the checks.
//!
//! Values are grouped by what limits them: floating-point cancellation,
//! finite-difference truncation, or quadrature.

/// Scale-aware null test: `|<v,v>| <= NULL_RELATIVE * (1 + |v|_E^2)` counts as light-like.
pub const NULL_RELATIVE: f64 = 1e-14;

/// Curvature below this makes the principal normal undefined.
pub const KAPPA_MIN: f64 = 1e-8;

/// Torsion magnitude below this is treated as a zero of the torsion.
pub const TAU_MIN: f64 = 1e-8;

/// Relative finite-difference step: `h = FD_STEP_RELATIVE * max(1, |t|)`.
pub const FD_STEP_RELATIVE: f64 = 1e-4;

/// Absolute tolerance of the adaptive Simpson integrator.
pub const QUADRATURE_TOL: f64 = 1e-10;

/// Maximum bisection depth of the adaptive Simpson integrator.
pub const QUADRATURE_MAX_DEPTH: u32 = 40;

/// Closed-form frames are treated as degenerate for `|t|` below this.
pub const REGULARITY_EPS: f64 = 1e-12;

/// Default analytic-family domain. `t = 0` has zero speed.
pub const DEFAULT_T_MIN: f64 = 1e-3;
pub const DEFAULT_T_MAX: f64 = 3.0;

/// Residual bound for checks fed by closed forms or exact derivatives.
pub const CLOSED_FORM_TOL: f64 = 1e-8;

/// Residual bound for checks fed by the finite-difference pipeline.
pub const FD_TOL: f64 = 1e-5;

/// Default verification grid.
pub const GRID_POINTS: usize = 32;
pub const GRID_T_MIN: f64 = 0.3;
pub const GRID_T_MAX: f64 = 2.0;

/// Points used by the local interpolant of tabulated curves.
pub const TABULATED_WINDOW: usize = 11;

/// Minimum number of samples in a tabulated curve.
pub const TABULATED_MIN_SAMPLES: usize = 5;

/// Default finite-difference step for `t`.
pub fn default_step(t: f64) -> f64 {
    FD_STEP_RELATIVE * t.abs().max(1.0)
}

/// Pass threshold for checks on transformed curves.
pub const TRANSFORM_TOL: f64 = 1e-4;

/// Pass threshold for the transform speed law.
pub const SPEED_LAW_TOL: f64 = 1e-6;

/// Relative step for differentiating `τ/κ` in the slant invariant.
pub const RATIO_STEP_RELATIVE: f64 = 1e-3;
