use thiserror::Error;

/// Everything that can go wrong while evaluating or analysing a curve.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum CurveError {
    #[error("non-finite component in vector")]
    NonFinite,

    #[error("vector is null or too close to the light cone to normalize")]
    NearNullVector,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("stencil [{lo}, {hi}] leaves the domain [{start}, {end}]")]
    DomainTooSmall { lo: f64, hi: f64, start: f64, end: f64 },

    #[error("velocity is not time-like at t = {t}")]
    NotTimeLike { t: f64 },

    #[error("curvature {kappa:e} vanishes at t = {t}; Frenet frame undefined")]
    VanishingCurvature { t: f64, kappa: f64 },

    #[error("closed-form frame is degenerate at t = {t} (curve not regular at 0)")]
    DegenerateAt0 { t: f64 },

    #[error("adaptive quadrature did not reach tolerance on [{a}, {b}]")]
    QuadratureFailure { a: f64, b: f64 },

    #[error("torsion vanishes or changes sign near t = {t}")]
    TorsionVanishes { t: f64 },

    #[error("curvature vanishes near t = {t}")]
    CurvatureVanishes { t: f64 },

    #[error("axis branch needs |tau| > 1, got tau = {tau} at t = {t}")]
    TorsionBranchInvalid { t: f64, tau: f64 },

    #[error("slant radicand is not positive at t = {t}")]
    SignatureInvalid { t: f64 },

    #[error("could not calibrate the arc-length origin")]
    ArclengthOriginUnresolved,

    #[error("curvature deviates from 1 by {deviation:e}")]
    CurvatureNotUnit { deviation: f64 },

    #[error("exact derivatives of order {order} are not available for this curve")]
    DerivativeUnavailable { order: usize },
}

pub type Result<T> = std::result::Result<T, CurveError>;
