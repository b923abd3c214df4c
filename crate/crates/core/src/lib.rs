//! Time-like curves in Minkowski 3-space: vector algebra for the metric
//! `−dx1² + dx2² + dx3²`, Frenet analysis, the Salkowski and anti-Salkowski
//! families, the torsion/curvature-normalizing transforms and invariant checks.

pub mod curve;
pub mod error;
pub mod families;
pub mod frenet;
pub mod lorentz;
pub mod quadrature;
mod series;
pub mod tolerance;
pub mod transforms;
pub mod verify;

pub use curve::{uniform_grid, CurveKind, CurveSpec, Domain, Tabulated, TimelikeHelix};
pub use error::{CurveError, Result};
pub use families::{AntiSalkowskiInvariants, AxisDecomposition, SalkowskiParams};
pub use frenet::{arclength, frenet_at, frenet_residuals, DerivativeMethod, Frame, FrenetSample};
pub use lorentz::{causal_character, lorentz_cross, minkowski_inner, mnorm, normalize, CausalCharacter, Vec3M};
pub use transforms::TransformKind;
pub use verify::{InvariantReport, SlantConfig};
