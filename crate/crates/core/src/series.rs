//! Truncated Taylor series in the curve parameter.
//!
//! Coefficients are normalized (`c[k] = f^(k)(t0) / k!`). Used to push exact
//! derivatives of a base curve through the curvature and torsion formulas
//! when a transformed curve needs its own higher derivatives.

use crate::lorentz::{lorentz_cross, minkowski_inner, Vec3M};

#[derive(Debug, Clone, PartialEq)]
pub(crate) struct Series(pub Vec<f64>);

#[derive(Debug, Clone, PartialEq)]
pub(crate) struct VecSeries(pub Vec<Vec3M>);

fn factorial(k: usize) -> f64 {
    (1..=k).fold(1.0, |acc, i| acc * i as f64)
}

impl Series {
    /// Series of `cosh(rate·t)` (or `sinh`) around `t0`.
    pub fn hyperbolic(rate: f64, t0: f64, len: usize, cosh: bool) -> Series {
        let (c, s) = ((rate * t0).cosh(), (rate * t0).sinh());
        Series(
            (0..len)
                .map(|k| {
                    let f = if (k % 2 == 0) == cosh { c } else { s };
                    rate.powi(k as i32) / factorial(k) * f
                })
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn value(&self) -> f64 {
        self.0[0]
    }

    pub fn mul(&self, o: &Series) -> Series {
        let n = self.len().min(o.len());
        Series(
            (0..n)
                .map(|k| (0..=k).map(|i| self.0[i] * o.0[k - i]).sum())
                .collect(),
        )
    }

    pub fn scale(&self, s: f64) -> Series {
        Series(self.0.iter().map(|c| c * s).collect())
    }

    pub fn div(&self, o: &Series) -> Series {
        let n = self.len().min(o.len());
        let mut q = vec![0.0; n];
        for k in 0..n {
            let acc: f64 = (1..=k).map(|i| o.0[i] * q[k - i]).sum();
            q[k] = (self.0[k] - acc) / o.0[0];
        }
        Series(q)
    }

    /// Square root; requires a positive constant term.
    pub fn sqrt(&self) -> Series {
        let n = self.len();
        let mut r = vec![0.0; n];
        r[0] = self.0[0].sqrt();
        for k in 1..n {
            let acc: f64 = (1..k).map(|i| r[i] * r[k - i]).sum();
            r[k] = (self.0[k] - acc) / (2.0 * r[0]);
        }
        Series(r)
    }

    /// `|f|` near a point where `f` does not vanish.
    pub fn abs(&self) -> Series {
        if self.0[0] < 0.0 {
            self.scale(-1.0)
        } else {
            self.clone()
        }
    }
}

impl VecSeries {
    /// Series of `f` around `t0` from derivatives `[f(t0), f'(t0), ...]`.
    pub fn from_derivatives(d: &[Vec3M]) -> VecSeries {
        VecSeries(d.iter().enumerate().map(|(k, v)| *v / factorial(k)).collect())
    }

    /// Derivatives `[f, f', f'', ...]` recovered from the coefficients.
    pub fn derivatives(&self) -> Vec<Vec3M> {
        self.0.iter().enumerate().map(|(k, v)| *v * factorial(k)).collect()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn inner(&self, o: &VecSeries) -> Series {
        let n = self.len().min(o.len());
        Series(
            (0..n)
                .map(|k| (0..=k).map(|i| minkowski_inner(self.0[i], o.0[k - i])).sum())
                .collect(),
        )
    }

    pub fn cross(&self, o: &VecSeries) -> VecSeries {
        let n = self.len().min(o.len());
        VecSeries(
            (0..n)
                .map(|k| {
                    (0..=k).fold(Vec3M::ZERO, |acc, i| acc + lorentz_cross(self.0[i], o.0[k - i]))
                })
                .collect(),
        )
    }

    pub fn mul_scalar(&self, s: &Series) -> VecSeries {
        let n = self.len().min(s.len());
        VecSeries(
            (0..n)
                .map(|k| (0..=k).fold(Vec3M::ZERO, |acc, i| acc + self.0[i] * s.0[k - i]))
                .collect(),
        )
    }
}
