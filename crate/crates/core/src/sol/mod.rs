//! Points of Sol, its group law, isometries and the left-invariant metric.
//!
//! Points are stored affinely as `(x, y, z)`; the homogeneous model point is
//! `(1, x, y, z)`. Isometries are 4×4 matrices acting on row vectors from the
//! right, so `apply(T, p) = (1, p) · T`.

mod isometry;
mod metric;

pub use isometry::{apply, stabilizer_elements, translation_to, IsometryKind, SolIsometry};
pub use metric::{euclidean_angle, sol_angle, MetricTensor};

use std::ops::Mul;

use nalgebra::Vector3;
use serde::{Deserialize, Serialize};

use crate::error::{Result, SolError};

/// Absolute per-coordinate tolerance used when comparing points for equality.
pub const POINT_EQ_TOL: f64 = 1e-12;

/// A point of Sol, `(1, x, y, z)` in homogeneous coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct SolPoint {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl SolPoint {
    pub const ORIGIN: SolPoint = SolPoint {
        x: 0.0,
        y: 0.0,
        z: 0.0,
    };

    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Self { x, y, z }
    }

    /// Checked constructor; rejects NaN and infinities.
    pub fn try_new(x: f64, y: f64, z: f64) -> Result<Self> {
        let p = Self::new(x, y, z);
        p.ensure_finite("point")?;
        Ok(p)
    }

    pub fn from_array(a: [f64; 3]) -> Self {
        Self::new(a[0], a[1], a[2])
    }

    pub fn to_array(self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }

    pub fn to_vector(self) -> Vector3<f64> {
        Vector3::new(self.x, self.y, self.z)
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }

    pub(crate) fn ensure_finite(&self, what: &'static str) -> Result<()> {
        if self.is_finite() {
            Ok(())
        } else {
            Err(SolError::NonFinite(what))
        }
    }

    pub fn is_origin(&self) -> bool {
        self.approx_eq(&Self::ORIGIN, POINT_EQ_TOL)
    }

    /// Max-norm distance between the affine coordinates.
    pub fn max_abs_diff(&self, other: &SolPoint) -> f64 {
        (self.x - other.x)
            .abs()
            .max((self.y - other.y).abs())
            .max((self.z - other.z).abs())
    }

    pub fn approx_eq(&self, other: &SolPoint, tol: f64) -> bool {
        self.max_abs_diff(other) <= tol
    }

    /// Group inverse `(-x e^z, -y e^-z, -z)`.
    pub fn inverse(self) -> SolPoint {
        SolPoint::new(-self.x * self.z.exp(), -self.y * (-self.z).exp(), -self.z)
    }
}

impl From<[f64; 3]> for SolPoint {
    fn from(a: [f64; 3]) -> Self {
        Self::from_array(a)
    }
}

impl Mul for SolPoint {
    type Output = SolPoint;

    fn mul(self, rhs: SolPoint) -> SolPoint {
        group_multiply(self, rhs)
    }
}

/// The Sol group law `(a,b,c)(x,y,z) = (x + a e^-z, y + b e^z, z + c)`.
pub fn group_multiply(a: SolPoint, b: SolPoint) -> SolPoint {
    SolPoint::new(b.x + a.x * (-b.z).exp(), b.y + a.y * b.z.exp(), b.z + a.z)
}

/// Conjugate `t` by `by`, i.e. `by⁻¹ · t · by`. The third coordinate of `t`
/// is preserved exactly.
pub fn conjugate(t: SolPoint, by: SolPoint) -> SolPoint {
    SolPoint::new(
        -by.x * (-t.z).exp_m1() + t.x * (-by.z).exp(),
        -by.y * t.z.exp_m1() + t.y * by.z.exp(),
        t.z,
    )
}
