use nalgebra::{Matrix3, Vector3};

use super::SolPoint;
use crate::error::{Result, SolError};

/// The metric `ds² = e^{2z} dx² + e^{-2z} dy² + dz²` at a base point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MetricTensor {
    diag: [f64; 3],
    // square roots of the diagonal; maps tangent vectors to an orthonormal frame
    scale: [f64; 3],
}

impl MetricTensor {
    pub fn at(p: SolPoint) -> Self {
        Self::at_height(p.z)
    }

    pub fn at_height(z: f64) -> Self {
        let (ep, em) = (z.exp(), (-z).exp());
        Self {
            diag: [ep * ep, em * em, 1.0],
            scale: [ep, em, 1.0],
        }
    }

    pub fn diagonal(&self) -> [f64; 3] {
        self.diag
    }

    pub fn matrix(&self) -> Matrix3<f64> {
        Matrix3::from_diagonal(&Vector3::from(self.diag))
    }

    pub fn inner(&self, u: &Vector3<f64>, v: &Vector3<f64>) -> f64 {
        self.orthonormal(u).dot(&self.orthonormal(v))
    }

    pub fn norm(&self, u: &Vector3<f64>) -> f64 {
        self.orthonormal(u).norm()
    }

    fn orthonormal(&self, u: &Vector3<f64>) -> Vector3<f64> {
        Vector3::new(
            u.x * self.scale[0],
            u.y * self.scale[1],
            u.z * self.scale[2],
        )
    }
}

/// Riemannian angle between tangent vectors `u` and `v` at `at`, in `[0, π]`.
pub fn sol_angle(u: &Vector3<f64>, v: &Vector3<f64>, at: SolPoint) -> Result<f64> {
    let g = MetricTensor::at(at);
    euclidean_angle(&g.orthonormal(u), &g.orthonormal(v))
}

/// Euclidean angle in `[0, π]`. Uses `atan2(|u×v|, u·v)`, which stays
/// accurate near 0 and π where `acos` loses half the digits.
pub fn euclidean_angle(u: &Vector3<f64>, v: &Vector3<f64>) -> Result<f64> {
    if u.iter().chain(v.iter()).any(|c| !c.is_finite()) {
        return Err(SolError::NonFinite("tangent vector"));
    }
    if u.norm() == 0.0 || v.norm() == 0.0 {
        return Err(SolError::ZeroVector);
    }
    Ok(u.cross(v).norm().atan2(u.dot(v)))
}
