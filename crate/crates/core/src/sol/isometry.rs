use nalgebra::{Matrix4, RowVector4};
use serde::{Deserialize, Serialize};

use super::SolPoint;
use crate::error::{Result, SolError};

/// Tolerance on the homogeneous coordinate after applying a matrix.
const HOMOGENEOUS_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum IsometryKind {
    Translation,
    Stabilizer,
    Composite,
}

/// An isometry of Sol as a 4×4 collineation acting on row vectors `(1, x, y, z)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolIsometry {
    m: Matrix4<f64>,
    kind: IsometryKind,
}

impl SolIsometry {
    pub fn identity() -> Self {
        Self {
            m: Matrix4::identity(),
            kind: IsometryKind::Translation,
        }
    }

    /// The left translation `T_p` that carries the origin onto `p`.
    ///
    /// ```text
    /// | 1  x     y    z |
    /// | 0  e^-z  0    0 |
    /// | 0  0     e^z  0 |
    /// | 0  0     0    1 |
    /// ```
    pub fn translation(p: SolPoint) -> Self {
        let (em, ep) = ((-p.z).exp(), p.z.exp());
        #[rustfmt::skip]
        let m = Matrix4::new(
            1.0, p.x, p.y, p.z,
            0.0, em,  0.0, 0.0,
            0.0, 0.0, ep,  0.0,
            0.0, 0.0, 0.0, 1.0,
        );
        Self {
            m,
            kind: IsometryKind::Translation,
        }
    }

    /// Stabilizer generator `y ↦ -y`.
    pub fn reflect_y() -> Self {
        Self {
            m: Matrix4::from_diagonal(&nalgebra::Vector4::new(1.0, 1.0, -1.0, 1.0)),
            kind: IsometryKind::Stabilizer,
        }
    }

    /// Stabilizer generator `x ↔ y, z ↦ -z`.
    pub fn swap_xy_flip_z() -> Self {
        #[rustfmt::skip]
        let m = Matrix4::new(
            1.0, 0.0, 0.0, 0.0,
            0.0, 0.0, 1.0, 0.0,
            0.0, 1.0, 0.0, 0.0,
            0.0, 0.0, 0.0, -1.0,
        );
        Self {
            m,
            kind: IsometryKind::Stabilizer,
        }
    }

    /// Wraps an arbitrary matrix. No check that it is a Sol isometry.
    pub fn from_matrix(m: Matrix4<f64>) -> Self {
        Self {
            m,
            kind: IsometryKind::Composite,
        }
    }

    pub fn matrix(&self) -> &Matrix4<f64> {
        &self.m
    }

    pub fn kind(&self) -> IsometryKind {
        self.kind
    }

    pub fn determinant(&self) -> f64 {
        self.m.determinant()
    }

    /// `self` first, then `next`. With row vectors this is the product `self.m · next.m`.
    pub fn then(&self, next: &SolIsometry) -> SolIsometry {
        use IsometryKind::*;
        let kind = match (self.kind, next.kind) {
            (Translation, Translation) => Translation,
            (Stabilizer, Stabilizer) => Stabilizer,
            _ => Composite,
        };
        SolIsometry {
            m: self.m * next.m,
            kind,
        }
    }

    pub fn inverse(&self) -> Result<SolIsometry> {
        let m = match self.kind {
            IsometryKind::Translation => {
                let (x, y, z) = (self.m[(0, 1)], self.m[(0, 2)], self.m[(0, 3)]);
                let (ep, em) = (z.exp(), (-z).exp());
                #[rustfmt::skip]
                let inv = Matrix4::new(
                    1.0, -x * ep, -y * em, -z,
                    0.0, ep,      0.0,     0.0,
                    0.0, 0.0,     em,      0.0,
                    0.0, 0.0,     0.0,     1.0,
                );
                inv
            }
            // signed permutation matrices
            IsometryKind::Stabilizer => self.m.transpose(),
            IsometryKind::Composite => self.m.try_inverse().ok_or(SolError::Singular)?,
        };
        Ok(SolIsometry { m, kind: self.kind })
    }

    /// The point `(1, p) · M`. Fails when the homogeneous coordinate drifts from 1.
    pub fn apply(&self, p: SolPoint) -> Result<SolPoint> {
        p.ensure_finite("apply input")?;
        let r = RowVector4::new(1.0, p.x, p.y, p.z) * self.m;
        if (r[0] - 1.0).abs() > HOMOGENEOUS_TOL {
            return Err(SolError::DegenerateMatrix(r[0]));
        }
        Ok(SolPoint::new(r[1] / r[0], r[2] / r[0], r[3] / r[0]))
    }
}

/// `T_p`, the translation carrying the origin to `p`.
pub fn translation_to(p: SolPoint) -> SolIsometry {
    SolIsometry::translation(p)
}

pub fn apply(iso: &SolIsometry, p: SolPoint) -> Result<SolPoint> {
    iso.apply(p)
}

/// All eight elements of the dihedral stabilizer of the origin, identity first.
pub fn stabilizer_elements() -> Vec<SolIsometry> {
    let generators = [SolIsometry::reflect_y(), SolIsometry::swap_xy_flip_z()];
    let mut identity = SolIsometry::identity();
    identity.kind = IsometryKind::Stabilizer;
    let mut group = vec![identity];
    let mut frontier = 0;
    while frontier < group.len() {
        let g = group[frontier];
        for gen in &generators {
            let h = g.then(gen);
            if !group.iter().any(|e| e.m == h.m) {
                group.push(h);
            }
        }
        frontier += 1;
    }
    group
}
