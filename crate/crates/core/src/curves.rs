//! Translation curves issued from the origin.
//!
//! A translation curve with unit starting tangent `(u, v, w)` solves
//! `ẋ = u e^-z, ẏ = v e^z, ż = w`. Its closed form, the inverse problem
//! (endpoint to parameters) and the induced translation distance live here.

use std::f64::consts::{FRAC_PI_2, PI};

use nalgebra::Vector3;
use serde::{Deserialize, Serialize};

use crate::error::{Result, SolError};
use crate::sol::{translation_to, SolPoint, POINT_EQ_TOL};

/// Starting direction of a unit-speed translation curve.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Direction {
    /// Azimuth in `(-π, π]`.
    pub phi: f64,
    /// Elevation in `[-π/2, π/2]`.
    pub theta: f64,
}

impl Direction {
    pub fn new(phi: f64, theta: f64) -> Result<Self> {
        let ok = phi.is_finite()
            && theta.is_finite()
            && phi > -PI
            && phi <= PI
            && (-FRAC_PI_2..=FRAC_PI_2).contains(&theta);
        if ok {
            Ok(Self { phi, theta })
        } else {
            Err(SolError::InvalidDirection { phi, theta })
        }
    }

    /// Wraps `phi` into `(-π, π]` before validating `theta`.
    pub fn wrapped(phi: f64, theta: f64) -> Result<Self> {
        Self::new(wrap_angle(phi), theta)
    }

    /// `(u, v, w) = (cosθ cosφ, cosθ sinφ, sinθ)`.
    pub fn unit_vector(&self) -> Vector3<f64> {
        let (sp, cp) = sin_cos_snapped(self.phi);
        let (st, ct) = sin_cos_snapped(self.theta);
        Vector3::new(ct * cp, ct * sp, st)
    }
}

/// Wraps an angle into `(-π, π]`.
pub fn wrap_angle(a: f64) -> f64 {
    let mut r = (a + 0.0).rem_euclid(2.0 * PI) + 0.0;
    if r > PI {
        r -= 2.0 * PI;
    }
    r
}

// sin/cos that return exact zeros and ones at multiples of π/2, so curves
// inside coordinate planes stay exactly inside them.
fn sin_cos_snapped(a: f64) -> (f64, f64) {
    if a == 0.0 {
        (0.0, 1.0)
    } else if a == FRAC_PI_2 {
        (1.0, 0.0)
    } else if a == -FRAC_PI_2 {
        (-1.0, 0.0)
    } else if a == PI || a == -PI {
        (0.0, -1.0)
    } else {
        a.sin_cos()
    }
}

/// Direction plus arc length of a translation curve segment from the origin.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CurveParams {
    pub dir: Direction,
    pub t: f64,
}

impl CurveParams {
    pub fn new(phi: f64, theta: f64, t: f64) -> Result<Self> {
        let dir = Direction::new(phi, theta)?;
        if !t.is_finite() || t < 0.0 {
            return Err(SolError::InvalidArcLength(t));
        }
        Ok(Self { dir, t })
    }

    pub fn phi(&self) -> f64 {
        self.dir.phi
    }

    pub fn theta(&self) -> f64 {
        self.dir.theta
    }
}

/// Which closed form of the inverse problem applies to an endpoint.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BranchCase {
    /// `y ≠ 0, z ≠ 0`.
    Generic,
    /// `y = 0, z ≠ 0, x ≠ 0`; `φ ∈ {0, π}`.
    Y0,
    /// `z = 0`; the curve is a Euclidean ray in the base plane.
    Z0,
    /// `x = y = 0, z ≠ 0`; the vertical line.
    Axis,
}

impl BranchCase {
    pub fn classify(p: SolPoint) -> Self {
        if p.z == 0.0 {
            BranchCase::Z0
        } else if p.x == 0.0 && p.y == 0.0 {
            BranchCase::Axis
        } else if p.y == 0.0 {
            BranchCase::Y0
        } else {
            BranchCase::Generic
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            BranchCase::Generic => "generic",
            BranchCase::Y0 => "y0",
            BranchCase::Z0 => "z0",
            BranchCase::Axis => "axis",
        }
    }
}

/// Point reached after arc length `p.t` along the curve with direction `p.dir`.
pub fn curve_point(p: &CurveParams) -> SolPoint {
    let (sp, cp) = sin_cos_snapped(p.dir.phi);
    let (st, ct) = sin_cos_snapped(p.dir.theta);
    if st == 0.0 {
        return SolPoint::new(p.t * cp, p.t * sp, 0.0);
    }
    let z = p.t * st;
    // cotθ (e^{±z} - 1), written with expm1 so small z keeps its digits
    let cot = ct / st;
    SolPoint::new(-cot * cp * (-z).exp_m1(), cot * sp * z.exp_m1(), z)
}

/// Velocity `(u e^-z, v e^z, w)` of the curve at arc length `p.t`.
pub fn curve_tangent(p: &CurveParams) -> Vector3<f64> {
    let d = p.dir.unit_vector();
    let z = p.t * d.z;
    Vector3::new(d.x * (-z).exp(), d.y * z.exp(), d.z)
}

/// Solution of the inverse problem together with the branch it came from.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EndpointSolution {
    pub params: CurveParams,
    pub case: BranchCase,
}

/// Parameters `(φ, θ, t)` of the translation curve from the origin to `p`.
pub fn params_from_endpoint(p: SolPoint) -> Result<CurveParams> {
    solve_endpoint(p).map(|s| s.params)
}

/// Like [`params_from_endpoint`], also reporting the branch case.
///
/// Off the base plane the closed form gives
/// `cotθ cosφ = -x / (e^-z - 1)` and `cotθ sinφ = y / (e^z - 1)`.
/// Requiring `t > 0` forces `sign θ = sign z`, so `cotθ` carries the sign of
/// `z`, which pins down the quadrant of `φ` that the bare arccot leaves open.
pub fn solve_endpoint(p: SolPoint) -> Result<EndpointSolution> {
    p.ensure_finite("endpoint")?;
    if p.x == 0.0 && p.y == 0.0 && p.z == 0.0 {
        return Err(SolError::Origin);
    }
    let case = BranchCase::classify(p);
    let (phi, theta, t) = match case {
        BranchCase::Z0 => (p.y.atan2(p.x), 0.0, p.x.hypot(p.y)),
        BranchCase::Axis => (0.0, FRAC_PI_2.copysign(p.z), p.z.abs()),
        BranchCase::Y0 | BranchCase::Generic => {
            let s = 1.0f64.copysign(p.z);
            let a = -p.x / (-p.z).exp_m1();
            let b = if case == BranchCase::Y0 {
                0.0
            } else {
                p.y / p.z.exp_m1()
            };
            let rho = a.hypot(b);
            let phi = (s * b).atan2(s * a);
            let theta = s * 1.0f64.atan2(rho);
            (phi, theta, p.z.abs() * 1.0f64.hypot(rho))
        }
    };
    Ok(EndpointSolution {
        params: CurveParams::new(wrap_angle(phi), theta, t)?,
        case,
    })
}

/// Translation distance: arc length of the translation curve from `p` to `q`.
pub fn translation_distance(p: SolPoint, q: SolPoint) -> Result<f64> {
    p.ensure_finite("distance endpoint")?;
    q.ensure_finite("distance endpoint")?;
    if p.approx_eq(&q, POINT_EQ_TOL) {
        return Ok(0.0);
    }
    let image = translation_to(p).inverse()?.apply(q)?;
    match params_from_endpoint(image) {
        Ok(c) => Ok(c.t),
        Err(SolError::Origin) => Ok(0.0),
        Err(e) => Err(e),
    }
}

/// `n` points at equal arc-length steps from the origin to `curve_point(p)`.
pub fn sample_curve(p: &CurveParams, n: usize) -> Result<Vec<SolPoint>> {
    if n < 2 {
        return Err(SolError::TooFewSamples { min: 2, got: n });
    }
    let last = (n - 1) as f64;
    Ok((0..n)
        .map(|k| {
            let t = if k + 1 == n {
                p.t
            } else {
                p.t * k as f64 / last
            };
            curve_point(&CurveParams { dir: p.dir, t })
        })
        .collect())
}
