use nalgebra::Vector3;

use crate::curves::Direction;
use crate::error::{Result, SolError};
use crate::sol::SolPoint;

pub const MIN_STEPS: usize = 100;

/// One classical Runge-Kutta step of `y' = f(y)` for an autonomous system.
pub fn rk4_step<F>(y: Vector3<f64>, h: f64, f: F) -> Vector3<f64>
where
    F: Fn(&Vector3<f64>) -> Vector3<f64>,
{
    let k1 = f(&y);
    let k2 = f(&(y + k1 * (h / 2.0)));
    let k3 = f(&(y + k2 * (h / 2.0)));
    let k4 = f(&(y + k3 * h));
    y + (k1 + k2 * 2.0 + k3 * 2.0 + k4) * (h / 6.0)
}

/// Integrates `ẋ = u e^-z, ẏ = v e^z, ż = w` from the origin with fixed-step RK4.
pub fn ode_oracle_curve(dir: Direction, t_end: f64, steps: usize) -> Result<SolPoint> {
    if steps < MIN_STEPS {
        return Err(SolError::TooFewSamples {
            min: MIN_STEPS,
            got: steps,
        });
    }
    if !t_end.is_finite() || t_end < 0.0 {
        return Err(SolError::InvalidArcLength(t_end));
    }
    let uvw = dir.unit_vector();
    let rhs = |s: &Vector3<f64>| Vector3::new(uvw.x * (-s.z).exp(), uvw.y * s.z.exp(), uvw.z);
    let h = t_end / steps as f64;
    let mut y = Vector3::zeros();
    for _ in 0..steps {
        y = rk4_step(y, h, rhs);
    }
    Ok(SolPoint::new(y.x, y.y, y.z))
}
