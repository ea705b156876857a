//! Inverse curve parameters by direct search on the forward map.
//!
//! Off the base plane the arc length is tied to the direction by `z = t sinθ`,
//! leaving a two-dimensional search over directions. Two charts are searched
//! and the better result kept: plain `(φ, θ)`, which degenerates at the
//! vertical, and the horizontal tangent components
//! `(u, v) = cosθ (cosφ, sinφ)` in the unit disk, which degenerate near the
//! base plane. Each chart runs a coarse grid followed by damped Gauss-Newton
//! with finite-difference Jacobians. On the base plane only the azimuth is
//! searched.

use std::f64::consts::{FRAC_PI_2, PI};

use nalgebra::{Matrix2, Vector2};

use crate::curves::{curve_point, wrap_angle, CurveParams, Direction};
use crate::error::{Result, SolError};
use crate::sol::SolPoint;

const MAX_ITER: usize = 200;
const FD_STEP: f64 = 1e-7;
/// Relative residual accepted as converged.
const CONVERGED: f64 = 1e-15;
/// Relative residual above which the search reports failure.
const GIVE_UP: f64 = 1e-10;
/// Disk-chart variables stay inside this radius.
const MAX_RADIUS: f64 = 1.0 - 1e-15;
const MIN_TILT: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SearchOutcome {
    pub params: CurveParams,
    /// Final `‖curve_point - p‖ / (1 + ‖p‖)`.
    pub residual: f64,
    pub evaluations: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Chart {
    /// `(φ, θ)`; `θ` pinned to 0 on the base plane.
    Angles,
    /// Horizontal tangent components `(u, v)`.
    Disk,
}

struct Problem {
    target: SolPoint,
    chart: Chart,
    flat: bool,
    sign: f64,
    scale: f64,
    evaluations: usize,
}

impl Problem {
    fn new(target: SolPoint, chart: Chart) -> Self {
        Self {
            target,
            chart,
            flat: target.z == 0.0,
            sign: if target.z < 0.0 { -1.0 } else { 1.0 },
            scale: 1.0 + target.to_vector().norm(),
            evaluations: 0,
        }
    }

    fn dims(&self) -> usize {
        if self.flat {
            1
        } else {
            2
        }
    }

    /// Projects search variables back into the admissible set.
    fn clamp(&self, s: Vector2<f64>) -> Vector2<f64> {
        match self.chart {
            Chart::Angles if self.flat => Vector2::new(s[0], 0.0),
            Chart::Angles => Vector2::new(s[0], self.sign * s[1].abs().clamp(MIN_TILT, FRAC_PI_2)),
            Chart::Disk => {
                let r = s.norm();
                if r > MAX_RADIUS {
                    s * (MAX_RADIUS / r)
                } else {
                    s
                }
            }
        }
    }

    fn grid(&self, n: usize) -> Vec<Vector2<f64>> {
        let mid = |k: usize, cells: usize| (k as f64 + 0.5) / cells as f64;
        match self.chart {
            Chart::Angles if self.flat => (0..4 * n)
                .map(|j| Vector2::new(-PI + 2.0 * PI * mid(j, 4 * n), 0.0))
                .collect(),
            Chart::Angles => (0..n)
                .flat_map(|a| (0..2 * n).map(move |b| (a, b)))
                .map(|(a, b)| {
                    Vector2::new(
                        -PI + 2.0 * PI * mid(b, 2 * n),
                        self.sign * FRAC_PI_2 * mid(a, n),
                    )
                })
                .collect(),
            Chart::Disk => (0..n)
                .flat_map(|a| (0..n).map(move |b| (a, b)))
                .map(|(a, b)| Vector2::new(-1.0 + 2.0 * mid(a, n), -1.0 + 2.0 * mid(b, n)))
                .filter(|s| s.norm() < MAX_RADIUS)
                .collect(),
        }
    }

    /// Maps search variables to curve parameters.
    fn params(&self, s: Vector2<f64>) -> CurveParams {
        let (phi, theta) = match self.chart {
            Chart::Angles => (wrap_angle(s[0]), s[1]),
            Chart::Disk => {
                let horizontal = s.norm();
                let w = self.sign * (1.0 - horizontal * horizontal).max(0.0).sqrt();
                let phi = if horizontal == 0.0 {
                    0.0
                } else {
                    wrap_angle(s[1].atan2(s[0]))
                };
                (phi, w.atan2(horizontal))
            }
        };
        let t = if self.flat {
            self.target.x.hypot(self.target.y)
        } else {
            self.target.z / theta.sin()
        };
        CurveParams {
            dir: Direction { phi, theta },
            t,
        }
    }

    fn residual(&mut self, s: Vector2<f64>) -> Vector2<f64> {
        self.evaluations += 1;
        let q = curve_point(&self.params(s));
        Vector2::new(q.x - self.target.x, q.y - self.target.y) / self.scale
    }

    fn solve(&mut self, grid: usize) -> (Vector2<f64>, f64) {
        let (mut s, mut r) = self
            .grid(grid)
            .into_iter()
            .map(|s| {
                let r = self.residual(s).norm();
                (s, r)
            })
            .min_by(|a, b| a.1.total_cmp(&b.1))
            .expect("grid is nonempty");

        let mut lambda = 1e-6;
        for _ in 0..MAX_ITER {
            if r < CONVERGED {
                break;
            }
            let f = self.residual(s);
            let mut jac = Matrix2::zeros();
            for k in 0..self.dims() {
                let mut e = Vector2::zeros();
                e[k] = FD_STEP;
                let (hi, lo) = (self.clamp(s + e), self.clamp(s - e));
                let span = (hi - lo)[k];
                if span != 0.0 {
                    let col = (self.residual(hi) - self.residual(lo)) / span;
                    jac.set_column(k, &col);
                }
            }
            let jtj = jac.transpose() * jac;
            let g = jac.transpose() * f;
            let mut improved = false;
            for _ in 0..30 {
                let mut damped = jtj + Matrix2::identity() * (lambda * (1.0 + jtj.trace()));
                if self.flat {
                    damped[(1, 1)] = 1.0;
                }
                let Some(step) = damped.try_inverse().map(|inv| -(inv * g)) else {
                    lambda *= 10.0;
                    continue;
                };
                let cand = self.clamp(s + step);
                let cr = self.residual(cand).norm();
                if cr < r {
                    (s, r) = (cand, cr);
                    lambda = (lambda / 10.0).max(1e-15);
                    improved = true;
                    break;
                }
                lambda *= 10.0;
            }
            if !improved {
                break;
            }
        }
        (s, r)
    }
}

/// Grid search plus Gauss-Newton for the curve from the origin to `p`.
///
/// `grid` is the number of grid cells per search axis.
pub fn brute_force_params(p: SolPoint, grid: usize) -> Result<SearchOutcome> {
    p.ensure_finite("search target")?;
    if p.x == 0.0 && p.y == 0.0 && p.z == 0.0 {
        return Err(SolError::Origin);
    }
    let grid = grid.max(4);
    let charts: &[Chart] = if p.z == 0.0 {
        &[Chart::Angles]
    } else {
        &[Chart::Angles, Chart::Disk]
    };
    let mut evaluations = 0;
    let mut best: Option<(CurveParams, f64)> = None;
    for &chart in charts {
        let mut prob = Problem::new(p, chart);
        let (s, r) = prob.solve(grid);
        evaluations += prob.evaluations;
        if best.is_none_or(|b| r < b.1) {
            best = Some((prob.params(s), r));
        }
    }
    let (mut params, residual) = best.expect("at least one chart");
    if residual > GIVE_UP {
        return Err(SolError::NoConvergence { residual });
    }
    if params.dir.theta.abs() == FRAC_PI_2 {
        params.dir.phi = 0.0;
    }
    Ok(SearchOutcome {
        params,
        residual,
        evaluations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curves::params_from_endpoint;
    use std::f64::consts::{FRAC_PI_4, SQRT_2};

    fn assert_agrees(p: SolPoint) {
        let found = brute_force_params(p, 32).unwrap().params;
        let closed = params_from_endpoint(p).unwrap();
        let du = (found.dir.unit_vector() - closed.dir.unit_vector()).norm();
        assert!(du < 1e-8, "direction mismatch {du:e} at {p:?}");
        assert!((found.t - closed.t).abs() < 1e-8, "t mismatch at {p:?}");
    }

    #[test]
    fn base_plane_point() {
        let out = brute_force_params(SolPoint::new(1.0, 1.0, 0.0), 16).unwrap();
        assert!((out.params.dir.phi - FRAC_PI_4).abs() < 1e-9);
        assert_eq!(out.params.dir.theta, 0.0);
        assert!((out.params.t - SQRT_2).abs() < 1e-12);
    }

    #[test]
    fn figure_and_table_vertices() {
        assert_agrees(SolPoint::new(-1.0, 1.0, 1.0));
        assert_agrees(SolPoint::new(0.5, 5.0, 0.5));
        assert_agrees(SolPoint::new(0.8, 0.0, -2.0));
        assert_agrees(SolPoint::new(0.0, 0.0, 1.5));
    }

    #[test]
    fn origin_rejected() {
        assert_eq!(
            brute_force_params(SolPoint::ORIGIN, 8).unwrap_err(),
            SolError::Origin
        );
    }
}
