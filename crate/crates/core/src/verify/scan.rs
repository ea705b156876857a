use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::sampling::{random_coordinate_plane_triangle, random_triangle, trial_rng, SampleBox};
use crate::par::{map_reduce, Execution};
use crate::sol::SolPoint;
use crate::triangles::{angle_sum, coplanarity_test, Triangle, THEOREM_TOL};

/// Summary of a randomized angle-sum scan.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanResult {
    pub trials: usize,
    pub seed: u64,
    pub min_angle_sum: f64,
    pub min_excess: f64,
    pub max_angle_sum: f64,
    /// Trials with `angle_sum < π - tol` or where the pipeline failed.
    pub violations: usize,
    /// Lowest-index violating triangle, for reproduction.
    pub first_violation: Option<(usize, [SolPoint; 3])>,
    /// Triangle attaining the minimum sum.
    pub argmin: Option<(usize, [SolPoint; 3])>,
}

#[derive(Clone)]
struct Acc {
    min: Option<(f64, usize, [SolPoint; 3])>,
    max: f64,
    violations: usize,
    first_violation: Option<(usize, [SolPoint; 3])>,
}

impl Acc {
    fn empty() -> Self {
        Self {
            min: None,
            max: f64::NEG_INFINITY,
            violations: 0,
            first_violation: None,
        }
    }

    fn merge(self, other: Acc) -> Acc {
        let min = match (self.min, other.min) {
            (Some(a), Some(b)) => Some(if (b.0, b.1) < (a.0, a.1) { b } else { a }),
            (a, b) => a.or(b),
        };
        let first_violation = match (self.first_violation, other.first_violation) {
            (Some(a), Some(b)) => Some(if b.0 < a.0 { b } else { a }),
            (a, b) => a.or(b),
        };
        Acc {
            min,
            max: self.max.max(other.max),
            violations: self.violations + other.violations,
            first_violation,
        }
    }
}

/// Seeded scan of random triangles in `bounds³`, counting sums below `π - tol`.
pub fn theorem_scan(trials: usize, seed: u64, bounds: SampleBox) -> ScanResult {
    theorem_scan_with(trials, seed, bounds, THEOREM_TOL, Execution::default())
}

pub fn theorem_scan_with(
    trials: usize,
    seed: u64,
    bounds: SampleBox,
    tol: f64,
    exec: Execution,
) -> ScanResult {
    scan(trials, seed, tol, exec, |i| {
        random_triangle(&mut trial_rng(seed, i), bounds)
    })
}

fn scan<G>(trials: usize, seed: u64, tol: f64, exec: Execution, gen: G) -> ScanResult
where
    G: Fn(usize) -> Triangle + Sync + Send,
{
    let acc = map_reduce(
        trials,
        exec,
        Acc::empty,
        |i| {
            let tri = gen(i);
            let v = tri.vertices();
            match angle_sum(&tri) {
                Ok(s) => {
                    let bad = s.is_nan() || s < PI - tol;
                    Acc {
                        min: Some((s, i, v)),
                        max: s,
                        violations: usize::from(bad),
                        first_violation: bad.then_some((i, v)),
                    }
                }
                Err(_) => Acc {
                    violations: 1,
                    first_violation: Some((i, v)),
                    ..Acc::empty()
                },
            }
        },
        Acc::merge,
    );
    let min_angle_sum = acc.min.map_or(f64::NAN, |m| m.0);
    ScanResult {
        trials,
        seed,
        min_angle_sum,
        min_excess: min_angle_sum - PI,
        max_angle_sum: if acc.max.is_finite() {
            acc.max
        } else {
            f64::NAN
        },
        violations: acc.violations,
        first_violation: acc.first_violation,
        argmin: acc.min.map(|m| (m.1, m.2)),
    }
}

/// Outcome of a scan over coordinate-plane (and parallel-plane) triangles.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PlanarScanResult {
    pub trials: usize,
    pub seed: u64,
    pub max_abs_excess: f64,
    pub max_coplanarity_residual: f64,
    /// Trials with `|angle_sum - π| ≥ tol` or a failed coplanarity test.
    pub violations: usize,
    pub first_violation: Option<(usize, [SolPoint; 3])>,
}

pub fn planar_scan(
    trials: usize,
    seed: u64,
    bounds: SampleBox,
    tol: f64,
    exec: Execution,
) -> PlanarScanResult {
    type Item = (f64, f64, usize, Option<(usize, [SolPoint; 3])>);
    let merge = |a: Item, b: Item| -> Item {
        let first = match (a.3, b.3) {
            (Some(x), Some(y)) => Some(if y.0 < x.0 { y } else { x }),
            (x, y) => x.or(y),
        };
        (a.0.max(b.0), a.1.max(b.1), a.2 + b.2, first)
    };
    let (max_abs_excess, max_res, violations, first_violation) = map_reduce(
        trials,
        exec,
        || (0.0, 0.0, 0, None),
        |i| {
            let (tri, _) = random_coordinate_plane_triangle(&mut trial_rng(seed, i), bounds);
            let v = tri.vertices();
            match (angle_sum(&tri), coplanarity_test(&tri)) {
                (Ok(s), Ok(c)) => {
                    let ex = (s - PI).abs();
                    let bad = ex.is_nan() || ex >= tol || !c.coplanar;
                    (ex, c.residual, usize::from(bad), bad.then_some((i, v)))
                }
                _ => (f64::INFINITY, f64::INFINITY, 1, Some((i, v))),
            }
        },
        merge,
    );
    PlanarScanResult {
        trials,
        seed,
        max_abs_excess,
        max_coplanarity_residual: max_res,
        violations,
        first_violation,
    }
}
