use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::ode::ode_oracle_curve;
use super::sampling::{
    random_coordinate_plane_triangle, random_curve_params, random_endpoint, random_triangle,
    trial_rng, SampleBox,
};
use super::search::brute_force_params;
use crate::curves::{curve_point, params_from_endpoint, wrap_angle, BranchCase};
use crate::par::{map_reduce, Execution};
use crate::triangles::{angle_sum, coplanarity_test, tangent_directions};

pub const ROUND_TRIP_TOL: f64 = 1e-9;
pub const ODE_TOL: f64 = 1e-8;
pub const ODE_STEPS: usize = 10_000;
pub const ODE_T_MAX: f64 = 5.0;
pub const SEARCH_TOL: f64 = 1e-8;
pub const SEARCH_GRID: usize = 32;
pub const CURVE_T_MAX: f64 = 10.0;

const CASES: [BranchCase; 4] = [
    BranchCase::Generic,
    BranchCase::Y0,
    BranchCase::Z0,
    BranchCase::Axis,
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    /// Angle sum never drops below π.
    Theorem,
    /// Coordinate-plane triangles have sum π and coplanar tangents.
    Planar,
    /// `t_2^0 = -t_1^2`, `t_3^0 = -t_1^3`, `t_3^2 = -t_2^3`.
    Antipodality,
    /// Inverse parameters of a curve endpoint recover the curve.
    Roundtrip,
    /// Closed-form curve against RK4.
    Ode,
    /// Closed-form inverse against grid search.
    Params,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Theorem,
        Suite::Planar,
        Suite::Antipodality,
        Suite::Roundtrip,
        Suite::Ode,
        Suite::Params,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Theorem => "theorem",
            Suite::Planar => "planar",
            Suite::Antipodality => "antipodality",
            Suite::Roundtrip => "roundtrip",
            Suite::Ode => "ode",
            Suite::Params => "params",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown suite '{s}'"))
    }
}

/// Result of one property suite.
///
/// `worst` is the largest observed value of the suite's error measure:
/// `π - angle_sum` for `theorem`, `|angle_sum - π|` for `planar`, and an
/// absolute deviation for the others. A trial violates when that measure
/// exceeds `tolerance`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteResult {
    pub suite: Suite,
    pub trials: usize,
    pub seed: u64,
    pub tolerance: f64,
    pub violations: usize,
    pub worst: f64,
    /// Lowest-index violating input.
    pub witness: Option<String>,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.violations == 0
    }
}

type Trial = (f64, usize, Option<(usize, String)>);

fn merge(a: Trial, b: Trial) -> Trial {
    let first = match (a.2, b.2) {
        (Some(x), Some(y)) => Some(if y.0 < x.0 { y } else { x }),
        (x, y) => x.or(y),
    };
    (a.0.max(b.0), a.1 + b.1, first)
}

fn judge(i: usize, err: f64, tol: f64, witness: impl FnOnce() -> String) -> Trial {
    if err <= tol {
        (err, 0, None)
    } else {
        (
            if err.is_nan() { f64::INFINITY } else { err },
            1,
            Some((i, witness())),
        )
    }
}

/// Runs `suite` for `trials` seeded trials. `tol` applies to the theorem,
/// planar and antipodality suites; the oracle suites use their own pinned
/// tolerances.
pub fn run_suite(suite: Suite, trials: usize, seed: u64, tol: f64, exec: Execution) -> SuiteResult {
    let bounds = SampleBox::default();
    let tolerance = match suite {
        Suite::Theorem | Suite::Planar | Suite::Antipodality => tol,
        Suite::Roundtrip => ROUND_TRIP_TOL,
        Suite::Ode => ODE_TOL,
        Suite::Params => SEARCH_TOL,
    };
    let trial = |i: usize| -> Trial {
        let mut rng = trial_rng(seed, i);
        match suite {
            Suite::Theorem => {
                let tri = random_triangle(&mut rng, bounds);
                let err = angle_sum(&tri).map_or(f64::INFINITY, |s| PI - s);
                judge(i, err, tolerance, || format!("{:?}", tri.vertices()))
            }
            Suite::Planar => {
                let (tri, _) = random_coordinate_plane_triangle(&mut rng, bounds);
                let err = match (angle_sum(&tri), coplanarity_test(&tri)) {
                    (Ok(s), Ok(c)) if c.coplanar => (s - PI).abs(),
                    _ => f64::INFINITY,
                };
                judge(i, err, tolerance, || format!("{:?}", tri.vertices()))
            }
            Suite::Antipodality => {
                let tri = random_triangle(&mut rng, bounds);
                let err = tangent_directions(&tri).map_or(f64::INFINITY, |t| {
                    (t.t20 + t.t12)
                        .norm()
                        .max((t.t30 + t.t13).norm())
                        .max((t.t32 + t.t23).norm())
                });
                judge(i, err, tolerance, || format!("{:?}", tri.vertices()))
            }
            Suite::Roundtrip => {
                let p = random_curve_params(&mut rng, CASES[i % 4], CURVE_T_MAX);
                let err = params_from_endpoint(curve_point(&p)).map_or(f64::INFINITY, |q| {
                    wrap_angle(q.dir.phi - p.dir.phi)
                        .abs()
                        .max((q.dir.theta - p.dir.theta).abs())
                        .max((q.t - p.t).abs())
                });
                judge(i, err, tolerance, || format!("{p:?}"))
            }
            Suite::Ode => {
                let p = random_curve_params(&mut rng, BranchCase::Generic, ODE_T_MAX);
                let err = ode_oracle_curve(p.dir, p.t, ODE_STEPS)
                    .map_or(f64::INFINITY, |q| q.max_abs_diff(&curve_point(&p)));
                judge(i, err, tolerance, || format!("{p:?}"))
            }
            Suite::Params => {
                let target = random_endpoint(&mut rng, CASES[i % 4], bounds);
                let err = match (
                    params_from_endpoint(target),
                    brute_force_params(target, SEARCH_GRID),
                ) {
                    (Ok(a), Ok(b)) => (a.dir.unit_vector() - b.params.dir.unit_vector())
                        .norm()
                        .max((a.t - b.params.t).abs()),
                    _ => f64::INFINITY,
                };
                judge(i, err, tolerance, || format!("{target:?}"))
            }
        }
    };
    let (worst, violations, first) =
        map_reduce(trials, exec, || (f64::NEG_INFINITY, 0, None), trial, merge);
    SuiteResult {
        suite,
        trials,
        seed,
        tolerance,
        violations,
        worst,
        witness: first.map(|(_, w)| w),
    }
}
