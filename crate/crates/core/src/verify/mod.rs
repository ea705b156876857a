//! Independent oracles and randomized checks for the curve and triangle code.
//!
//! Nothing in here is used by the main pipeline. The integrator and the
//! parameter search only ever call the forward curve map, so they can be
//! compared against the closed forms in [`crate::curves`].

mod ode;
mod sampling;
mod scan;
mod search;
mod suites;
mod sweep;

pub use ode::{ode_oracle_curve, rk4_step};
pub use sampling::{
    random_coordinate_plane_triangle, random_curve_params, random_endpoint, random_triangle,
    trial_rng, SampleBox,
};
pub use scan::{planar_scan, theorem_scan, theorem_scan_with, PlanarScanResult, ScanResult};
pub use search::{brute_force_params, SearchOutcome};
pub use suites::{run_suite, Suite, SuiteResult};
pub use sweep::{
    table_spec, table_sweep, table_sweep_with, Axis, SweepRow, SweepSpec, SweepValue, TABLE_VALUES,
};
