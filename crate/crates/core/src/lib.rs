//! Translation curves and translation triangles in Sol geometry.
//!
//! Sol is modelled in homogeneous coordinates `(1, x, y, z)` with group law
//! `(a,b,c)(x,y,z) = (x + a e^-z, y + b e^z, z + c)` and metric
//! `ds² = e^{2z} dx² + e^{-2z} dy² + dz²`.
//!
//! - [`sol`]: points, translations, the origin stabilizer and the metric.
//! - [`curves`]: translation curves from the origin, their inverse problem and
//!   the translation distance.
//! - [`triangles`]: interior angles of translation triangles.
//! - [`verify`]: independent oracles and seeded randomized checks.
//!
//! Batch work in [`verify`] runs on rayon when the `parallel` feature is on.

pub mod curves;
pub mod error;
pub mod par;
pub mod sol;
pub mod triangles;
pub mod verify;

pub use curves::{
    curve_point, curve_tangent, params_from_endpoint, sample_curve, solve_endpoint,
    translation_distance, BranchCase, CurveParams, Direction, EndpointSolution,
};
pub use error::{Result, SolError};
pub use par::Execution;
pub use sol::{
    apply, conjugate, group_multiply, sol_angle, stabilizer_elements, translation_to, IsometryKind,
    MetricTensor, SolIsometry, SolPoint,
};
pub use triangles::{
    angle_sum, coplanarity_test, interior_angles, is_coordinate_planar, normalize, report,
    tangent_directions, vertex_images, Triangle, TriangleReport,
};
