//! Translation triangles and their interior angles.
//!
//! Every angle is measured at the origin: vertex `A_i` is first moved to the
//! origin by `T_{A_i}^{-1}`, where the metric is Euclidean. The six outgoing
//! unit tangents `t_i^j` point from the origin toward the image `A_i^j` of
//! vertex `i` under `T_{A_j}^{-1}` (`j = 0` meaning no translation).

use nalgebra::{SMatrix, Vector3};
use serde::{Deserialize, Serialize};

use crate::curves::{solve_endpoint, BranchCase, EndpointSolution};
use crate::error::{Result, SolError};
use crate::sol::{euclidean_angle, translation_to, SolPoint};

/// Minimum max-norm separation between distinct vertices.
pub const VERTEX_SEPARATION: f64 = 1e-10;
/// Smallest singular value below which the six tangent endpoints count as coplanar.
pub const COPLANARITY_TOL: f64 = 1e-8;
/// Tolerance on `angle_sum - π` paired with [`COPLANARITY_TOL`].
pub const FLAT_SUM_TOL: f64 = 1e-7;
/// Slack allowed below π before the angle-sum bound counts as violated.
pub const THEOREM_TOL: f64 = 1e-9;
/// Tangent pairs closer than this to parallel or antiparallel are flagged.
pub const DEGENERACY_TOL: f64 = 1e-10;
/// Tolerance for "vertices share a coordinate".
pub const SHARED_COORD_TOL: f64 = 1e-12;

/// Three pairwise distinct points of Sol.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Triangle {
    a1: SolPoint,
    a2: SolPoint,
    a3: SolPoint,
}

impl Triangle {
    pub fn new(a1: SolPoint, a2: SolPoint, a3: SolPoint) -> Result<Self> {
        for p in [a1, a2, a3] {
            p.ensure_finite("triangle vertex")?;
        }
        for (i, j, p, q) in [(1, 2, a1, a2), (1, 3, a1, a3), (2, 3, a2, a3)] {
            if p.max_abs_diff(&q) <= VERTEX_SEPARATION {
                return Err(SolError::DegenerateTriangle(i, j));
            }
        }
        Ok(Self { a1, a2, a3 })
    }

    /// Triangle with `A_1` at the origin.
    pub fn from_origin(a2: SolPoint, a3: SolPoint) -> Result<Self> {
        Self::new(SolPoint::ORIGIN, a2, a3)
    }

    pub fn vertices(&self) -> [SolPoint; 3] {
        [self.a1, self.a2, self.a3]
    }

    pub fn a1(&self) -> SolPoint {
        self.a1
    }

    pub fn a2(&self) -> SolPoint {
        self.a2
    }

    pub fn a3(&self) -> SolPoint {
        self.a3
    }

    /// Moves `A_1` to the origin with `T_{A_1}^{-1}`.
    pub fn normalize(&self) -> Triangle {
        if self.a1 == SolPoint::ORIGIN {
            return *self;
        }
        let back = translation_to(self.a1)
            .inverse()
            .expect("translations are invertible");
        let map = |p| {
            back.apply(p)
                .expect("translation preserves the homogeneous coordinate")
        };
        Triangle {
            a1: SolPoint::ORIGIN,
            a2: map(self.a2),
            a3: map(self.a3),
        }
    }

    /// Reorders vertices; `order` is a permutation of `[0, 1, 2]`.
    pub fn permuted(&self, order: [usize; 3]) -> Triangle {
        let v = self.vertices();
        Triangle {
            a1: v[order[0]],
            a2: v[order[1]],
            a3: v[order[2]],
        }
    }
}

pub fn normalize(tri: &Triangle) -> Triangle {
    tri.normalize()
}

/// Images of the vertices after moving `A_2` (superscript 2) or `A_3`
/// (superscript 3) to the origin. `A_2^0`, `A_3^0` are the normalized vertices.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct VertexImages {
    pub a1_2: SolPoint,
    pub a3_2: SolPoint,
    pub a1_3: SolPoint,
    pub a2_3: SolPoint,
    pub a2_0: SolPoint,
    pub a3_0: SolPoint,
}

pub fn vertex_images(tri: &Triangle) -> VertexImages {
    let n = tri.normalize();
    let from2 = translation_to(n.a2)
        .inverse()
        .expect("translations are invertible");
    let from3 = translation_to(n.a3)
        .inverse()
        .expect("translations are invertible");
    let map = |iso: &crate::sol::SolIsometry, p| {
        iso.apply(p)
            .expect("translation preserves the homogeneous coordinate")
    };
    VertexImages {
        a1_2: map(&from2, SolPoint::ORIGIN),
        a3_2: map(&from2, n.a3),
        a1_3: map(&from3, SolPoint::ORIGIN),
        a2_3: map(&from3, n.a2),
        a2_0: n.a2,
        a3_0: n.a3,
    }
}

/// Unit tangents at the origin; `tij` points toward `A_i^j`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TangentSet {
    pub t13: Vector3<f64>,
    pub t12: Vector3<f64>,
    pub t23: Vector3<f64>,
    pub t32: Vector3<f64>,
    pub t30: Vector3<f64>,
    pub t20: Vector3<f64>,
}

impl TangentSet {
    pub fn as_array(&self) -> [Vector3<f64>; 6] {
        [self.t13, self.t12, self.t23, self.t32, self.t30, self.t20]
    }
}

pub fn tangent_directions(tri: &Triangle) -> Result<TangentSet> {
    Ok(Analysis::solve(tri)?.tangents)
}

pub fn interior_angles(tri: &Triangle) -> Result<[f64; 3]> {
    Ok(Analysis::solve(tri)?.omega)
}

pub fn angle_sum(tri: &Triangle) -> Result<f64> {
    Ok(interior_angles(tri)?.iter().sum())
}

/// Smallest singular value of the centered 6×3 matrix of tangent endpoints.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Coplanarity {
    pub coplanar: bool,
    pub residual: f64,
}

pub fn coplanarity_test(tri: &Triangle) -> Result<Coplanarity> {
    Ok(coplanarity_of(&tangent_directions(tri)?))
}

fn coplanarity_of(t: &TangentSet) -> Coplanarity {
    let pts = t.as_array();
    let centroid = pts.iter().sum::<Vector3<f64>>() / 6.0;
    let m = SMatrix::<f64, 6, 3>::from_fn(|r, c| pts[r][c] - centroid[c]);
    let residual = m.svd(false, false).singular_values.min();
    Coplanarity {
        coplanar: residual < COPLANARITY_TOL,
        residual,
    }
}

/// True when all three vertices share an `x`, `y` or `z` coordinate, i.e.
/// they lie in a coordinate plane or a plane parallel to one.
pub fn is_coordinate_planar(tri: &Triangle) -> bool {
    let [a, b, c] = tri.vertices().map(SolPoint::to_array);
    (0..3)
        .any(|k| (a[k] - b[k]).abs() <= SHARED_COORD_TOL && (a[k] - c[k]).abs() <= SHARED_COORD_TOL)
}

struct Analysis {
    normalized: Triangle,
    images: VertexImages,
    tangents: TangentSet,
    omega: [f64; 3],
    // solutions for A_2^0, A_3^0, A_3^2
    sides: [EndpointSolution; 3],
    degenerate: bool,
}

impl Analysis {
    fn solve(tri: &Triangle) -> Result<Self> {
        let images = vertex_images(tri);
        let unit = |p: SolPoint| -> Result<(Vector3<f64>, EndpointSolution)> {
            let s = solve_endpoint(p)?;
            Ok((s.params.dir.unit_vector(), s))
        };
        let (t20, s20) = unit(images.a2_0)?;
        let (t30, s30) = unit(images.a3_0)?;
        let (t12, _) = unit(images.a1_2)?;
        let (t32, s32) = unit(images.a3_2)?;
        let (t13, _) = unit(images.a1_3)?;
        let (t23, _) = unit(images.a2_3)?;
        let tangents = TangentSet {
            t13,
            t12,
            t23,
            t32,
            t30,
            t20,
        };
        let pairs = [(t20, t30), (t12, t32), (t13, t23)];
        let mut omega = [0.0; 3];
        for (w, (u, v)) in omega.iter_mut().zip(pairs) {
            *w = euclidean_angle(&u, &v)?;
        }
        let degenerate = omega
            .iter()
            .any(|&w| !(DEGENERACY_TOL..=std::f64::consts::PI - DEGENERACY_TOL).contains(&w));
        Ok(Self {
            normalized: tri.normalize(),
            images,
            tangents,
            omega,
            sides: [s20, s30, s32],
            degenerate,
        })
    }
}

/// One curve parameter record, as used for the triangle sides.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SideReport {
    pub length: f64,
    pub phi: f64,
    pub theta: f64,
    pub case: BranchCase,
}

impl From<EndpointSolution> for SideReport {
    fn from(s: EndpointSolution) -> Self {
        Self {
            length: s.params.t,
            phi: s.params.phi(),
            theta: s.params.theta(),
            case: s.case,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tangents {
    pub t13: [f64; 3],
    pub t12: [f64; 3],
    pub t23: [f64; 3],
    pub t32: [f64; 3],
    pub t30: [f64; 3],
    pub t20: [f64; 3],
}

impl From<&TangentSet> for Tangents {
    fn from(t: &TangentSet) -> Self {
        let a = |v: Vector3<f64>| [v.x, v.y, v.z];
        Self {
            t13: a(t.t13),
            t12: a(t.t12),
            t23: a(t.t23),
            t32: a(t.t32),
            t30: a(t.t30),
            t20: a(t.t20),
        }
    }
}

/// Translation distances `d(A_1,A_2)`, `d(A_1,A_3)`, `d(A_2,A_3)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Sides {
    pub d12: SideReport,
    pub d13: SideReport,
    pub d23: SideReport,
}

/// Everything the angle pipeline computes for one triangle.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TriangleReport {
    pub vertices: [SolPoint; 3],
    pub normalized: [SolPoint; 3],
    pub images: VertexImages,
    pub tangents: Tangents,
    pub omega1: f64,
    pub omega2: f64,
    pub omega3: f64,
    pub angle_sum: f64,
    pub excess: f64,
    pub coplanar: bool,
    pub coplanarity_residual: f64,
    pub coordinate_planar: bool,
    pub degenerate: bool,
    pub sides: Sides,
}

impl TriangleReport {
    pub fn omega(&self) -> [f64; 3] {
        [self.omega1, self.omega2, self.omega3]
    }

    /// The angle-sum lower bound, checked with slack `tol`.
    pub fn satisfies_bound(&self, tol: f64) -> bool {
        self.angle_sum >= std::f64::consts::PI - tol
    }
}

pub fn report(tri: &Triangle) -> Result<TriangleReport> {
    let a = Analysis::solve(tri)?;
    let angle_sum: f64 = a.omega.iter().sum();
    let cop = coplanarity_of(&a.tangents);
    Ok(TriangleReport {
        vertices: tri.vertices(),
        normalized: a.normalized.vertices(),
        images: a.images,
        tangents: Tangents::from(&a.tangents),
        omega1: a.omega[0],
        omega2: a.omega[1],
        omega3: a.omega[2],
        angle_sum,
        excess: angle_sum - std::f64::consts::PI,
        coplanar: cop.coplanar,
        coplanarity_residual: cop.residual,
        coordinate_planar: is_coordinate_planar(tri),
        degenerate: a.degenerate,
        sides: Sides {
            d12: a.sides[0].into(),
            d13: a.sides[1].into(),
            d23: a.sides[2].into(),
        },
    })
}
