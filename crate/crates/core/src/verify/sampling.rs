use std::f64::consts::{FRAC_PI_2, PI};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::curves::{BranchCase, CurveParams, Direction};
use crate::sol::SolPoint;
use crate::triangles::Triangle;

/// Vertex pairs closer than this (max-norm) are resampled.
pub const MIN_SAMPLE_SEPARATION: f64 = 1e-6;

/// Generator for trial `index` of a run seeded with `seed`. Each trial owns its
/// stream, so serial and parallel runs see the same samples.
pub fn trial_rng(seed: u64, index: usize) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed.wrapping_add(index as u64))
}

/// Axis-aligned cube `[lo, hi]^3` that random coordinates are drawn from.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SampleBox {
    pub lo: f64,
    pub hi: f64,
}

impl Default for SampleBox {
    fn default() -> Self {
        Self { lo: -5.0, hi: 5.0 }
    }
}

impl SampleBox {
    pub fn new(lo: f64, hi: f64) -> Option<Self> {
        (lo.is_finite() && hi.is_finite() && lo < hi).then_some(Self { lo, hi })
    }

    fn coord<R: Rng>(&self, rng: &mut R) -> f64 {
        rng.random_range(self.lo..=self.hi)
    }

    fn point<R: Rng>(&self, rng: &mut R) -> SolPoint {
        SolPoint::new(self.coord(rng), self.coord(rng), self.coord(rng))
    }
}

fn distinct(points: &[SolPoint; 3]) -> bool {
    let far = |a: &SolPoint, b: &SolPoint| a.max_abs_diff(b) >= MIN_SAMPLE_SEPARATION;
    far(&points[0], &points[1]) && far(&points[0], &points[2]) && far(&points[1], &points[2])
}

/// Three points uniform in the box, resampled until pairwise separated.
pub fn random_triangle<R: Rng>(rng: &mut R, bounds: SampleBox) -> Triangle {
    loop {
        let v = [bounds.point(rng), bounds.point(rng), bounds.point(rng)];
        if distinct(&v) {
            if let Ok(t) = Triangle::new(v[0], v[1], v[2]) {
                return t;
            }
        }
    }
}

/// A triangle inside a coordinate plane (`axis` coordinate zero) or a plane
/// parallel to one. Returns the axis that is held fixed.
pub fn random_coordinate_plane_triangle<R: Rng>(
    rng: &mut R,
    bounds: SampleBox,
) -> (Triangle, usize) {
    let axis = rng.random_range(0..3);
    let level = if rng.random_bool(0.5) {
        0.0
    } else {
        bounds.coord(rng)
    };
    loop {
        let mut v = [bounds.point(rng), bounds.point(rng), bounds.point(rng)];
        for p in &mut v {
            match axis {
                0 => p.x = level,
                1 => p.y = level,
                _ => p.z = level,
            }
        }
        if distinct(&v) {
            if let Ok(t) = Triangle::new(v[0], v[1], v[2]) {
                return (t, axis);
            }
        }
    }
}

fn open_unit<R: Rng>(rng: &mut R) -> f64 {
    // (0, 1]
    1.0 - rng.random::<f64>()
}

fn random_phi<R: Rng>(rng: &mut R) -> f64 {
    PI - 2.0 * PI * rng.random::<f64>()
}

fn random_tilt<R: Rng>(rng: &mut R) -> f64 {
    loop {
        let th = rng.random_range(-FRAC_PI_2..FRAC_PI_2);
        if th != 0.0 && th != -FRAC_PI_2 {
            return th;
        }
    }
}

/// Random curve parameters with `t ∈ (0, t_max]` whose endpoint falls in the
/// given branch case.
pub fn random_curve_params<R: Rng>(rng: &mut R, case: BranchCase, t_max: f64) -> CurveParams {
    let t = t_max * open_unit(rng);
    let (phi, theta) = match case {
        BranchCase::Generic => (random_phi(rng), random_tilt(rng)),
        BranchCase::Y0 => (
            if rng.random_bool(0.5) { 0.0 } else { PI },
            random_tilt(rng),
        ),
        BranchCase::Z0 => (random_phi(rng), 0.0),
        BranchCase::Axis => (
            0.0,
            if rng.random_bool(0.5) {
                FRAC_PI_2
            } else {
                -FRAC_PI_2
            },
        ),
    };
    CurveParams {
        dir: Direction { phi, theta },
        t,
    }
}

/// Random non-origin endpoint in the requested branch case.
pub fn random_endpoint<R: Rng>(rng: &mut R, case: BranchCase, bounds: SampleBox) -> SolPoint {
    loop {
        let mut p = bounds.point(rng);
        match case {
            BranchCase::Generic => {}
            BranchCase::Y0 => p.y = 0.0,
            BranchCase::Z0 => p.z = 0.0,
            BranchCase::Axis => {
                p.x = 0.0;
                p.y = 0.0;
            }
        }
        if BranchCase::classify(p) == case
            && p.max_abs_diff(&SolPoint::ORIGIN) >= MIN_SAMPLE_SEPARATION
        {
            return p;
        }
    }
}
