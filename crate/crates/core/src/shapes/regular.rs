use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, PI, TAU};

use super::pose::Pose;
use super::reuleaux::regular_triangle_vertices;
use crate::body::{CircularArc, ConvexBody};
use crate::error::{GeometryError, Result};
use crate::numeric::bisect;
use crate::polar::polar_body;
use crate::sphere::SpherePoint;

/// Parameters of the regular (equilateral) triangle `T_w` of width `w`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RegularTriangleSpec {
    pub w: f64,
    /// Inradius `r(T_w)`.
    pub r: f64,
    /// Circumradius, `w − r`.
    pub big_r: f64,
    /// Side length `a_w`.
    pub a: f64,
    /// Interior angle `α_w`.
    pub alpha: f64,
    pub pose: Pose,
}

/// Solves `r + arctan(2 tan r) = w` for the inradius of `T_w`. Splitting the
/// triangle at its center into six right triangles with angle π/3 at the
/// center, Napier's rule gives `tan r = tan R·cos(π/3)`, and the width of a
/// regular triangle is its height `r + R`.
pub fn solve_regular_triangle_params(w: f64) -> Result<RegularTriangleSpec> {
    if !(w > 0.0 && w <= FRAC_PI_2 + 1e-12) {
        return Err(GeometryError::WidthOutOfRange {
            w,
            range: "(0, π/2]",
        });
    }
    let w = w.min(FRAC_PI_2);
    let r = bisect(|r| r + (2.0 * r.tan()).atan() - w, 0.0, 0.5 * w, 1e-16);
    let big_r = w - r;
    let a = 2.0 * (big_r.sin() * FRAC_PI_3.sin()).asin();
    let alpha = 2.0 * (r.sin() / big_r.sin()).clamp(-1.0, 1.0).asin();
    Ok(RegularTriangleSpec {
        w,
        r,
        big_r,
        a,
        alpha,
        pose: Pose::default(),
    })
}

impl RegularTriangleSpec {
    pub fn with_pose(mut self, pose: Pose) -> Self {
        self.pose = pose;
        self
    }

    /// Vertices in counterclockwise order, the first at the pose azimuth.
    pub fn vertices(&self) -> [SpherePoint; 3] {
        let p = &self.pose;
        [0.0, 1.0, 2.0].map(|k| p.point(self.big_r, k * TAU / 3.0))
    }

    pub fn realize(&self) -> ConvexBody {
        let [v0, v1, v2] = self.vertices();
        ConvexBody::from_arcs(vec![
            CircularArc::segment(v0, v1),
            CircularArc::segment(v1, v2),
            CircularArc::segment(v2, v0),
        ])
        .expect("regular triangle is a valid body")
    }
}

/// The regular triangle `T_w` of width `w ∈ (0, π/2]` placed at `pose`.
pub fn regular_triangle(w: f64, pose: Pose) -> Result<ConvexBody> {
    Ok(solve_regular_triangle_params(w)?.with_pose(pose).realize())
}

/// The regular triangle of width `w ∈ (0, π)`. Up to π/2 this is
/// [`regular_triangle`]; above π/2 it is the polar of the regular triangle of
/// side `π − w`, whose width is no longer inradius plus circumradius.
pub fn regular_triangle_of_width(w: f64, pose: Pose) -> Result<ConvexBody> {
    if w <= FRAC_PI_2 {
        return regular_triangle(w, pose);
    }
    if w >= PI {
        return Err(GeometryError::WidthOutOfRange {
            w, range: "(0, π)"
        });
    }
    let anti = pose.antipode();
    let v = regular_triangle_vertices(PI - w, &anti);
    let t = ConvexBody::from_arcs(vec![
        CircularArc::segment(v[0], v[1]),
        CircularArc::segment(v[1], v[2]),
        CircularArc::segment(v[2], v[0]),
    ])?;
    polar_body(&t)
}

/// Inradius `r(T_w)` of the regular triangle of width `w ∈ (0, π)`; above π/2
/// it is `π/2 −` the circumradius of the regular triangle of side `π − w`.
pub fn regular_triangle_inradius(w: f64) -> Result<f64> {
    if w <= FRAC_PI_2 {
        return Ok(solve_regular_triangle_params(w)?.r);
    }
    if w >= PI {
        return Err(GeometryError::WidthOutOfRange {
            w, range: "(0, π)"
        });
    }
    Ok(FRAC_PI_2 - ((0.5 * (PI - w)).sin() / FRAC_PI_3.sin()).asin())
}
