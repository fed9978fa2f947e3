use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, PI, TAU};

use super::pose::Pose;
use crate::body::{hull_of_caps, Cap, CircularArc, ConvexBody};
use crate::error::{GeometryError, Result};
use crate::sphere::SpherePoint;

/// Vertices of the regular triangle with side `side` centered at the pose.
pub fn regular_triangle_vertices(side: f64, pose: &Pose) -> [SpherePoint; 3] {
    let circum = ((0.5 * side).sin() / FRAC_PI_3.sin())
        .clamp(-1.0, 1.0)
        .asin();
    [0.0, 1.0, 2.0].map(|k| pose.point(circum, k * TAU / 3.0))
}

/// The Reuleaux triangle `U_r`: the intersection of the three caps of radius
/// `r` centered at the vertices of a regular triangle of side `r`.
pub fn reuleaux_triangle(r: f64, pose: Pose) -> Result<ConvexBody> {
    if !(r > 0.0 && r <= FRAC_PI_2 + 1e-12) {
        return Err(GeometryError::RadiusOutOfRange {
            r,
            range: "(0, π/2]",
        });
    }
    let r = r.min(FRAC_PI_2);
    let v = regular_triangle_vertices(r, &pose);
    // the arc about v_k joins the two other vertices
    ConvexBody::from_arcs(
        (0..3)
            .map(|k| CircularArc::new(v[k], r, v[(k + 1) % 3], v[(k + 2) % 3]))
            .collect(),
    )
}

/// The three caps whose convex hull is the polar Reuleaux triangle of width `w`.
pub fn polar_reuleaux_caps(w: f64, pose: &Pose) -> Result<[Cap; 3]> {
    if !(w > FRAC_PI_2 && w < PI) {
        return Err(GeometryError::WidthOutOfRange {
            w,
            range: "(π/2, π)",
        });
    }
    let v = regular_triangle_vertices(PI - w, pose);
    Ok(v.map(|x| (x, w - FRAC_PI_2)))
}

/// The polar Reuleaux triangle `U°_{π−w}` of width `w ∈ (π/2, π)`: the convex
/// hull of three caps of radius `w − π/2` centered at a regular triangle of
/// side `π − w`. It is the polar of `reuleaux_triangle(π − w, pose.antipode())`.
pub fn polar_reuleaux(w: f64, pose: Pose) -> Result<ConvexBody> {
    let caps = polar_reuleaux_caps(w, &pose)?;
    hull_of_caps(&caps, &[])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polar::polar_body;

    #[test]
    fn reuleaux_measurements() {
        for r in [0.3, 1.0, 1.4] {
            let u = reuleaux_triangle(r, Pose::default()).unwrap();
            let (w, _) = u.width_direct().unwrap();
            assert!((w - r).abs() < 1e-9, "{w}");
            assert!((u.diameter().unwrap().0 - r).abs() < 1e-9);
            assert!(u.constant_width_spread() < 1e-9);
        }
        assert!(reuleaux_triangle(1.7, Pose::default()).is_err());
    }

    #[test]
    fn reuleaux_of_quarter_width_is_octant() {
        let u = reuleaux_triangle(FRAC_PI_2, Pose::default()).unwrap();
        assert!((u.area() - FRAC_PI_2).abs() < 1e-12);
    }

    #[test]
    fn polar_reuleaux_two_routes() {
        let pose = Pose::new(SpherePoint::new(0.2, 0.4, 0.7).unwrap(), 0.3);
        for w in [1.7, 2.0, 2.5] {
            let a = polar_reuleaux(w, pose).unwrap();
            let b = polar_body(&reuleaux_triangle(PI - w, pose.antipode()).unwrap()).unwrap();
            assert!(a.hausdorff(&b) < 1e-8, "{}", a.hausdorff(&b));
            assert!((a.width_direct().unwrap().0 - w).abs() < 1e-8);
        }
    }
}
