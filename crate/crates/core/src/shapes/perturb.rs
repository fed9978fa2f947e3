use std::f64::consts::FRAC_PI_2;

use super::pose::Pose;
use super::regular::solve_regular_triangle_params;
use super::reuleaux::polar_reuleaux_caps;
use crate::body::{hull_of_caps, CircularArc, ConvexBody};
use crate::consts::TOL_OPT;
use crate::error::{GeometryError, Result};
use crate::sphere::SpherePoint;

fn width_guard(k: ConvexBody, w: f64, eps: f64) -> Result<ConvexBody> {
    let (measured, _) = k.width_direct()?;
    if (measured - w).abs() > TOL_OPT {
        return Err(GeometryError::EpsTooLarge { eps, w, measured });
    }
    Ok(k)
}

/// Vertices `v1, v2, v3^ε` of the perturbed triangle: `T_w` at `pose` with its
/// third vertex pushed a distance `ε` further along the edge from `v2`.
pub fn perturbed_triangle_vertices(w: f64, eps: f64, pose: Pose) -> Result<[SpherePoint; 3]> {
    let spec = solve_regular_triangle_params(w)?.with_pose(pose);
    if !(eps >= 0.0) {
        return Err(GeometryError::OutOfRange {
            value: eps,
            range: "[0, ∞)",
        });
    }
    let [v1, v2, v3] = spec.vertices();
    let back = v3.direction_to(&v2).expect("distinct vertices");
    Ok([v1, v2, v3.travel(&-back, eps)])
}

/// `K_ε = [v1, v2, v3^ε]`, rejected with `EpsTooLarge` once its width is no
/// longer `w`.
pub fn perturbed_triangle(w: f64, eps: f64, pose: Pose) -> Result<ConvexBody> {
    let [a, b, c] = perturbed_triangle_vertices(w, eps, pose)?;
    let k = ConvexBody::from_arcs(vec![
        CircularArc::segment(a, b),
        CircularArc::segment(b, c),
        CircularArc::segment(c, a),
    ])?;
    width_guard(k, w, eps)
}

/// The point `y` at distance `ε` beyond the midpoint `m1` of the first
/// circular arc of `U°_{π−w}`, on the ray from the first cap center.
pub fn perturbed_polar_reuleaux_tip(w: f64, eps: f64, pose: Pose) -> Result<SpherePoint> {
    let caps = polar_reuleaux_caps(w, &pose)?;
    if !(eps >= 0.0) {
        return Err(GeometryError::OutOfRange {
            value: eps,
            range: "[0, ∞)",
        });
    }
    let (x1, rho) = caps[0];
    let out = -x1
        .direction_to(&pose.center)
        .expect("cap center off the pose center");
    Ok(x1.travel(&out, rho + eps))
}

/// `K_ε = conv(U°_{π−w} ∪ {y})` with `d(m1, y) = ε`, rejected with
/// `EpsTooLarge` once its width is no longer `w`.
pub fn perturbed_polar_reuleaux(w: f64, eps: f64, pose: Pose) -> Result<ConvexBody> {
    let caps = polar_reuleaux_caps(w, &pose)?;
    let y = perturbed_polar_reuleaux_tip(w, eps, pose)?;
    if eps == 0.0 {
        return hull_of_caps(&caps, &[]);
    }
    if w - FRAC_PI_2 + eps >= FRAC_PI_2 {
        return Err(GeometryError::EpsTooLarge {
            eps,
            w,
            measured: f64::NAN,
        });
    }
    width_guard(hull_of_caps(&caps, &[y])?, w, eps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::{polar_reuleaux, regular_triangle};
    use crate::sphere::geodesic_distance;

    #[test]
    fn zero_eps_is_unperturbed() {
        let pose = Pose::new(SpherePoint::new(0.1, 0.2, 0.9).unwrap(), 0.7);
        let t = perturbed_triangle(1.2, 0.0, pose).unwrap();
        assert!(t.hausdorff(&regular_triangle(1.2, pose).unwrap()) < 1e-12);
        let u = perturbed_polar_reuleaux(2.0, 0.0, pose).unwrap();
        assert!(u.hausdorff(&polar_reuleaux(2.0, pose).unwrap()) < 1e-12);
    }

    #[test]
    fn triangle_vertex_slides_along_edge() {
        let [_, b, c] = perturbed_triangle_vertices(1.0, 0.01, Pose::default()).unwrap();
        let s = solve_regular_triangle_params(1.0).unwrap();
        assert!((geodesic_distance(&b, &c) - (s.a + 0.01)).abs() < 1e-14);
        let k = perturbed_triangle(1.0, 0.01, Pose::default()).unwrap();
        assert!((k.width_direct().unwrap().0 - 1.0).abs() < 1e-9);
    }

    #[test]
    fn polar_reuleaux_tip_distance() {
        let pose = Pose::default();
        let eps = 1e-3;
        let k = perturbed_polar_reuleaux(2.0, eps, pose).unwrap();
        let u = polar_reuleaux(2.0, pose).unwrap();
        assert!((k.hausdorff(&u) - eps).abs() < 1e-9, "{}", k.hausdorff(&u));
        assert!(k.area() > u.area());
    }
}
