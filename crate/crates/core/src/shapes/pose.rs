use std::f64::consts::PI;

use nalgebra::Vector3;

use crate::sphere::{reference_tangent, SpherePoint};

/// Placement of a constructed body: the point where its center goes and the
/// azimuth of its first distinguished direction, measured counterclockwise
/// from a fixed reference tangent at that point.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Pose {
    pub center: SpherePoint,
    pub azimuth: f64,
}

impl Default for Pose {
    fn default() -> Self {
        Self {
            center: SpherePoint::z_axis(),
            azimuth: 0.0,
        }
    }
}

impl Pose {
    pub fn new(center: SpherePoint, azimuth: f64) -> Self {
        Self { center, azimuth }
    }

    /// Orthonormal tangent frame `(e1, e2)` at the center, `e1` at the pose azimuth.
    pub fn frame(&self) -> (Vector3<f64>, Vector3<f64>) {
        let c = self.center.vector();
        let r = reference_tangent(&self.center);
        let s = c.cross(&r);
        let e1 = r * self.azimuth.cos() + s * self.azimuth.sin();
        (e1, c.cross(&e1))
    }

    /// Unit tangent at the center in direction `phi` relative to the pose.
    pub fn direction(&self, phi: f64) -> Vector3<f64> {
        let (e1, e2) = self.frame();
        e1 * phi.cos() + e2 * phi.sin()
    }

    /// The point at distance `d` from the center in direction `phi`.
    pub fn point(&self, d: f64, phi: f64) -> SpherePoint {
        self.center.travel(&self.direction(phi), d)
    }

    /// Azimuth of `x` as seen from the center, relative to the pose.
    pub fn azimuth_of(&self, x: &SpherePoint) -> f64 {
        let (e1, e2) = self.frame();
        let v = x.vector();
        v.dot(&e2)
            .atan2(v.dot(&e1))
            .rem_euclid(std::f64::consts::TAU)
    }

    /// The pose whose directions `phi` land on the antipodes of this pose's
    /// directions `−phi`: `antipode().point(d, −φ) = −point(d, φ)`.
    pub fn antipode(&self) -> Self {
        Self {
            center: -self.center,
            azimuth: PI - self.azimuth,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sphere::geodesic_distance;

    #[test]
    fn points_lie_at_the_requested_distance() {
        let p = Pose::new(SpherePoint::new(0.3, -0.2, 0.5).unwrap(), 0.4);
        for k in 0..6 {
            let x = p.point(0.8, k as f64);
            assert!((geodesic_distance(&x, &p.center) - 0.8).abs() < 1e-14);
            let a = p.azimuth_of(&x);
            let diff = (a - k as f64).rem_euclid(std::f64::consts::TAU);
            assert!(diff.min(std::f64::consts::TAU - diff) < 1e-12, "{k} {a}");
        }
    }

    #[test]
    fn antipodal_pose() {
        for c in [
            SpherePoint::new(0.3, -0.2, 0.5).unwrap(),
            SpherePoint::z_axis(),
        ] {
            let p = Pose::new(c, 0.9);
            let q = p.antipode();
            for phi in [0.0, 1.0, 2.5] {
                assert!(geodesic_distance(&q.point(0.7, -phi), &-p.point(0.7, phi)) < 1e-14);
            }
        }
    }
}
