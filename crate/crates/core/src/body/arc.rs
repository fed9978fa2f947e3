use std::f64::consts::{FRAC_PI_2, TAU};

use nalgebra::{Rotation3, Vector3};
use serde::{Deserialize, Serialize};

use crate::sphere::{geodesic_distance, ArcGeom, Circle, SpherePoint};

/// An arc of the circle of spherical radius `radius` about `center`, run
/// counterclockwise about `center` from `start` to `end`; the body lies on the
/// center side. Radius π/2 gives a geodesic segment whose center is the pole on
/// the body side. A start equal to the end denotes the full circle.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CircularArc {
    pub center: SpherePoint,
    pub radius: f64,
    pub start: SpherePoint,
    pub end: SpherePoint,
}

impl CircularArc {
    pub fn new(center: SpherePoint, radius: f64, start: SpherePoint, end: SpherePoint) -> Self {
        Self {
            center,
            radius,
            start,
            end,
        }
    }

    /// The geodesic segment from `a` to `b` traversed with the body on the left.
    pub fn segment(a: SpherePoint, b: SpherePoint) -> Self {
        Self {
            center: SpherePoint::normalized(a.cross(&b)),
            radius: FRAC_PI_2,
            start: a,
            end: b,
        }
    }

    /// The full boundary circle of the cap `B(center, radius)`.
    pub fn full_circle(center: SpherePoint, radius: f64) -> Self {
        let p = Circle::new(center, radius).point_at(0.0);
        Self {
            center,
            radius,
            start: p,
            end: p,
        }
    }

    pub fn is_geodesic(&self) -> bool {
        (self.radius - FRAC_PI_2).abs() < 1e-12
    }

    /// Parametrisation with `phi0 = 0` at `start`.
    pub fn geom(&self) -> ArcGeom {
        let c = self.center.vector();
        let mut u = self.start.vector() - c * c.dot(self.start.vector());
        if u.norm() < 1e-300 {
            u = crate::sphere::reference_tangent(&self.center);
        }
        let circle = Circle::with_frame(self.center, self.radius, u.normalize());
        let span = if geodesic_distance(&self.start, &self.end) < 1e-13 {
            TAU
        } else {
            let a = circle.azimuth(&self.end);
            if a == 0.0 {
                TAU
            } else {
                a
            }
        };
        ArcGeom {
            circle,
            phi0: 0.0,
            span,
        }
    }

    /// Central angle swept about the center, in (0, 2π].
    pub fn span(&self) -> f64 {
        self.geom().span
    }

    pub fn length(&self) -> f64 {
        self.span() * self.radius.sin()
    }

    pub fn point_at_fraction(&self, s: f64) -> SpherePoint {
        let g = self.geom();
        g.point_at(g.span * s)
    }

    pub fn midpoint(&self) -> SpherePoint {
        self.point_at_fraction(0.5)
    }

    /// Unit tangent in the direction of travel at a point `y` of the arc.
    pub fn tangent_at(&self, y: &SpherePoint) -> Vector3<f64> {
        self.center.cross(y).normalize()
    }

    /// Outward unit normal of the supporting hemisphere at the boundary point
    /// `y`, which is the point of the polar body dual to `y`'s support.
    pub fn outward_normal(&self, y: &SpherePoint) -> SpherePoint {
        let (s, c) = self.radius.sin_cos();
        SpherePoint::normalized((y.vector() * c - self.center.vector()) / s)
    }

    pub fn rotate(&self, r: &Rotation3<f64>) -> Self {
        Self {
            center: self.center.rotate(r),
            radius: self.radius,
            start: self.start.rotate(r),
            end: self.end.rotate(r),
        }
    }

    /// Largest deviation of the endpoints from the supporting circle.
    pub fn endpoint_deviation(&self) -> f64 {
        (geodesic_distance(&self.center, &self.start) - self.radius)
            .abs()
            .max((geodesic_distance(&self.center, &self.end) - self.radius).abs())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn quarter_geodesic() {
        let a = CircularArc::segment(SpherePoint::x_axis(), SpherePoint::y_axis());
        assert_eq!(a.center, SpherePoint::z_axis());
        assert!((a.span() - FRAC_PI_2).abs() < 1e-15);
        assert!((a.length() - FRAC_PI_2).abs() < 1e-15);
        let m = a.midpoint();
        assert!((m.coords()[0] - m.coords()[1]).abs() < 1e-15);
        let t = a.tangent_at(&SpherePoint::x_axis());
        assert!((t - Vector3::y()).norm() < 1e-15);
        assert!(geodesic_distance(&a.outward_normal(&m), &-SpherePoint::z_axis()) < 1e-15);
    }

    #[test]
    fn full_circle_span() {
        let a = CircularArc::full_circle(SpherePoint::z_axis(), 0.5);
        assert_eq!(a.span(), TAU);
        assert!((a.length() - TAU * 0.5f64.sin()).abs() < 1e-14);
        assert!(a.endpoint_deviation() < 1e-15);
    }

    #[test]
    fn long_arc_span() {
        let c = Circle::new(SpherePoint::z_axis(), 1.0);
        let a = CircularArc::new(c.axis, 1.0, c.point_at(0.3), c.point_at(0.3 + 1.5 * PI));
        assert!((a.span() - 1.5 * PI).abs() < 1e-12);
    }
}
