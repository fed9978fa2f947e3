use std::f64::consts::{PI, TAU};

use nalgebra::Vector3;

use super::point::{geodesic_distance, reference_tangent, SpherePoint};

/// Reduces an angle to [0, 2π).
pub fn wrap_angle(a: f64) -> f64 {
    let r = a.rem_euclid(TAU);
    if r >= TAU {
        0.0
    } else {
        r
    }
}

/// A circle on the sphere with an explicit tangent frame at its axis.
///
/// Points are `cos ρ·axis + sin ρ·(cos φ·e1 + sin φ·e2)` with `e2 = axis × e1`,
/// so increasing `φ` runs counterclockwise seen from outside above the axis.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Circle {
    pub axis: SpherePoint,
    pub radius: f64,
    pub e1: Vector3<f64>,
    pub e2: Vector3<f64>,
}

impl Circle {
    pub fn new(axis: SpherePoint, radius: f64) -> Self {
        let e1 = reference_tangent(&axis);
        Self::with_frame(axis, radius, e1)
    }

    /// `e1` must be a unit tangent vector at `axis`.
    pub fn with_frame(axis: SpherePoint, radius: f64, e1: Vector3<f64>) -> Self {
        let e2 = axis.vector().cross(&e1);
        Self {
            axis,
            radius,
            e1,
            e2,
        }
    }

    pub fn point_at(&self, phi: f64) -> SpherePoint {
        let (s, c) = self.radius.sin_cos();
        let u = self.e1 * phi.cos() + self.e2 * phi.sin();
        SpherePoint::normalized(self.axis.vector() * c + u * s)
    }

    /// Azimuth of `x` about the axis in [0, 2π); 0 when `x` is on the axis line.
    pub fn azimuth(&self, x: &SpherePoint) -> f64 {
        let v = x.vector();
        wrap_angle(v.dot(&self.e2).atan2(v.dot(&self.e1)))
    }
}

/// A counterclockwise piece of a [`Circle`] starting at azimuth `phi0` and
/// sweeping `span ∈ [0, 2π]`. Radius 0 pieces are single points.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ArcGeom {
    pub circle: Circle,
    pub phi0: f64,
    pub span: f64,
}

impl ArcGeom {
    pub fn point(axis: SpherePoint) -> Self {
        Self {
            circle: Circle::new(axis, 0.0),
            phi0: 0.0,
            span: 0.0,
        }
    }

    pub fn point_at(&self, t: f64) -> SpherePoint {
        self.circle.point_at(self.phi0 + t)
    }

    pub fn start(&self) -> SpherePoint {
        self.point_at(0.0)
    }

    pub fn end(&self) -> SpherePoint {
        self.point_at(self.span)
    }

    /// Offset of azimuth `phi` from `phi0`, in [0, 2π).
    pub fn offset(&self, phi: f64) -> f64 {
        wrap_angle(phi - self.phi0)
    }

    pub fn covers_azimuth(&self, phi: f64, slack: f64) -> bool {
        if self.span >= TAU - slack {
            return true;
        }
        let o = self.offset(phi);
        o <= self.span + slack || o >= TAU - slack
    }

    /// Exact geodesic distance from `x` to the nearest point of the piece,
    /// together with the arc parameter of that point.
    pub fn nearest(&self, x: &SpherePoint) -> (f64, f64) {
        let c = &self.circle;
        let dc = geodesic_distance(x, &c.axis);
        if c.radius == 0.0 {
            return (dc, 0.0);
        }
        let v = x.vector();
        let tangential = (v - c.axis.vector() * v.dot(c.axis.vector())).norm();
        if tangential < 1e-14 {
            // x on the axis line: every point of the circle is equidistant
            return ((dc - c.radius).abs(), 0.0);
        }
        let phi = c.azimuth(x);
        let o = self.offset(phi);
        if o <= self.span {
            return ((dc - c.radius).abs(), o);
        }
        let ds = geodesic_distance(x, &self.start());
        let de = geodesic_distance(x, &self.end());
        if ds <= de {
            (ds, 0.0)
        } else {
            (de, self.span)
        }
    }

    pub fn nearest_distance(&self, x: &SpherePoint) -> f64 {
        self.nearest(x).0
    }

    /// Exact distance from `x` to the farthest point of the piece and the
    /// parameter where it is attained.
    pub fn farthest(&self, x: &SpherePoint) -> (f64, f64) {
        let (d, t) = self.nearest(&-x);
        (PI - d, t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_2;

    fn sampled_min(g: &ArcGeom, x: &SpherePoint) -> f64 {
        (0..=20000)
            .map(|i| geodesic_distance(x, &g.point_at(g.span * i as f64 / 20000.0)))
            .fold(f64::INFINITY, f64::min)
    }

    #[test]
    fn circle_points_have_the_right_radius() {
        let c = Circle::new(SpherePoint::new(0.2, -0.4, 0.8).unwrap(), 0.7);
        for k in 0..10 {
            let p = c.point_at(k as f64 * 0.7);
            assert!((geodesic_distance(&p, &c.axis) - 0.7).abs() < 1e-14);
            assert!((c.azimuth(&p) - wrap_angle(k as f64 * 0.7)).abs() < 1e-12);
        }
    }

    #[test]
    fn nearest_matches_sampling() {
        let c = Circle::new(SpherePoint::z_axis(), 0.9);
        let g = ArcGeom {
            circle: c,
            phi0: 0.4,
            span: 2.0,
        };
        for x in [
            SpherePoint::new(1.0, 0.2, 0.3).unwrap(),
            SpherePoint::new(-1.0, -0.5, 0.1).unwrap(),
            SpherePoint::new(0.1, 0.9, -0.6).unwrap(),
        ] {
            let exact = g.nearest_distance(&x);
            assert!((exact - sampled_min(&g, &x)).abs() < 1e-7);
        }
        assert!((g.nearest_distance(&SpherePoint::z_axis()) - 0.9).abs() < 1e-15);
        let (d, _) = g.farthest(&SpherePoint::z_axis());
        assert!((d - 0.9).abs() < 1e-15);
    }

    #[test]
    fn full_geodesic_covers_everything() {
        let g = ArcGeom {
            circle: Circle::new(SpherePoint::x_axis(), FRAC_PI_2),
            phi0: 0.0,
            span: TAU,
        };
        assert!(g.covers_azimuth(5.0, 0.0));
        let (d, _) = g.farthest(&SpherePoint::y_axis());
        assert!((d - PI).abs() < 1e-12);
    }
}
