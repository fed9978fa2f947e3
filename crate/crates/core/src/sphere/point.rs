use std::ops::Neg;

use nalgebra::{Rotation3, Vector3};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{GeometryError, Result};

/// A point of the unit sphere S², stored as a unit vector of R³.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpherePoint(Vector3<f64>);

impl SpherePoint {
    /// Normalizes `(x, y, z)` onto the sphere.
    pub fn new(x: f64, y: f64, z: f64) -> Result<Self> {
        Self::from_vector(Vector3::new(x, y, z))
    }

    /// Normalizes `v` onto the sphere.
    pub fn from_vector(v: Vector3<f64>) -> Result<Self> {
        let n = v.norm();
        if !(n > 1e-300) || !n.is_finite() {
            return Err(GeometryError::ZeroVector);
        }
        Ok(Self(v / n))
    }

    /// Accepts `v` if its norm is 1 within `tolerance`, then renormalizes it.
    pub fn from_unit_checked(v: [f64; 3], tolerance: f64) -> Result<Self> {
        let v = Vector3::from(v);
        let norm = v.norm();
        if !norm.is_finite() || (norm - 1.0).abs() > tolerance {
            return Err(GeometryError::NotUnit { norm, tolerance });
        }
        Ok(Self(v / norm))
    }

    /// Normalizes, panicking on the zero vector. For internal constructions
    /// where the argument is nonzero by construction.
    pub(crate) fn normalized(v: Vector3<f64>) -> Self {
        Self::from_vector(v).expect("nonzero vector")
    }

    pub fn x_axis() -> Self {
        Self(Vector3::x())
    }

    pub fn y_axis() -> Self {
        Self(Vector3::y())
    }

    pub fn z_axis() -> Self {
        Self(Vector3::z())
    }

    pub fn vector(&self) -> &Vector3<f64> {
        &self.0
    }

    pub fn coords(&self) -> [f64; 3] {
        [self.0.x, self.0.y, self.0.z]
    }

    pub fn dot(&self, other: &SpherePoint) -> f64 {
        self.0.dot(&other.0)
    }

    pub fn cross(&self, other: &SpherePoint) -> Vector3<f64> {
        self.0.cross(&other.0)
    }

    /// Geodesic distance in [0, π].
    pub fn distance(&self, other: &SpherePoint) -> f64 {
        geodesic_distance(self, other)
    }

    /// The point at distance `t` along the geodesic leaving `self` in the
    /// tangent direction `dir` (which must be a unit vector orthogonal to `self`).
    pub fn travel(&self, dir: &Vector3<f64>, t: f64) -> SpherePoint {
        Self::normalized(self.0 * t.cos() + dir * t.sin())
    }

    /// Unit tangent vector at `self` pointing along the geodesic towards `to`,
    /// or `None` if `to` coincides with `self` or its antipode.
    pub fn direction_to(&self, to: &SpherePoint) -> Option<Vector3<f64>> {
        let t = to.0 - self.0 * self.0.dot(&to.0);
        let n = t.norm();
        (n > 1e-15).then(|| t / n)
    }

    /// Point at distance `t` from `self` along the geodesic through `to`.
    pub fn towards(&self, to: &SpherePoint, t: f64) -> Option<SpherePoint> {
        self.direction_to(to).map(|d| self.travel(&d, t))
    }

    /// Spherical midpoint of two non-antipodal points.
    pub fn midpoint(&self, other: &SpherePoint) -> SpherePoint {
        Self::normalized(self.0 + other.0)
    }

    pub fn rotate(&self, rotation: &Rotation3<f64>) -> SpherePoint {
        Self::normalized(rotation * self.0)
    }

    /// Lexicographic comparison of coordinates, used for canonical ordering.
    pub fn lex_cmp(&self, other: &SpherePoint) -> std::cmp::Ordering {
        self.coords()
            .iter()
            .zip(other.coords().iter())
            .map(|(a, b)| a.total_cmp(b))
            .find(|o| o.is_ne())
            .unwrap_or(std::cmp::Ordering::Equal)
    }
}

impl Neg for SpherePoint {
    type Output = SpherePoint;

    fn neg(self) -> SpherePoint {
        SpherePoint(-self.0)
    }
}

impl Neg for &SpherePoint {
    type Output = SpherePoint;

    fn neg(self) -> SpherePoint {
        SpherePoint(-self.0)
    }
}

impl Serialize for SpherePoint {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.coords().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SpherePoint {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let v = <[f64; 3]>::deserialize(deserializer)?;
        SpherePoint::from_unit_checked(v, 1e-9).map_err(serde::de::Error::custom)
    }
}

/// Geodesic distance between two points, computed as `atan2(|p × q|, p · q)`
/// so that it stays accurate near 0 and π.
pub fn geodesic_distance(p: &SpherePoint, q: &SpherePoint) -> f64 {
    p.cross(q).norm().atan2(p.dot(q))
}

/// Angle at `vertex` between the geodesics towards `p` and `q`, in [0, π].
pub fn angle_at(vertex: &SpherePoint, p: &SpherePoint, q: &SpherePoint) -> Result<f64> {
    let tp = vertex
        .direction_to(p)
        .ok_or(GeometryError::DegenerateAngle)?;
    let tq = vertex
        .direction_to(q)
        .ok_or(GeometryError::DegenerateAngle)?;
    Ok(tp.cross(&tq).norm().atan2(tp.dot(&tq)))
}

/// Signed angle at `vertex` rotating the direction towards `p` into the
/// direction towards `q`, counterclockwise about the outward normal, in (-π, π].
pub fn signed_angle_at(vertex: &SpherePoint, p: &SpherePoint, q: &SpherePoint) -> Result<f64> {
    let tp = vertex
        .direction_to(p)
        .ok_or(GeometryError::DegenerateAngle)?;
    let tq = vertex
        .direction_to(q)
        .ok_or(GeometryError::DegenerateAngle)?;
    Ok(vertex.vector().dot(&tp.cross(&tq)).atan2(tp.dot(&tq)))
}

/// An orthonormal tangent vector at `p`, chosen deterministically.
pub fn reference_tangent(p: &SpherePoint) -> Vector3<f64> {
    let v = p.vector();
    let k = if v.z.abs() < 0.9 {
        Vector3::z()
    } else {
        Vector3::x()
    };
    (k - v * v.dot(&k)).normalize()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, PI};

    fn p(x: f64, y: f64, z: f64) -> SpherePoint {
        SpherePoint::new(x, y, z).unwrap()
    }

    #[test]
    fn distance_examples() {
        assert!((geodesic_distance(&p(1., 0., 0.), &p(0., 1., 0.)) - FRAC_PI_2).abs() < 1e-15);
        let q = p(0.3, -0.2, 0.9);
        assert_eq!(geodesic_distance(&q, &q), 0.0);
        assert!((geodesic_distance(&p(1., 0., 0.), &p(-1., 0., 0.)) - PI).abs() < 1e-15);
    }

    #[test]
    fn distance_is_accurate_for_tiny_separations() {
        let a = p(1., 0., 0.);
        let b = p(1., 1e-12, 0.);
        assert!((geodesic_distance(&a, &b) - 1e-12).abs() < 1e-24);
    }

    #[test]
    fn angle_examples() {
        let v = p(0., 0., 1.);
        let x = p(1., 0., 0.);
        let y = p(0., 1., 0.);
        assert!((angle_at(&v, &x, &y).unwrap() - FRAC_PI_2).abs() < 1e-15);
        assert_eq!(angle_at(&v, &x, &x).unwrap(), 0.0);
        assert!((angle_at(&v, &x, &p(-1., 0., 0.)).unwrap() - PI).abs() < 1e-15);
        assert_eq!(angle_at(&v, &v, &x), Err(GeometryError::DegenerateAngle));
        assert_eq!(angle_at(&v, &x, &-v), Err(GeometryError::DegenerateAngle));
        assert!((signed_angle_at(&v, &x, &y).unwrap() - FRAC_PI_2).abs() < 1e-15);
        assert!((signed_angle_at(&v, &y, &x).unwrap() + FRAC_PI_2).abs() < 1e-15);
    }

    #[test]
    fn unit_check_on_load() {
        assert!(SpherePoint::from_unit_checked([1.0, 0.0, 0.0], 1e-9).is_ok());
        assert!(SpherePoint::from_unit_checked([1.0 + 1e-6, 0.0, 0.0], 1e-9).is_err());
        assert_eq!(SpherePoint::new(0., 0., 0.), Err(GeometryError::ZeroVector));
    }

    proptest::proptest! {
        #[test]
        fn distance_is_a_metric(
            u in (-1.0f64..1.0, -1.0f64..1.0, -1.0f64..1.0),
            v in (-1.0f64..1.0, -1.0f64..1.0, -1.0f64..1.0),
            w in (-1.0f64..1.0, -1.0f64..1.0, -1.0f64..1.0),
        ) {
            let (Ok(a), Ok(b), Ok(c)) = (SpherePoint::new(u.0, u.1, u.2), SpherePoint::new(v.0, v.1, v.2), SpherePoint::new(w.0, w.1, w.2)) else {
                return Ok(());
            };
            proptest::prop_assert!((a.distance(&b) - b.distance(&a)).abs() < 1e-15);
            proptest::prop_assert!(a.distance(&c) <= a.distance(&b) + b.distance(&c) + 1e-12);
            proptest::prop_assert!((0.0..=PI).contains(&a.distance(&b)));
        }

        #[test]
        fn travel_covers_the_distance(
            u in (-1.0f64..1.0, -1.0f64..1.0, -1.0f64..1.0),
            v in (-1.0f64..1.0, -1.0f64..1.0, -1.0f64..1.0),
            t in 0.0f64..1.0,
        ) {
            let (Ok(a), Ok(b)) = (SpherePoint::new(u.0, u.1, u.2), SpherePoint::new(v.0, v.1, v.2)) else {
                return Ok(());
            };
            let d = a.distance(&b);
            if d > 1e-6 && d < PI - 1e-6 {
                let m = a.towards(&b, t * d).unwrap();
                proptest::prop_assert!((a.distance(&m) - t * d).abs() < 1e-10);
                proptest::prop_assert!((m.distance(&b) - (1.0 - t) * d).abs() < 1e-10);
            }
        }
    }
}
