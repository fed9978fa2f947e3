use std::f64::consts::PI;

use crate::consts::TOL_GEOM;
use crate::error::{GeometryError, Result};
use crate::sphere::{geodesic_distance, SpherePoint};

/// The lune `{x : ⟨x,u⟩ ≤ 0} ∩ {x : ⟨x,v⟩ ≤ 0}`, stored by the outward poles
/// `u`, `v` of its two hemispheres.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Lune {
    pub pole_u: SpherePoint,
    pub pole_v: SpherePoint,
}

impl Lune {
    pub fn new(pole_u: SpherePoint, pole_v: SpherePoint) -> Result<Self> {
        let d = geodesic_distance(&pole_u, &pole_v);
        if !(TOL_GEOM..=PI - TOL_GEOM).contains(&d) {
            return Err(GeometryError::DegenerateLune { distance: d });
        }
        Ok(Self { pole_u, pole_v })
    }

    /// `π − d(u, v)`.
    pub fn breadth(&self) -> f64 {
        PI - geodesic_distance(&self.pole_u, &self.pole_v)
    }

    /// Distance between the midpoints of the two bounding half great circles,
    /// computed from the lune's geometry rather than from its poles.
    pub fn breadth_from_centers(&self) -> f64 {
        let (u, v) = (self.pole_u.vector(), self.pole_v.vector());
        let e = u.cross(v).normalize();
        // the midpoint of the half great circle of ∂H_u inside H_v is ±e × u,
        // whichever side has ⟨·, v⟩ < 0
        let mid = |a: &nalgebra::Vector3<f64>, b: &nalgebra::Vector3<f64>| {
            let m = e.cross(a);
            if m.dot(b) < 0.0 {
                m
            } else {
                -m
            }
        };
        let mu = SpherePoint::normalized(mid(u, v));
        let mv = SpherePoint::normalized(mid(v, u));
        geodesic_distance(&mu, &mv)
    }
}

/// Free-function form of [`Lune::breadth`] that also checks degeneracy.
pub fn lune_breadth(lune: &Lune) -> Result<f64> {
    Lune::new(lune.pole_u, lune.pole_v).map(|l| l.breadth())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_2;

    #[test]
    fn orthogonal_poles() {
        let l = Lune::new(SpherePoint::x_axis(), SpherePoint::y_axis()).unwrap();
        assert!((l.breadth() - FRAC_PI_2).abs() < 1e-15);
        assert!((l.breadth_from_centers() - FRAC_PI_2).abs() < 1e-15);
    }

    #[test]
    fn breadth_from_pole_distance() {
        let w = 1.3;
        let u = SpherePoint::z_axis();
        let v = u.towards(&SpherePoint::x_axis(), PI - w).unwrap();
        let l = Lune::new(u, v).unwrap();
        assert!((l.breadth() - w).abs() < 1e-14);
        assert!((l.breadth_from_centers() - w).abs() < 1e-12);
    }

    #[test]
    fn degenerate_poles() {
        let u = SpherePoint::z_axis();
        let v = SpherePoint::new(1e-12, 0.0, 1.0).unwrap();
        assert!(matches!(
            Lune::new(u, v),
            Err(GeometryError::DegenerateLune { .. })
        ));
        assert!(Lune::new(u, -u).is_err());
    }
}
