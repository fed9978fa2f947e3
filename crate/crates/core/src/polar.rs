//! Polar bodies, lune/segment duality and the constant-width predicate.
//!
//! The polar of `K` is `K° = {u : ⟨u, x⟩ ≤ 0 for all x ∈ K}`. Its boundary is
//! the set of outward normals of `K`, so it is built arc by arc:
//!
//! | boundary of `K`                    | boundary of `K°`                           |
//! |------------------------------------|--------------------------------------------|
//! | arc, center `c`, radius `ρ < π/2`  | arc, center `−c`, radius `π/2 − ρ`         |
//! | geodesic edge with pole `c`        | the vertex `−c`                            |
//! | corner `y` with turning angle `τ`  | geodesic arc of length `τ` with pole `−y`  |
//!
//! and the cyclic order is reversed.

use std::f64::consts::{FRAC_PI_2, PI};

use crate::body::{CircularArc, ConvexBody, Lune};
use crate::consts::TOL_GEOM;
use crate::error::Result;
use crate::sphere::SpherePoint;

/// The polar body `K°`, in canonical form.
pub fn polar_body(k: &ConvexBody) -> Result<ConvexBody> {
    let arcs = k.arcs();
    let n = arcs.len();
    if n == 1 {
        let a = &arcs[0];
        if a.span() >= std::f64::consts::TAU - TOL_GEOM {
            return ConvexBody::from_arcs(vec![CircularArc::full_circle(
                -a.center,
                FRAC_PI_2 - a.radius,
            )]);
        }
    }
    let tau = k.turning_angles();
    let mut out = Vec::with_capacity(2 * n);
    for i in (0..n).rev() {
        let a = &arcs[i];
        let next = &arcs[(i + 1) % n];
        if tau[i] > TOL_GEOM {
            let y = a.end;
            out.push(CircularArc::new(
                -y,
                FRAC_PI_2,
                next.outward_normal(&next.start),
                a.outward_normal(&y),
            ));
        }
        if !a.is_geodesic() {
            out.push(CircularArc::new(
                -a.center,
                FRAC_PI_2 - a.radius,
                a.outward_normal(&a.end),
                a.outward_normal(&a.start),
            ));
        }
    }
    Ok(ConvexBody::from_arcs(out)?.canonicalize())
}

/// The segment `[u, v]` polar to the lune with poles `u`, `v`; its length is
/// `π −` the breadth of the lune.
pub fn lune_to_segment(lune: &Lune) -> Result<(SpherePoint, SpherePoint)> {
    let l = Lune::new(lune.pole_u, lune.pole_v)?;
    Ok((l.pole_u, l.pole_v))
}

/// Width computed as `π − diam(K°)`.
pub fn width_via_polar(k: &ConvexBody) -> Result<f64> {
    let p = polar_body(k)?;
    Ok(PI - p.diameter()?.0)
}

/// Whether the breadth is constant over the sampled supporting directions,
/// with the observed spread `max − min`.
pub fn is_constant_width(k: &ConvexBody, tol: f64) -> (bool, f64) {
    let spread = k.constant_width_spread();
    (spread <= tol, spread)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sphere::geodesic_distance;

    fn octant() -> ConvexBody {
        let (x, y, z) = (
            SpherePoint::x_axis(),
            SpherePoint::y_axis(),
            SpherePoint::z_axis(),
        );
        ConvexBody::from_arcs(vec![
            CircularArc::segment(x, y),
            CircularArc::segment(y, z),
            CircularArc::segment(z, x),
        ])
        .unwrap()
    }

    #[test]
    fn polar_of_disk() {
        let c = SpherePoint::new(0.1, 0.4, 0.8).unwrap();
        let d = ConvexBody::from_arcs(vec![CircularArc::full_circle(c, 0.3)]).unwrap();
        let p = polar_body(&d).unwrap();
        assert_eq!(p.arcs().len(), 1);
        assert!(geodesic_distance(&p.arcs()[0].center, &-c) < 1e-15);
        assert!((p.arcs()[0].radius - (FRAC_PI_2 - 0.3)).abs() < 1e-15);
        assert!((width_via_polar(&d).unwrap() - 0.6).abs() < 1e-12);
    }

    #[test]
    fn polar_of_octant_is_antipodal_octant() {
        let p = polar_body(&octant()).unwrap();
        assert_eq!(p.arcs().len(), 3);
        for v in p.vertices() {
            assert!(v.coords().iter().all(|c| *c <= 1e-15));
            assert!(v.coords().iter().any(|c| (*c + 1.0).abs() < 1e-15));
        }
        assert!((p.area() - FRAC_PI_2).abs() < 1e-14);
        let pp = polar_body(&p).unwrap();
        assert!(pp.hausdorff(&octant()) < 1e-12);
    }

    #[test]
    fn constant_width_verdicts() {
        let (ok, spread) = is_constant_width(&octant(), 1e-9);
        assert!(ok, "{spread}");
        // a narrower right triangle is not of constant width
        let a = SpherePoint::z_axis();
        let b = SpherePoint::new(0.6, 0.0, 1.0).unwrap();
        let c = SpherePoint::new(0.0, 0.6, 1.0).unwrap();
        let t = ConvexBody::from_arcs(vec![
            CircularArc::segment(a, b),
            CircularArc::segment(b, c),
            CircularArc::segment(c, a),
        ])
        .unwrap();
        let (ok, spread) = is_constant_width(&t, 1e-6);
        assert!(!ok && spread > 0.1, "{spread}");
    }

    #[test]
    fn segment_from_lune() {
        let u = SpherePoint::z_axis();
        let v = SpherePoint::x_axis();
        let (a, b) = lune_to_segment(&Lune {
            pole_u: u,
            pole_v: v,
        })
        .unwrap();
        assert!((geodesic_distance(&a, &b) - FRAC_PI_2).abs() < 1e-15);
        assert!(lune_to_segment(&Lune {
            pole_u: u,
            pole_v: -u
        })
        .is_err());
    }

    proptest::proptest! {
        #![proptest_config(proptest::prelude::ProptestConfig::with_cases(24))]

        #[test]
        fn polarity_invariants(seed in 0u64..1000, w in 0.2f64..2.9) {
            let k = crate::shapes::random_body(w, seed).unwrap();
            let kp = polar_body(&k).unwrap();
            proptest::prop_assert!(kp.validate().is_valid());
            proptest::prop_assert!(polar_body(&kp).unwrap().hausdorff(&k) < 1e-8);
            // per(K°) = 2π − area(K)
            proptest::prop_assert!((kp.perimeter() - (std::f64::consts::TAU - k.area())).abs() < 1e-9);
            proptest::prop_assert!((width_via_polar(&k).unwrap() - k.width_direct().unwrap().0).abs() < 1e-6);
        }
    }
}
