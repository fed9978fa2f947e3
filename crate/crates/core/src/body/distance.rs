use nalgebra::Vector3;

use super::convex::ConvexBody;
use crate::consts::{DEFAULT_BOUNDARY_SAMPLES, TOL_GEOM};
use crate::numeric::golden_max;
use crate::sphere::{geodesic_distance, SpherePoint};

impl ConvexBody {
    /// Exact distance from `x` to the boundary curve.
    pub fn boundary_distance(&self, x: &SpherePoint) -> f64 {
        self.geoms()
            .iter()
            .map(|g| g.nearest_distance(x))
            .fold(f64::INFINITY, f64::min)
    }

    /// Nearest boundary point to `x` with its arc index.
    pub fn nearest_boundary_point(&self, x: &SpherePoint) -> (f64, usize, SpherePoint) {
        let mut best = (f64::INFINITY, 0, *x);
        for (k, g) in self.geoms().iter().enumerate() {
            let (d, t) = g.nearest(x);
            if d < best.0 {
                best = (d, k, g.point_at(t));
            }
        }
        best
    }

    /// Distance from `origin` to the boundary along the geodesic leaving it in
    /// the unit tangent direction `dir`. `origin` must be interior.
    pub fn radial_extent(&self, origin: &SpherePoint, dir: &Vector3<f64>) -> f64 {
        let p = origin.vector();
        let mut best = f64::INFINITY;
        for g in self.geoms() {
            let c = g.circle.axis.vector();
            let (pc, dc) = (p.dot(c), dir.dot(c));
            let amp = pc.hypot(dc);
            let target = g.circle.radius.cos();
            if amp < 1e-300 || target.abs() > amp {
                continue;
            }
            let t0 = dc.atan2(pc);
            let h = (target / amp).clamp(-1.0, 1.0).acos();
            for t in [
                t0 - h,
                t0 + h,
                t0 - h + std::f64::consts::TAU,
                t0 + h - std::f64::consts::TAU,
            ] {
                if t <= 0.0 || t > std::f64::consts::PI || t >= best {
                    continue;
                }
                let y = SpherePoint::normalized(p * t.cos() + dir * t.sin());
                if g.covers_azimuth(g.circle.azimuth(&y), 1e-12) {
                    best = t;
                }
            }
        }
        best
    }

    /// Membership test within `TOL_GEOM`, by comparing the distance from the
    /// interior reference point with the radial extent in that direction.
    pub fn contains(&self, x: &SpherePoint) -> bool {
        let p = self.reference_point();
        let d = geodesic_distance(&p, x);
        if d < 1e-15 {
            return true;
        }
        match p.direction_to(x) {
            Some(dir) => d <= self.radial_extent(&p, &dir) + TOL_GEOM,
            None => false,
        }
    }

    /// Distance from `x` to the body: zero inside.
    pub fn distance_to(&self, x: &SpherePoint) -> f64 {
        if self.contains(x) {
            0.0
        } else {
            self.boundary_distance(x)
        }
    }

    /// Distance to the boundary, positive inside and negative outside.
    pub fn signed_depth(&self, x: &SpherePoint) -> f64 {
        let d = self.boundary_distance(x);
        if self.contains(x) {
            d
        } else {
            -d
        }
    }

    /// `sup_{x ∈ ∂self} d(x, other)` by dense boundary sampling and
    /// golden-section refinement around the largest samples.
    pub fn directed_hausdorff(&self, other: &ConvexBody) -> f64 {
        let samples = self.boundary_samples(DEFAULT_BOUNDARY_SAMPLES);
        let vals: Vec<f64> = samples
            .iter()
            .map(|s| other.distance_to(&s.point))
            .collect();
        let best = vals.iter().copied().fold(0.0, f64::max);
        if best == 0.0 {
            return 0.0;
        }
        let mut order: Vec<usize> = (0..samples.len()).collect();
        order.sort_by(|&i, &j| vals[j].total_cmp(&vals[i]));
        let mut per_arc = vec![0usize; self.arcs().len()];
        for s in &samples {
            per_arc[s.arc] += 1;
        }
        let mut result = best;
        for &i in order.iter().take(8) {
            let s = samples[i];
            let span = self.geoms()[s.arc].span;
            let step = span / per_arc[s.arc] as f64;
            let (lo, hi) = ((s.t - 1.5 * step).max(0.0), (s.t + 1.5 * step).min(span));
            let (_, v) = golden_max(
                |t| other.distance_to(&self.point_on(s.arc, t)),
                lo,
                hi,
                1e-12,
            );
            result = result.max(v);
        }
        result
    }

    /// Hausdorff distance `max(h(K, L), h(L, K))`.
    pub fn hausdorff(&self, other: &ConvexBody) -> f64 {
        self.directed_hausdorff(other)
            .max(other.directed_hausdorff(self))
    }
}

#[cfg(test)]
mod tests {
    use super::super::arc::CircularArc;
    use super::*;
    use std::f64::consts::FRAC_PI_2;

    fn disk(c: SpherePoint, r: f64) -> ConvexBody {
        ConvexBody::from_arcs(vec![CircularArc::full_circle(c, r)]).unwrap()
    }

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
    fn containment_examples() {
        let o = octant();
        let c = SpherePoint::new(1.0, 1.0, 1.0).unwrap();
        assert!(o.contains(&c));
        assert!(!o.contains(&-c));
        for a in o.arcs() {
            assert!(o.contains(&a.midpoint()));
        }
        assert!(!o.contains(&SpherePoint::new(1.0, 1.0, -0.01).unwrap()));
        assert!(o.contains(&SpherePoint::new(1.0, 1.0, 0.01).unwrap()));
    }

    #[test]
    fn boundary_distance_examples() {
        let d = disk(SpherePoint::z_axis(), 0.5);
        assert!((d.boundary_distance(&SpherePoint::z_axis()) - 0.5).abs() < 1e-15);
        let o = octant();
        assert!(o.boundary_distance(&SpherePoint::x_axis()) < 1e-15);
        let c = SpherePoint::new(1.0, 1.0, 1.0).unwrap();
        assert!((o.boundary_distance(&c) - (1.0 / 3f64.sqrt()).asin()).abs() < 1e-14);
    }

    #[test]
    fn hausdorff_of_disks() {
        let a = disk(SpherePoint::z_axis(), 0.3);
        let b = disk(SpherePoint::z_axis(), 0.7);
        assert!((a.hausdorff(&b) - 0.4).abs() < 1e-9);
        assert!(a.hausdorff(&a) < 1e-12);
        let q = SpherePoint::z_axis()
            .towards(&SpherePoint::x_axis(), 0.1)
            .unwrap();
        let c = disk(q, 0.3);
        assert!((a.hausdorff(&c) - 0.1).abs() < 1e-8);
        assert!(
            (octant().hausdorff(&disk(SpherePoint::z_axis(), FRAC_PI_2 * 0.5)) - 0.0).abs() > 0.1
        );
    }
}
