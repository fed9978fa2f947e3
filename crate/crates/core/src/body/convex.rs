use std::f64::consts::{FRAC_PI_2, PI, TAU};
use std::fmt;

use nalgebra::Rotation3;
use serde::{Deserialize, Serialize};

use super::arc::CircularArc;
use crate::consts::TOL_GEOM;
use crate::error::{GeometryError, Result};
use crate::numeric::min_norm_point;
use crate::sphere::{geodesic_distance, ArcGeom, SpherePoint};

/// One violated body invariant and its magnitude.
#[derive(Clone, Debug, PartialEq)]
pub enum Violation {
    Empty,
    RadiusOutOfRange { arc: usize, radius: f64 },
    EndpointOffCircle { arc: usize, deviation: f64 },
    ClosureViolation { junction: usize, gap: f64 },
    ConvexityViolation { junction: usize, turning: f64 },
    EmptyInterior { area: f64 },
    HemisphereViolation { margin: f64 },
    SupportViolation { excess: f64 },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Empty => write!(f, "no arcs"),
            Violation::RadiusOutOfRange { arc, radius } => {
                write!(f, "arc {arc}: radius {radius} outside (0, π/2]")
            }
            Violation::EndpointOffCircle { arc, deviation } => {
                write!(f, "arc {arc}: endpoint off its circle by {deviation:e}")
            }
            Violation::ClosureViolation { junction, gap } => {
                write!(f, "junction {junction}: boundary gap {gap:e}")
            }
            Violation::ConvexityViolation { junction, turning } => {
                write!(
                    f,
                    "junction {junction}: turning angle {turning} outside [0, π)"
                )
            }
            Violation::EmptyInterior { area } => write!(f, "enclosed area {area} outside (0, 2π)"),
            Violation::HemisphereViolation { margin } => {
                write!(f, "not inside an open hemisphere (margin {margin:e})")
            }
            Violation::SupportViolation { excess } => {
                write!(f, "a supporting hemisphere is crossed by {excess:e}")
            }
        }
    }
}

/// Result of [`ConvexBody::validate`].
#[derive(Clone, Debug, Default, PartialEq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "valid");
        }
        let parts: Vec<String> = self.violations.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", parts.join("; "))
    }
}

/// A convex body of the sphere, bounded by a closed counterclockwise cycle of
/// circular arcs. Immutable once built.
#[derive(Clone, Debug)]
pub struct ConvexBody {
    arcs: Vec<CircularArc>,
    geoms: Vec<ArcGeom>,
    turning: Vec<f64>,
    reference: SpherePoint,
}

#[derive(Serialize, Deserialize)]
struct BodyFile {
    arcs: Vec<CircularArc>,
}

impl PartialEq for ConvexBody {
    fn eq(&self, other: &Self) -> bool {
        self.arcs == other.arcs
    }
}

/// Largest `min ⟨x, u⟩` over unit `u`; positive iff the points lie in an
/// open hemisphere.
fn hemisphere_margin(points: &[SpherePoint]) -> f64 {
    let v: Vec<_> = points.iter().map(|p| *p.vector()).collect();
    let q = min_norm_point(&v);
    if q.norm() < 1e-14 {
        return 0.0;
    }
    let u = q.normalize();
    v.iter().map(|x| x.dot(&u)).fold(f64::INFINITY, f64::min)
}

impl ConvexBody {
    /// Builds and validates a body, failing with [`GeometryError::InvalidBody`].
    pub fn from_arcs(arcs: Vec<CircularArc>) -> Result<Self> {
        let body = Self::from_arcs_unchecked(arcs)?;
        let report = body.validate();
        if report.is_valid() {
            Ok(body)
        } else {
            Err(GeometryError::InvalidBody(report.to_string()))
        }
    }

    /// Builds a body without checking the invariants, so that
    /// [`validate`](Self::validate) can report on it. Arcs of length below
    /// `TOL_GEOM` are dropped (a lone full circle is kept).
    pub fn from_arcs_unchecked(arcs: Vec<CircularArc>) -> Result<Self> {
        let arcs: Vec<CircularArc> = if arcs.len() > 1 {
            arcs.into_iter()
                .filter(|a| geodesic_distance(&a.start, &a.end) > TOL_GEOM)
                .collect()
        } else {
            arcs
        };
        if arcs.is_empty() {
            return Err(GeometryError::EmptyInput);
        }
        let geoms: Vec<ArcGeom> = arcs.iter().map(|a| a.geom()).collect();
        let n = arcs.len();
        let turning = (0..n)
            .map(|k| {
                let (a, b) = (&arcs[k], &arcs[(k + 1) % n]);
                let y = a.end;
                let t_in = a.tangent_at(&a.end);
                let t_out = b.tangent_at(&b.start);
                y.vector().dot(&t_in.cross(&t_out)).atan2(t_in.dot(&t_out))
            })
            .collect();
        let mut body = Self {
            arcs,
            geoms,
            turning,
            reference: SpherePoint::z_axis(),
        };
        let mean = body
            .boundary_samples(256)
            .iter()
            .fold(nalgebra::Vector3::zeros(), |acc, s| acc + s.point.vector());
        body.reference = SpherePoint::from_vector(mean).unwrap_or(body.arcs[0].center);
        Ok(body)
    }

    pub fn arcs(&self) -> &[CircularArc] {
        &self.arcs
    }

    pub(crate) fn geoms(&self) -> &[ArcGeom] {
        &self.geoms
    }

    /// Exterior angle at the junction after arc `k` (end of `k`, start of `k+1`).
    pub fn turning_angles(&self) -> &[f64] {
        &self.turning
    }

    /// An interior point: the normalized mean of evenly spaced boundary samples.
    pub fn reference_point(&self) -> SpherePoint {
        self.reference
    }

    pub fn vertices(&self) -> Vec<SpherePoint> {
        self.arcs.iter().map(|a| a.start).collect()
    }

    /// Checks every invariant and reports all violations.
    pub fn validate(&self) -> ValidationReport {
        let mut v = Vec::new();
        let n = self.arcs.len();
        for (k, a) in self.arcs.iter().enumerate() {
            if !(a.radius > 0.0 && a.radius <= FRAC_PI_2 + 1e-12) {
                v.push(Violation::RadiusOutOfRange {
                    arc: k,
                    radius: a.radius,
                });
            }
            let dev = a.endpoint_deviation();
            if dev > TOL_GEOM {
                v.push(Violation::EndpointOffCircle {
                    arc: k,
                    deviation: dev,
                });
            }
            let gap = geodesic_distance(&a.end, &self.arcs[(k + 1) % n].start);
            if gap > TOL_GEOM {
                v.push(Violation::ClosureViolation { junction: k, gap });
            }
        }
        for (k, &t) in self.turning.iter().enumerate() {
            if !(-TOL_GEOM..PI - TOL_GEOM).contains(&t) {
                v.push(Violation::ConvexityViolation {
                    junction: k,
                    turning: t,
                });
            }
        }
        if !v.is_empty() {
            return ValidationReport { violations: v };
        }
        let area = self.area();
        if !(area > TOL_GEOM && area < TAU - TOL_GEOM) {
            v.push(Violation::EmptyInterior { area });
            return ValidationReport { violations: v };
        }
        let samples: Vec<SpherePoint> = self
            .boundary_samples(512)
            .into_iter()
            .map(|s| s.point)
            .collect();
        let margin = hemisphere_margin(&samples);
        if margin <= 0.0 {
            v.push(Violation::HemisphereViolation { margin });
        }
        let excess = self.support_excess(64);
        if excess > TOL_GEOM {
            v.push(Violation::SupportViolation { excess });
        }
        ValidationReport { violations: v }
    }

    /// Largest `⟨y, n⟩` over boundary points `y` and sampled outward normals
    /// `n`; zero for a convex body, positive where a supporting hemisphere is
    /// crossed.
    fn support_excess(&self, per_arc: usize) -> f64 {
        let mut worst: f64 = 0.0;
        for (k, (a, g)) in self.arcs.iter().zip(&self.geoms).enumerate() {
            for i in 0..=per_arc {
                let y = g.point_at(g.span * i as f64 / per_arc as f64);
                let nrm = a.outward_normal(&y);
                let d = self
                    .geoms
                    .iter()
                    .enumerate()
                    .filter(|(j, _)| *j != k)
                    .map(|(_, h)| h.nearest_distance(&nrm))
                    .fold(f64::INFINITY, f64::min);
                if d.is_finite() {
                    worst = worst.max(d.cos());
                }
            }
        }
        worst
    }

    /// Gauss–Bonnet: `2π − Σ τ_k − Σ θ_k cos ρ_k`.
    pub fn area(&self) -> f64 {
        TAU - self.turning.iter().sum::<f64>()
            - self
                .geoms
                .iter()
                .zip(&self.arcs)
                .map(|(g, a)| g.span * a.radius.cos())
                .sum::<f64>()
    }

    /// `Σ θ_k sin ρ_k`.
    pub fn perimeter(&self) -> f64 {
        self.geoms
            .iter()
            .zip(&self.arcs)
            .map(|(g, a)| g.span * a.radius.sin())
            .sum()
    }

    /// About `n` boundary points spread by arc length, at least two per arc;
    /// every junction is included.
    pub fn boundary_samples(&self, n: usize) -> Vec<BoundarySample> {
        let total = self.perimeter();
        let mut out = Vec::with_capacity(n + 2 * self.arcs.len());
        for (k, (g, a)) in self.geoms.iter().zip(&self.arcs).enumerate() {
            let len = g.span * a.radius.sin();
            let m = ((n as f64 * len / total).ceil() as usize).max(2);
            for i in 0..m {
                let t = g.span * i as f64 / m as f64;
                out.push(BoundarySample {
                    arc: k,
                    t,
                    point: g.point_at(t),
                });
            }
        }
        out
    }

    pub fn point_on(&self, arc: usize, t: f64) -> SpherePoint {
        self.geoms[arc].point_at(t.clamp(0.0, self.geoms[arc].span))
    }

    pub fn rotate(&self, r: &Rotation3<f64>) -> Self {
        let arcs = self.arcs.iter().map(|a| a.rotate(r)).collect();
        Self::from_arcs_unchecked(arcs).expect("rotation keeps arcs")
    }

    /// Rotates the arc cycle so that the lexicographically smallest start
    /// vertex comes first.
    pub fn canonicalize(&self) -> Self {
        let k = (0..self.arcs.len())
            .min_by(|&i, &j| self.arcs[i].start.lex_cmp(&self.arcs[j].start))
            .unwrap_or(0);
        let mut arcs = self.arcs.clone();
        arcs.rotate_left(k);
        Self::from_arcs_unchecked(arcs).expect("nonempty")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&BodyFile {
            arcs: self.arcs.clone(),
        })
        .expect("serializable")
    }

    /// Parses the JSON body schema without validating the invariants.
    pub fn from_json_unchecked(s: &str) -> std::result::Result<Self, String> {
        let f: BodyFile = serde_json::from_str(s).map_err(|e| e.to_string())?;
        Self::from_arcs_unchecked(f.arcs).map_err(|e| e.to_string())
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let b = Self::from_json_unchecked(s).map_err(GeometryError::InvalidBody)?;
        let r = b.validate();
        if r.is_valid() {
            Ok(b)
        } else {
            Err(GeometryError::InvalidBody(r.to_string()))
        }
    }
}

/// A boundary point with its arc index and arc parameter.
#[derive(Clone, Copy, Debug)]
pub struct BoundarySample {
    pub arc: usize,
    pub t: f64,
    pub point: SpherePoint,
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn octant() -> ConvexBody {
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
    fn octant_area_perimeter() {
        let o = octant();
        assert!((o.area() - FRAC_PI_2).abs() < 1e-14);
        assert!((o.perimeter() - 1.5 * PI).abs() < 1e-14);
        for t in o.turning_angles() {
            assert!((t - FRAC_PI_2).abs() < 1e-14);
        }
    }

    #[test]
    fn disk_area_perimeter() {
        let d = ConvexBody::from_arcs(vec![CircularArc::full_circle(
            SpherePoint::z_axis(),
            PI / 3.0,
        )])
        .unwrap();
        assert!((d.area() - PI).abs() < 1e-14);
        assert!((d.perimeter() - TAU * (PI / 3.0).sin()).abs() < 1e-14);
        assert!(d.validate().is_valid());
    }

    #[test]
    fn mismatched_endpoints_are_reported() {
        let (x, y, z) = (
            SpherePoint::x_axis(),
            SpherePoint::y_axis(),
            SpherePoint::z_axis(),
        );
        let w = SpherePoint::new(1.0, 0.0, 0.1).unwrap();
        let b = ConvexBody::from_arcs_unchecked(vec![
            CircularArc::segment(x, y),
            CircularArc::segment(y, z),
            CircularArc::segment(z, w),
        ])
        .unwrap();
        let r = b.validate();
        assert!(r
            .violations
            .iter()
            .any(|v| matches!(v, Violation::ClosureViolation { .. })));
    }

    #[test]
    fn reflex_corner_is_reported() {
        // a dart: the vertex d sits inside the triangle a, b, c
        let a = SpherePoint::new(1.0, 0.0, 1.0).unwrap();
        let b = SpherePoint::new(0.0, 1.0, 1.0).unwrap();
        let c = SpherePoint::new(-1.0, -1.0, 1.0).unwrap();
        let d = SpherePoint::new(0.0, 0.0, 1.0).unwrap();
        let body = ConvexBody::from_arcs_unchecked(vec![
            CircularArc::segment(a, b),
            CircularArc::segment(b, d),
            CircularArc::segment(d, c),
            CircularArc::segment(c, a),
        ])
        .unwrap();
        let r = body.validate();
        assert!(
            r.violations
                .iter()
                .any(|v| matches!(v, Violation::ConvexityViolation { .. })),
            "{r}"
        );
    }

    #[test]
    fn clockwise_triangle_is_rejected() {
        let (x, y, z) = (
            SpherePoint::x_axis(),
            SpherePoint::y_axis(),
            SpherePoint::z_axis(),
        );
        let b = ConvexBody::from_arcs(vec![
            CircularArc::segment(x, z),
            CircularArc::segment(z, y),
            CircularArc::segment(y, x),
        ]);
        assert!(b.is_err());
    }

    #[test]
    fn json_round_trip() {
        let o = octant();
        let s = o.to_json();
        let back = ConvexBody::from_json(&s).unwrap();
        assert_eq!(back, o);
        assert!(ConvexBody::from_json("{\"arcs\": [}").is_err());
        let bad = s.replacen("1.0", "1.1", 1);
        assert!(ConvexBody::from_json(&bad).is_err());
    }

    #[test]
    fn canonical_form_starts_at_smallest_vertex() {
        let c = octant().canonicalize();
        assert_eq!(c.arcs()[0].start, SpherePoint::z_axis());
        assert_eq!(c.canonicalize(), c);
    }

    proptest::proptest! {
        #![proptest_config(proptest::prelude::ProptestConfig::with_cases(24))]

        #[test]
        fn functionals_are_rotation_invariant(
            seed in 0u64..1000,
            w in 0.2f64..2.9,
            axis in (-2.0f64..2.0, -2.0f64..2.0, -2.0f64..2.0),
        ) {
            let k = crate::shapes::random_body(w, seed).unwrap();
            let r = Rotation3::from_scaled_axis(nalgebra::Vector3::new(axis.0, axis.1, axis.2));
            let l = k.rotate(&r);
            proptest::prop_assert!(l.validate().is_valid());
            proptest::prop_assert!((k.area() - l.area()).abs() < 1e-10);
            proptest::prop_assert!((k.perimeter() - l.perimeter()).abs() < 1e-10);
            let (wk, wl) = (k.width_direct().unwrap().0, l.width_direct().unwrap().0);
            proptest::prop_assert!((wk - wl).abs() < 1e-8);
        }
    }
}
