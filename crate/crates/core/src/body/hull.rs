use std::f64::consts::{FRAC_PI_2, TAU};

use nalgebra::Vector3;

use super::arc::CircularArc;
use super::convex::ConvexBody;
use crate::error::{GeometryError, Result};
use crate::numeric::min_norm_point;
use crate::sphere::{geodesic_distance, reference_tangent, wrap_angle, SpherePoint};

/// A closed cap `B(center, radius)`; radius 0 is a single point.
pub type Cap = (SpherePoint, f64);

const MIN_PIECE: f64 = 1e-9;

/// Subset of [0, 2π) as sorted disjoint intervals.
#[derive(Clone, Debug)]
struct AngleSet(Vec<(f64, f64)>);

impl AngleSet {
    fn full() -> Self {
        AngleSet(vec![(0.0, TAU)])
    }

    /// The cyclic interval starting at `start` of length `len`.
    fn cyclic(start: f64, len: f64) -> Self {
        if len >= TAU {
            return Self::full();
        }
        if len <= 0.0 {
            return AngleSet(vec![]);
        }
        let s = wrap_angle(start);
        if s + len <= TAU {
            AngleSet(vec![(s, s + len)])
        } else {
            AngleSet(vec![(0.0, s + len - TAU), (s, TAU)])
        }
    }

    fn intersect(&self, other: &AngleSet) -> AngleSet {
        let mut out = Vec::new();
        for &(a0, a1) in &self.0 {
            for &(b0, b1) in &other.0 {
                let (lo, hi) = (a0.max(b0), a1.min(b1));
                if hi > lo {
                    out.push((lo, hi));
                }
            }
        }
        out.sort_by(|x, y| x.0.total_cmp(&y.0));
        AngleSet(out)
    }

    /// Maximal cyclic runs as `(start, span)`, merging across 2π.
    fn runs(&self) -> Vec<(f64, f64)> {
        let mut v: Vec<(f64, f64)> = self.0.iter().map(|&(s, e)| (s, e - s)).collect();
        if v.len() >= 2 && self.0[0].0 <= 0.0 && self.0[self.0.len() - 1].1 >= TAU {
            let first = v.remove(0);
            let last = v.last_mut().unwrap();
            last.1 += first.1;
        }
        v
    }
}

struct Frame {
    c: Vector3<f64>,
    e1: Vector3<f64>,
    e2: Vector3<f64>,
    rho: f64,
}

impl Frame {
    fn new(cap: &Cap) -> Self {
        let e1 = reference_tangent(&cap.0);
        let e2 = cap.0.vector().cross(&e1);
        Self {
            c: *cap.0.vector(),
            e1,
            e2,
            rho: cap.1,
        }
    }

    fn u(&self, phi: f64) -> Vector3<f64> {
        self.e1 * phi.cos() + self.e2 * phi.sin()
    }

    fn boundary(&self, phi: f64) -> SpherePoint {
        if self.rho == 0.0 {
            return SpherePoint::normalized(self.c);
        }
        SpherePoint::normalized(self.c * self.rho.cos() + self.u(phi) * self.rho.sin())
    }

    /// `(B, φ0)` with `⟨u(φ), v⟩ = B cos(φ − φ0)`.
    fn harmonic(&self, v: &Vector3<f64>) -> (f64, f64) {
        let (a, b) = (self.e1.dot(v), self.e2.dot(v));
        (a.hypot(b), b.atan2(a))
    }
}

fn dedupe_contained(caps: &[Cap]) -> Vec<Cap> {
    let mut keep: Vec<Cap> = Vec::new();
    'outer: for (i, ci) in caps.iter().enumerate() {
        for (j, cj) in caps.iter().enumerate() {
            if i == j {
                continue;
            }
            let d = geodesic_distance(&ci.0, &cj.0);
            let inside = d + ci.1 <= cj.1 + 1e-12;
            let same = d <= 1e-12 && (ci.1 - cj.1).abs() <= 1e-12;
            if inside && (!same || j < i) {
                continue 'outer;
            }
        }
        keep.push(*ci);
    }
    keep
}

fn hemisphere_center(caps: &[Cap]) -> Result<SpherePoint> {
    let fits = |h: &SpherePoint| {
        caps.iter()
            .all(|c| geodesic_distance(h, &c.0) + c.1 < FRAC_PI_2)
    };
    let sum = caps.iter().fold(Vector3::zeros(), |a, c| a + c.0.vector());
    let centers: Vec<_> = caps.iter().map(|c| *c.0.vector()).collect();
    [sum, min_norm_point(&centers)]
        .into_iter()
        .filter_map(|v| SpherePoint::from_vector(v).ok())
        .find(fits)
        .ok_or(GeometryError::HemisphereViolation)
}

/// Sorts boundary pieces counterclockwise about `h` by the azimuth of a
/// representative point.
fn sort_about<T>(h: &SpherePoint, items: &mut [(SpherePoint, T)]) {
    let e1 = reference_tangent(h);
    let e2 = h.vector().cross(&e1);
    items.sort_by(|a, b| {
        let az = |p: &SpherePoint| wrap_angle(p.vector().dot(&e2).atan2(p.vector().dot(&e1)));
        az(&a.0).total_cmp(&az(&b.0))
    });
}

/// Convex hull of caps and points (points are radius-0 caps). The boundary
/// alternates arcs of cap boundaries with geodesic tangent segments.
pub fn hull_of_caps(caps: &[Cap], points: &[SpherePoint]) -> Result<ConvexBody> {
    let mut all: Vec<Cap> = caps.to_vec();
    all.extend(points.iter().map(|p| (*p, 0.0)));
    if all.is_empty() {
        return Err(GeometryError::EmptyInput);
    }
    for c in &all {
        if !(c.1 >= 0.0 && c.1 < FRAC_PI_2) {
            return Err(GeometryError::RadiusOutOfRange {
                r: c.1,
                range: "[0, π/2)",
            });
        }
    }
    let all = dedupe_contained(&all);
    if all.len() == 1 {
        let (c, r) = all[0];
        if r == 0.0 {
            return Err(GeometryError::EmptyInput);
        }
        return ConvexBody::from_arcs(vec![CircularArc::full_circle(c, r)]);
    }
    let h = hemisphere_center(&all)?;
    let frames: Vec<Frame> = all.iter().map(Frame::new).collect();
    // pieces: (cap index, start azimuth, span) of outward normals where the
    // cap's boundary is on the hull boundary
    let mut pieces: Vec<(SpherePoint, (usize, f64, f64))> = Vec::new();
    for (k, fk) in frames.iter().enumerate() {
        let mut allowed = AngleSet::full();
        for (j, cj) in all.iter().enumerate() {
            if j == k {
                continue;
            }
            // ⟨n(φ), c_j⟩ ≤ −sin ρ_j with n(φ) = −sin ρ_k c_k + cos ρ_k u(φ)
            let a = -fk.rho.sin() * fk.c.dot(cj.0.vector());
            let (b, phi0) = fk.harmonic(cj.0.vector());
            let b = b * fk.rho.cos();
            let rhs = -cj.1.sin() - a;
            let set = if b < 1e-300 {
                if rhs >= 0.0 {
                    AngleSet::full()
                } else {
                    AngleSet(vec![])
                }
            } else {
                let x = rhs / b;
                if x >= 1.0 {
                    AngleSet::full()
                } else if x <= -1.0 {
                    AngleSet(vec![])
                } else {
                    let h = x.acos();
                    AngleSet::cyclic(phi0 + h, TAU - 2.0 * h)
                }
            };
            allowed = allowed.intersect(&set);
            if allowed.0.is_empty() {
                break;
            }
        }
        for (s, len) in allowed.runs() {
            if len > MIN_PIECE {
                let mid = fk.boundary(s + 0.5 * len);
                let key = if fk.rho == 0.0 {
                    // a corner: order by a point pushed slightly along the mid normal
                    SpherePoint::normalized(mid.vector() + fk.u(s + 0.5 * len) * 1e-6)
                } else {
                    mid
                };
                pieces.push((key, (k, s, len)));
            }
        }
    }
    if pieces.len() < 2 {
        return Err(GeometryError::EmptyInput);
    }
    sort_about(&h, &mut pieces);
    let n = pieces.len();
    let mut arcs = Vec::new();
    for i in 0..n {
        let (k, s, len) = pieces[i].1;
        let (k2, s2, _) = pieces[(i + 1) % n].1;
        let fk = &frames[k];
        let a = fk.boundary(s);
        let b = fk.boundary(s + len);
        if fk.rho > 0.0 {
            arcs.push(CircularArc::new(all[k].0, fk.rho, a, b));
        }
        let next = frames[k2].boundary(s2);
        if geodesic_distance(&b, &next) > MIN_PIECE {
            arcs.push(CircularArc::segment(b, next));
        }
    }
    ConvexBody::from_arcs(arcs)
}

/// Intersection of caps of radius in (0, π/2].
pub fn intersection_of_caps(caps: &[Cap]) -> Result<ConvexBody> {
    if caps.is_empty() {
        return Err(GeometryError::EmptyInput);
    }
    let mut uniq: Vec<Cap> = Vec::new();
    for c in caps {
        if !(c.1 > 0.0 && c.1 <= FRAC_PI_2) {
            return Err(GeometryError::RadiusOutOfRange {
                r: c.1,
                range: "(0, π/2]",
            });
        }
        if uniq
            .iter()
            .all(|u| geodesic_distance(&u.0, &c.0) > 1e-12 || (u.1 - c.1).abs() > 1e-12)
        {
            uniq.push(*c);
        }
    }
    let frames: Vec<Frame> = uniq.iter().map(Frame::new).collect();
    let mut pieces: Vec<(SpherePoint, (usize, f64, f64))> = Vec::new();
    for (k, fk) in frames.iter().enumerate() {
        let mut allowed = AngleSet::full();
        for (j, cj) in uniq.iter().enumerate() {
            if j == k {
                continue;
            }
            // ⟨t(φ), c_j⟩ ≥ cos ρ_j with t(φ) = cos ρ_k c_k + sin ρ_k u(φ)
            let a = fk.rho.cos() * fk.c.dot(cj.0.vector());
            let (b, phi0) = fk.harmonic(cj.0.vector());
            let b = b * fk.rho.sin();
            let rhs = cj.1.cos() - a;
            let set = if b < 1e-300 {
                if rhs <= 0.0 {
                    AngleSet::full()
                } else {
                    AngleSet(vec![])
                }
            } else {
                let x = rhs / b;
                if x <= -1.0 {
                    AngleSet::full()
                } else if x >= 1.0 {
                    AngleSet(vec![])
                } else {
                    let h = x.acos();
                    AngleSet::cyclic(phi0 - h, 2.0 * h)
                }
            };
            allowed = allowed.intersect(&set);
        }
        for (s, len) in allowed.runs() {
            if len > MIN_PIECE {
                pieces.push((fk.boundary(s + 0.5 * len), (k, s, len)));
            }
        }
    }
    if pieces.is_empty() {
        return Err(GeometryError::EmptyInput);
    }
    if pieces.len() == 1 {
        let (k, _, len) = pieces[0].1;
        if len >= TAU - MIN_PIECE {
            return ConvexBody::from_arcs(vec![CircularArc::full_circle(uniq[k].0, uniq[k].1)]);
        }
    }
    let mean = pieces
        .iter()
        .fold(Vector3::zeros(), |a, p| a + p.0.vector());
    let h = SpherePoint::from_vector(mean).map_err(|_| GeometryError::HemisphereViolation)?;
    sort_about(&h, &mut pieces);
    let arcs = pieces
        .iter()
        .map(|(_, (k, s, len))| {
            let f = &frames[*k];
            CircularArc::new(uniq[*k].0, f.rho, f.boundary(*s), f.boundary(s + len))
        })
        .collect();
    ConvexBody::from_arcs(arcs)
}
