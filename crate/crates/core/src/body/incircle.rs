use std::f64::consts::{PI, TAU};

use nalgebra::{Matrix3, Vector3};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::convex::ConvexBody;
use crate::consts::TOL_OPT;
use crate::error::{GeometryError, Result};
use crate::numeric::nelder_mead;
use crate::sphere::{geodesic_distance, reference_tangent, SpherePoint};

/// Incenter, inradius and the contact points certifying that the incircle is
/// maximal: either two contacts on a geodesic through the center, or three
/// contacts whose triangle contains the center.
#[derive(Clone, Debug, PartialEq)]
pub struct IncircleCertificate {
    pub center: SpherePoint,
    pub radius: f64,
    pub contacts: Vec<SpherePoint>,
}

impl IncircleCertificate {
    /// Angles at the center between consecutive contacts, in counterclockwise
    /// order starting from the first contact; they sum to 2π.
    pub fn contact_angles(&self) -> Vec<f64> {
        let mut az = contact_azimuths(&self.center, &self.contacts);
        az.sort_by(f64::total_cmp);
        let n = az.len();
        (0..n)
            .map(|i| {
                if i + 1 < n {
                    az[i + 1] - az[i]
                } else {
                    az[0] + TAU - az[i]
                }
            })
            .collect()
    }
}

fn contact_azimuths(p: &SpherePoint, contacts: &[SpherePoint]) -> Vec<f64> {
    let e1 = reference_tangent(p);
    let e2 = p.vector().cross(&e1);
    contacts
        .iter()
        .map(|c| {
            let v = c.vector();
            v.dot(&e2).atan2(v.dot(&e1)).rem_euclid(TAU)
        })
        .collect()
}

/// Largest cyclic gap between the given azimuths.
fn max_gap(mut az: Vec<f64>) -> f64 {
    az.sort_by(f64::total_cmp);
    let n = az.len();
    (0..n)
        .map(|i| {
            if i + 1 < n {
                az[i + 1] - az[i]
            } else {
                az[0] + TAU - az[i]
            }
        })
        .fold(0.0, f64::max)
}

impl ConvexBody {
    /// The largest inscribed cap with a contact certificate.
    pub fn incircle(&self) -> Result<IncircleCertificate> {
        let (center, radius) = self.inscribed_cap();
        let contacts = self.certificate_contacts(&center, radius)?;
        Ok(IncircleCertificate {
            center,
            radius,
            contacts,
        })
    }

    fn seeds(&self) -> Vec<SpherePoint> {
        let mut seeds = vec![self.reference_point()];
        let vc = self
            .vertices()
            .iter()
            .fold(Vector3::zeros(), |a, v| a + v.vector());
        if let Ok(p) = SpherePoint::from_vector(vc) {
            seeds.push(p);
        }
        let samples = self.boundary_samples(64);
        let mut rng = ChaCha8Rng::seed_from_u64(0x1_c1c1e);
        while seeds.len() < 9 {
            let mut v = self.reference_point().vector() * rng.gen_range(0.2..1.0);
            for _ in 0..3 {
                let s = samples[rng.gen_range(0..samples.len())];
                v += s.point.vector() * rng.gen_range(0.0..1.0);
            }
            seeds.push(SpherePoint::normalized(v));
        }
        seeds
    }

    /// Center and radius of the inscribed cap of maximal radius.
    fn inscribed_cap(&self) -> (SpherePoint, f64) {
        let mut best = (
            self.reference_point(),
            self.signed_depth(&self.reference_point()),
        );
        for seed in self.seeds() {
            let e1 = reference_tangent(&seed);
            let e2 = seed.vector().cross(&e1);
            let at = |q: &[f64]| SpherePoint::normalized(seed.vector() + e1 * q[0] + e2 * q[1]);
            let step = self.signed_depth(&seed).abs().max(0.02) * 0.5;
            let (q, v) = nelder_mead(
                |q| -self.signed_depth(&at(q)),
                &[0.0, 0.0],
                step,
                1e-13,
                1e-16,
                4000,
            );
            if -v > best.1 {
                best = (at(&q), -v);
            }
        }
        self.polish_incircle(best.0, best.1)
    }

    /// Solves the tangency equations `⟨x, c_k⟩ = cos(ρ_k − r)` of the active
    /// boundary features exactly and keeps the best verified solution.
    fn polish_incircle(&self, x0: SpherePoint, r0: f64) -> (SpherePoint, f64) {
        let mut feats: Vec<(Vector3<f64>, f64)> = Vec::new();
        for g in self.geoms() {
            let (d, t) = g.nearest(&x0);
            if d > r0 + 1e-5 {
                continue;
            }
            let interior = t > 0.0 && t < g.span || g.span >= TAU;
            if interior || g.circle.radius == 0.0 {
                feats.push((*g.circle.axis.vector(), g.circle.radius));
            } else {
                feats.push((*g.point_at(t).vector(), 0.0));
                feats.push((*g.circle.axis.vector(), g.circle.radius));
            }
        }
        let mut best = (x0, r0);
        let mut consider = |x: Vector3<f64>, r: f64| {
            if !(r > 0.0) || !x.iter().all(|c| c.is_finite()) || (x.norm() - 1.0).abs() > 1e-9 {
                return;
            }
            let x = SpherePoint::normalized(x);
            let depth = self.signed_depth(&x);
            if (depth - r).abs() < 1e-10 && depth > best.1 - 1e-12 {
                best = (x, depth);
            }
        };
        for &(c, rho) in &feats {
            consider(c, rho);
        }
        let n = feats.len();
        for i in 0..n {
            for j in i + 1..n {
                let (ci, ri) = feats[i];
                let (cj, rj) = feats[j];
                let d = ci.cross(&cj).norm().atan2(ci.dot(&cj));
                let r = 0.5 * (ri + rj - d);
                let (pi, pj) = (SpherePoint::normalized(ci), SpherePoint::normalized(cj));
                if d > 1e-12 && ri - r >= 0.0 {
                    if let Some(x) = pi.towards(&pj, ri - r) {
                        consider(*x.vector(), r);
                    }
                }
                for k in j + 1..n {
                    if let Some((x, r)) = solve_triple([feats[i], feats[j], feats[k]], r0) {
                        consider(x, r);
                    }
                }
            }
        }
        best
    }

    fn certificate_contacts(&self, p: &SpherePoint, r: f64) -> Result<Vec<SpherePoint>> {
        if self.arcs().len() == 1 {
            let g = &self.geoms()[0];
            if geodesic_distance(p, &g.circle.axis) < 1e-9 {
                let a = g.circle.azimuth(&g.circle.point_at(0.0));
                return Ok(vec![g.circle.point_at(a), g.circle.point_at(a + PI)]);
            }
        }
        let mut cand: Vec<SpherePoint> = Vec::new();
        let push = |q: SpherePoint, cand: &mut Vec<SpherePoint>| {
            if cand.iter().all(|c| geodesic_distance(c, &q) > 1e-9) {
                cand.push(q);
            }
        };
        for g in self.geoms() {
            if geodesic_distance(p, &g.circle.axis) < 1e-9 {
                if (g.circle.radius - r).abs() <= TOL_OPT {
                    for i in 0..=12 {
                        push(g.point_at(g.span * i as f64 / 12.0), &mut cand);
                    }
                }
                continue;
            }
            let (d, t) = g.nearest(p);
            if d <= r + 1e-8 {
                push(g.point_at(t), &mut cand);
            }
        }
        let az = contact_azimuths(p, &cand);
        let n = cand.len();
        let mut best: Option<(f64, [usize; 3])> = None;
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let g = max_gap(vec![az[i], az[j], az[k]]);
                    if g < PI - 1e-12 && best.is_none_or(|b| g < b.0) {
                        best = Some((g, [i, j, k]));
                    }
                }
            }
        }
        if let Some((_, idx)) = best {
            return Ok(idx.iter().map(|&i| cand[i]).collect());
        }
        let mut pair: Option<(f64, [usize; 2])> = None;
        for i in 0..n {
            for j in i + 1..n {
                let dev = ((az[i] - az[j]).abs() - PI).abs();
                if dev < 1e-6 && pair.is_none_or(|b| dev < b.0) {
                    pair = Some((dev, [i, j]));
                }
            }
        }
        pair.map(|(_, idx)| vec![cand[idx[0]], cand[idx[1]]])
            .ok_or(GeometryError::CertificateFailure)
    }
}

/// Point `x` and radius `r` with `⟨x, c_k⟩ = cos(ρ_k − r)` for three features
/// and `|x| = 1`, by Newton's method in `r` starting from `r0`.
fn solve_triple(f: [(Vector3<f64>, f64); 3], r0: f64) -> Option<(Vector3<f64>, f64)> {
    let m = Matrix3::from_rows(&[f[0].0.transpose(), f[1].0.transpose(), f[2].0.transpose()]);
    let inv = m.try_inverse()?;
    if inv.norm() > 1e8 {
        return None;
    }
    let mut r = r0;
    for _ in 0..60 {
        let b = Vector3::new((f[0].1 - r).cos(), (f[1].1 - r).cos(), (f[2].1 - r).cos());
        let db = Vector3::new((f[0].1 - r).sin(), (f[1].1 - r).sin(), (f[2].1 - r).sin());
        let x = inv * b;
        let g = x.norm_squared() - 1.0;
        let dg = 2.0 * x.dot(&(inv * db));
        if dg.abs() < 1e-300 {
            return None;
        }
        let step = g / dg;
        r -= step;
        if step.abs() < 1e-15 {
            break;
        }
    }
    let b = Vector3::new((f[0].1 - r).cos(), (f[1].1 - r).cos(), (f[2].1 - r).cos());
    Some((inv * b, r))
}

#[cfg(test)]
mod tests {
    use super::super::arc::CircularArc;
    use super::*;

    #[test]
    fn disk_incircle() {
        let c = SpherePoint::new(0.2, 0.3, 0.9).unwrap();
        let d = ConvexBody::from_arcs(vec![CircularArc::full_circle(c, 0.6)]).unwrap();
        let cert = d.incircle().unwrap();
        assert!(geodesic_distance(&cert.center, &c) < 1e-9);
        assert!((cert.radius - 0.6).abs() < 1e-12);
        assert_eq!(cert.contacts.len(), 2);
        assert!((geodesic_distance(&cert.contacts[0], &cert.contacts[1]) - 1.2).abs() < 1e-9);
    }

    #[test]
    fn octant_incircle() {
        let (x, y, z) = (
            SpherePoint::x_axis(),
            SpherePoint::y_axis(),
            SpherePoint::z_axis(),
        );
        let o = ConvexBody::from_arcs(vec![
            CircularArc::segment(x, y),
            CircularArc::segment(y, z),
            CircularArc::segment(z, x),
        ])
        .unwrap();
        let cert = o.incircle().unwrap();
        assert!(
            (cert.radius - (1.0 / 2f64.sqrt()).atan()).abs() < 1e-12,
            "{}",
            cert.radius
        );
        assert_eq!(cert.contacts.len(), 3);
        for a in cert.contact_angles() {
            assert!((a - 2.0 * PI / 3.0).abs() < 1e-9);
        }
        for q in &cert.contacts {
            assert!((geodesic_distance(q, &cert.center) - cert.radius).abs() < 1e-9);
        }
    }
}
