use std::f64::consts::{FRAC_PI_2, PI, TAU};

use nalgebra::{Quaternion, Rotation3, UnitQuaternion, Vector3};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::pose::Pose;
use crate::body::{hull_of_caps, intersection_of_caps, Cap, ConvexBody};
use crate::error::{GeometryError, Result};
use crate::polar::polar_body;
use crate::sphere::SpherePoint;

const MAX_ATTEMPTS: usize = 200;

fn random_point<R: Rng>(rng: &mut R) -> SpherePoint {
    let z: f64 = rng.gen_range(-1.0..1.0);
    let phi: f64 = rng.gen_range(0.0..TAU);
    let s = (1.0 - z * z).sqrt();
    SpherePoint::normalized(Vector3::new(s * phi.cos(), s * phi.sin(), z))
}

/// A uniformly distributed point of the cap `B(center, radius)`.
fn random_in_cap<R: Rng>(rng: &mut R, center: &SpherePoint, radius: f64) -> SpherePoint {
    let c: f64 = rng.gen_range(radius.cos()..=1.0);
    let pose = Pose::new(*center, 0.0);
    pose.point(c.clamp(-1.0, 1.0).acos(), rng.gen_range(0.0..TAU))
}

fn random_rotation<R: Rng>(rng: &mut R) -> Rotation3<f64> {
    loop {
        let q = Quaternion::new(
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
        );
        let n = q.norm();
        if n > 0.1 && n <= 1.0 {
            return UnitQuaternion::from_quaternion(q).to_rotation_matrix();
        }
    }
}

/// Rotation of the tangent vector `t` at `p` by `theta` counterclockwise.
fn turn(p: &SpherePoint, t: &Vector3<f64>, theta: f64) -> Vector3<f64> {
    t * theta.cos() + p.vector().cross(t) * theta.sin()
}

/// The point of `∂B(a, d) ∩ ∂B(b, d)` closest to `near`.
fn two_circle_point(
    a: &SpherePoint,
    b: &SpherePoint,
    d: f64,
    near: &SpherePoint,
) -> Option<SpherePoint> {
    let g = a.dot(b);
    if g <= -1.0 + 1e-12 {
        return None;
    }
    let alpha = d.cos() / (1.0 + g);
    let axb = a.cross(b);
    let rest = 1.0 - alpha * alpha * 2.0 * (1.0 + g);
    let n2 = axb.norm_squared();
    if rest < 0.0 || n2 < 1e-24 {
        return None;
    }
    let gamma = (rest / n2).sqrt();
    let base = (a.vector() + b.vector()) * alpha;
    [base + axb * gamma, base - axb * gamma]
        .into_iter()
        .map(SpherePoint::normalized)
        .min_by(|x, y| x.distance(near).total_cmp(&y.distance(near)))
}

/// A random Reuleaux polygon of constant width `d ∈ (0, π/2)` with `n` (odd)
/// vertices, or `None` if the draw is rejected.
fn reuleaux_polygon_attempt<R: Rng>(rng: &mut R, d: f64, n: usize) -> Option<ConvexBody> {
    let m = (n - 1) / 2;
    let sin2 = (1.0 - d.cos()) / (1.0 - (TAU * m as f64 / n as f64).cos());
    if !(sin2 > 0.0 && sin2 < 1.0) {
        return None;
    }
    let big_r = sin2.sqrt().asin();
    let pose = Pose::default();
    let regular: Vec<SpherePoint> = (0..n)
        .map(|k| pose.point(big_r, TAU * ((k * m) % n) as f64 / n as f64))
        .collect();
    let tip = |s: &[SpherePoint], k: usize| -> Option<f64> {
        let p = &s[k];
        let t1 = p.direction_to(&s[(k + n - 1) % n])?;
        let t2 = p.direction_to(&s[(k + 1) % n])?;
        Some(p.vector().dot(&t1.cross(&t2)).atan2(t1.dot(&t2)))
    };
    let psi = tip(&regular, 1)?;
    let mut s = vec![regular[0], regular[1]];
    for k in 1..n - 2 {
        let delta = rng.gen_range(-0.3..=0.3) * psi.abs();
        let t1 = s[k].direction_to(&s[k - 1])?;
        let next = s[k].travel(&turn(&s[k], &t1, psi + delta), d);
        s.push(next);
    }
    let last = two_circle_point(&s[n - 2], &s[0], d, &regular[n - 1])?;
    s.push(last);
    for i in 0..n {
        for j in i + 1..n {
            if s[i].distance(&s[j]) > d + 1e-12 {
                return None;
            }
        }
    }
    let caps: Vec<Cap> = s.iter().map(|c| (*c, d)).collect();
    let body = intersection_of_caps(&caps).ok()?;
    if body.arcs().len() != n || body.constant_width_spread() > 1e-6 {
        return None;
    }
    Some(body)
}

/// A random Reuleaux polygon of constant width `d ∈ (0, π/2)` with `n ∈ {3, 5,
/// 7, 9}` vertices, randomly rotated.
pub fn random_reuleaux_polygon(d: f64, n: usize, seed: u64) -> Result<ConvexBody> {
    if !(d > 0.0 && d < FRAC_PI_2) {
        return Err(GeometryError::WidthOutOfRange {
            w: d,
            range: "(0, π/2)",
        });
    }
    if n < 3 || n.is_multiple_of(2) {
        return Err(GeometryError::OutOfRange {
            value: n as f64,
            range: "odd n ≥ 3",
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_ATTEMPTS {
        if let Some(b) = reuleaux_polygon_attempt(&mut rng, d, n) {
            return Ok(b.rotate(&random_rotation(&mut rng)).canonicalize());
        }
    }
    Err(GeometryError::GenerationFailure {
        attempts: MAX_ATTEMPTS,
    })
}

/// A random body of constant width `w ∈ (0, π) \ {π/2}`: a Reuleaux polygon
/// for `w < π/2`, the polar of one of width `π − w` for `w > π/2`.
pub fn random_constant_width(w: f64, seed: u64) -> Result<ConvexBody> {
    if !(w > 0.0 && w < PI) || w == FRAC_PI_2 {
        return Err(GeometryError::WidthOutOfRange {
            w,
            range: "(0, π/2) ∪ (π/2, π)",
        });
    }
    let d = if w < FRAC_PI_2 { w } else { PI - w };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = [3, 5, 7, 9][rng.gen_range(0..4)];
    let u = random_reuleaux_polygon(d, n, rng.gen())?;
    if w < FRAC_PI_2 {
        Ok(u)
    } else {
        polar_body(&u)
    }
}

/// A seeded random convex body whose width is close to `target_w`. For
/// `target_w ≤ π/2` it is the hull of a few random points and small caps in a
/// cap, with measured width at most π/2; above π/2 it is a random body of
/// constant width `target_w`. The actual width must be measured.
pub fn random_body(target_w: f64, seed: u64) -> Result<ConvexBody> {
    if !(target_w > 0.0 && target_w < PI) {
        return Err(GeometryError::WidthOutOfRange {
            w: target_w,
            range: "(0, π)",
        });
    }
    if target_w > FRAC_PI_2 {
        return random_constant_width(target_w, seed);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_ATTEMPTS {
        let center = random_point(&mut rng);
        let radius = target_w * rng.gen_range(0.55..0.75);
        let npts = rng.gen_range(3..=12);
        let points: Vec<SpherePoint> = (0..npts)
            .map(|_| random_in_cap(&mut rng, &center, radius))
            .collect();
        let mut caps: Vec<Cap> = Vec::new();
        if rng.gen_bool(0.3) {
            for _ in 0..rng.gen_range(1..=2) {
                let rho = rng.gen_range(0.02..0.15) * target_w;
                caps.push((random_in_cap(&mut rng, &center, radius - rho), rho));
            }
        }
        let Ok(k) = hull_of_caps(&caps, &points) else {
            continue;
        };
        if !k.validate().is_valid() {
            continue;
        }
        match k.width_direct() {
            Ok((w, _)) if w <= FRAC_PI_2 && w > 1e-3 => return Ok(k.canonicalize()),
            _ => continue,
        }
    }
    Err(GeometryError::GenerationFailure {
        attempts: MAX_ATTEMPTS,
    })
}
