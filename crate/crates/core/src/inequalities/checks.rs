use std::f64::consts::{FRAC_PI_2, PI, TAU};

use serde::{Deserialize, Serialize};

use super::formulas::f_eval;
use crate::body::ConvexBody;
use crate::consts::TOL_OPT;
use crate::error::{GeometryError, Result};
use crate::numeric::{golden_min, nelder_mead};
use crate::polar::{is_constant_width, polar_body};
use crate::shapes::{
    candidate_from_spec, cap_domain, polar_reuleaux, regular_triangle, regularized_cap_domain,
    reuleaux_triangle, solve_regular_triangle_params, Pose,
};
use crate::sphere::{reference_tangent, SpherePoint};

/// Spread below which a body counts as being of constant width.
pub const CONSTANT_WIDTH_TOL: f64 = 1e-6;

/// One inequality evaluation: `slack = area − bound`, passing iff
/// `slack ≥ −TOL_OPT`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationRecord {
    pub body_id: String,
    pub w: f64,
    pub area: f64,
    pub bound: f64,
    pub slack: f64,
    pub passed: bool,
}

impl VerificationRecord {
    fn new(w: f64, area: f64, bound: f64) -> Self {
        let slack = area - bound;
        Self {
            body_id: String::new(),
            w,
            area,
            bound,
            slack,
            passed: slack >= -TOL_OPT,
        }
    }

    pub fn with_id(mut self, id: impl Into<String>) -> Self {
        self.body_id = id.into();
        self
    }
}

/// Area of the minimizer at width `w`: `T_w` up to π/2, `U°_{π−w}` above.
pub fn isominwidth_bound(w: f64) -> Result<f64> {
    if w <= FRAC_PI_2 {
        Ok(regular_triangle(w.min(FRAC_PI_2), Pose::default())?.area())
    } else {
        Ok(polar_reuleaux(w, Pose::default())?.area())
    }
}

/// `area(K) ≥ area(T_w)` for `w ≤ π/2`, `area(K) ≥ area(U°_{π−w})` above.
pub fn check_isominwidth(k: &ConvexBody) -> Result<VerificationRecord> {
    let (w, _) = k.width_direct()?;
    Ok(VerificationRecord::new(w, k.area(), isominwidth_bound(w)?))
}

fn require_constant_width(k: &ConvexBody) -> Result<()> {
    let (ok, spread) = is_constant_width(k, CONSTANT_WIDTH_TOL);
    if ok {
        Ok(())
    } else {
        Err(GeometryError::NotConstantWidth { spread })
    }
}

/// `|per(K) − (2π − area(K))·tan(w/2)|` for a body of constant width `w`.
pub fn check_barbier(k: &ConvexBody) -> Result<f64> {
    require_constant_width(k)?;
    let (w, _) = k.width_direct()?;
    Ok((k.perimeter() - (TAU - k.area()) * (0.5 * w).tan()).abs())
}

/// `|area(K) − (2π − per(K°))|`.
pub fn check_area_perimeter_polarity(k: &ConvexBody) -> Result<f64> {
    let p = polar_body(k)?;
    Ok((k.area() - (TAU - p.perimeter())).abs())
}

/// `|area(K) − (2π − (2π − area(K°))·tan((π − w)/2))|` for a body of constant
/// width `w > π/2`.
pub fn check_polar_area_identity(k: &ConvexBody) -> Result<f64> {
    require_constant_width(k)?;
    let (w, _) = k.width_direct()?;
    if w <= FRAC_PI_2 {
        return Err(GeometryError::WidthOutOfRange {
            w,
            range: "(π/2, π)",
        });
    }
    let p = polar_body(k)?;
    Ok((k.area() - (TAU - (TAU - p.area()) * (0.5 * (PI - w)).tan())).abs())
}

/// `area(K) ≥ area(U_w)` for `K` of constant width `w ≤ π/2`.
pub fn check_blaschke_lebesgue(k: &ConvexBody) -> Result<VerificationRecord> {
    require_constant_width(k)?;
    let (w, _) = k.width_direct()?;
    let u = reuleaux_triangle(w, Pose::default())?;
    Ok(VerificationRecord::new(w, k.area(), u.area()))
}

/// `(δ(K, L), δ(K°, L°))`; the two agree when `δ(K, L) < π/2`.
pub fn check_polar_hausdorff(k: &ConvexBody, l: &ConvexBody) -> Result<(f64, f64)> {
    let d = k.hausdorff(l);
    let dp = polar_body(k)?.hausdorff(&polar_body(l)?);
    Ok((d, dp))
}

/// `r(K) − r(T_w)` for `w = w(K) ≤ π/2`; nonnegative for every body.
pub fn inradius_excess(k: &ConvexBody) -> Result<f64> {
    let (w, _) = k.width_direct()?;
    let s = solve_regular_triangle_params(w)?;
    Ok(k.incircle()?.radius - s.r)
}

/// The links of `area(K) ≥ area(C) = area(C_reg) ≥ F(η) ≥ area(T_w)` with
/// `η = r(K) − r(T_w)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CapDomainChain {
    pub w: f64,
    pub eta: f64,
    pub area_k: f64,
    pub area_c: f64,
    pub area_c_reg: f64,
    pub f_bound: f64,
    pub area_t: f64,
}

impl CapDomainChain {
    /// Largest violation over the four links (≤ 0 means every link holds).
    pub fn max_violation(&self) -> f64 {
        [
            self.area_c - self.area_k,
            (self.area_c - self.area_c_reg).abs(),
            self.f_bound - self.area_c_reg,
            self.area_t - self.f_bound,
        ]
        .into_iter()
        .fold(f64::NEG_INFINITY, f64::max)
    }
}

pub fn cap_domain_chain(k: &ConvexBody) -> Result<CapDomainChain> {
    let (spec, c) = cap_domain(k)?;
    let w = spec.w;
    let s = solve_regular_triangle_params(w)?;
    let eta = (spec.inradius() - s.r).clamp(0.0, 0.5 * w - s.r);
    Ok(CapDomainChain {
        w,
        eta,
        area_k: k.area(),
        area_c: c.area(),
        area_c_reg: regularized_cap_domain(&spec)?.area(),
        f_bound: f_eval(eta, w)?,
        area_t: f_eval(0.0, w)?,
    })
}

/// Contact angles of a three-contact incircle and `η = r(K) − r(T_w)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ContactAngleReport {
    pub angles: [f64; 3],
    pub eta: f64,
}

impl ContactAngleReport {
    pub fn max_deviation(&self) -> f64 {
        self.angles
            .iter()
            .map(|a| (a - TAU / 3.0).abs())
            .fold(0.0, f64::max)
    }
}

pub fn contact_angle_report(k: &ConvexBody) -> Result<ContactAngleReport> {
    let (w, _) = k.width_direct()?;
    let s = solve_regular_triangle_params(w)?;
    let cert = k.incircle()?;
    let a = cert.contact_angles();
    if a.len() != 3 {
        return Err(GeometryError::TwoContactCase);
    }
    Ok(ContactAngleReport {
        angles: [a[0], a[1], a[2]],
        eta: cert.radius - s.r,
    })
}

/// `δ(K, L)` and `ε = area(K) − area(U°_{π−w})` for a reduction `L ⊆ K` of
/// constant width `w > π/2`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ReductionDistance {
    pub lhs: f64,
    pub eps: f64,
}

pub fn check_reduction_distance(k: &ConvexBody, l: &ConvexBody) -> Result<ReductionDistance> {
    let (wk, _) = k.width_direct()?;
    let (wl, _) = l.width_direct()?;
    if (wk - wl).abs() > TOL_OPT {
        return Err(GeometryError::NotAReductionPair(format!(
            "widths differ: {wk} vs {wl}"
        )));
    }
    if wk <= FRAC_PI_2 {
        return Err(GeometryError::NotAReductionPair(format!(
            "width {wk} is not above π/2"
        )));
    }
    if !is_constant_width(l, CONSTANT_WIDTH_TOL).0 {
        return Err(GeometryError::NotAReductionPair(
            "L is not of constant width".into(),
        ));
    }
    if l.boundary_samples(256)
        .iter()
        .any(|s| !k.contains(&s.point))
    {
        return Err(GeometryError::NotAReductionPair(
            "L is not contained in K".into(),
        ));
    }
    let eps = k.area() - polar_reuleaux(wk, Pose::default())?.area();
    Ok(ReductionDistance {
        lhs: k.hausdorff(l),
        eps,
    })
}

/// Azimuth in `[0, period)` minimizing `f`: a coarse grid followed by golden
/// section around the best grid point.
fn best_azimuth(period: f64, mut f: impl FnMut(f64) -> f64) -> (f64, f64) {
    let n = 36;
    let step = period / n as f64;
    let mut best = (0.0, f(0.0));
    for i in 1..n {
        let a = i as f64 * step;
        let v = f(a);
        if v < best.1 {
            best = (a, v);
        }
    }
    let (a, v) = golden_min(&mut f, best.0 - step, best.0 + step, 1e-10);
    if v < best.1 {
        (a.rem_euclid(period), v)
    } else {
        best
    }
}

/// `U°_{π−w}` centered at the incenter of `K`, rotated to minimize the
/// Hausdorff distance to `K`; returns the body and the distance.
pub fn best_posed_polar_reuleaux(k: &ConvexBody, w: f64) -> Result<(ConvexBody, f64)> {
    let p = k.incircle()?.center;
    polar_reuleaux(w, Pose::new(p, 0.0))?;
    let (az, d) = best_azimuth(TAU / 3.0, |a| match polar_reuleaux(w, Pose::new(p, a)) {
        Ok(u) => k.hausdorff(&u),
        Err(_) => f64::INFINITY,
    });
    Ok((polar_reuleaux(w, Pose::new(p, az))?, d))
}

/// `U_D` centered at the incenter of `K` (of constant width `D ≤ π/2`),
/// rotated to minimize the Hausdorff distance to `K`.
pub fn best_fit_reuleaux(k: &ConvexBody) -> Result<(ConvexBody, f64)> {
    let (d, _) = k.width_direct()?;
    let p = k.incircle()?.center;
    reuleaux_triangle(d, Pose::new(p, 0.0))?;
    let (az, dist) = best_azimuth(TAU / 3.0, |a| match reuleaux_triangle(d, Pose::new(p, a)) {
        Ok(u) => k.hausdorff(&u),
        Err(_) => f64::INFINITY,
    });
    Ok((reuleaux_triangle(d, Pose::new(p, az))?, dist))
}

/// `(δ(K, U), area(K)/area(U_D) − 1)` with `U` the best-fit Reuleaux triangle.
pub fn blaschke_lebesgue_stability(k: &ConvexBody) -> Result<(f64, f64)> {
    let (u, dist) = best_fit_reuleaux(k)?;
    Ok((dist, k.area() / u.area() - 1.0))
}

/// A regular triangle of width `w` close to `K` in the Hausdorff distance:
/// starts from the cap-domain candidate and optimizes center and azimuth.
pub fn best_regular_triangle(k: &ConvexBody, w: f64) -> Result<(ConvexBody, f64)> {
    let (spec, _) = cap_domain(k)?;
    let start = candidate_from_spec(&spec)?;
    let p0 = spec.incenter();
    let e1 = reference_tangent(&p0);
    let e2 = p0.vector().cross(&e1);
    let pose = |q: &[f64]| {
        let c = SpherePoint::normalized(p0.vector() + e1 * q[0] + e2 * q[1]);
        Pose::new(c, spec.peak_azimuths[0] + q[2])
    };
    let eval = |q: &[f64]| match regular_triangle(w, pose(q)) {
        Ok(t) => k.hausdorff(&t),
        Err(_) => f64::INFINITY,
    };
    let d0 = k.hausdorff(&start);
    let step = d0.max(1e-6);
    let (q, d) = nelder_mead(eval, &[0.0, 0.0, 0.0], step, 1e-12, 1e-14, 400);
    if d < d0 {
        Ok((regular_triangle(w, pose(&q))?, d))
    } else {
        Ok((start, d0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::body::CircularArc;

    #[test]
    fn equality_cases() {
        let t = regular_triangle(1.1, Pose::default()).unwrap();
        let r = check_isominwidth(&t).unwrap();
        assert!(r.slack.abs() < 1e-8 && r.passed);
        let u = polar_reuleaux(
            2.1,
            Pose::new(SpherePoint::new(0.3, 0.1, 0.9).unwrap(), 1.0),
        )
        .unwrap();
        let r = check_isominwidth(&u).unwrap();
        assert!(r.slack.abs() < 1e-8, "{}", r.slack);
    }

    #[test]
    fn disk_isominwidth_slack() {
        let w = 1.0;
        let d = ConvexBody::from_arcs(vec![CircularArc::full_circle(
            SpherePoint::z_axis(),
            0.5 * w,
        )])
        .unwrap();
        let r = check_isominwidth(&d).unwrap();
        let t = regular_triangle(w, Pose::default()).unwrap().area();
        assert!((r.slack - (TAU * (1.0 - (0.5 * w).cos()) - t)).abs() < 1e-10);
        assert!(r.slack > 0.0);
    }

    #[test]
    fn barbier_and_polarity_on_known_bodies() {
        let u = reuleaux_triangle(0.8, Pose::default()).unwrap();
        assert!(check_barbier(&u).unwrap() < 1e-7);
        assert!(check_area_perimeter_polarity(&u).unwrap() < 1e-7);
        let t = regular_triangle(0.8, Pose::default()).unwrap();
        assert!(matches!(
            check_barbier(&t),
            Err(GeometryError::NotConstantWidth { .. })
        ));
        let up = polar_reuleaux(PI - 0.8, Pose::default()).unwrap();
        assert!(check_polar_area_identity(&up).unwrap() < 1e-7);
    }

    #[test]
    fn reuleaux_blaschke_lebesgue_equality() {
        let u = reuleaux_triangle(
            1.0,
            Pose::new(SpherePoint::new(0.5, 0.5, 0.7).unwrap(), 0.2),
        )
        .unwrap();
        let r = check_blaschke_lebesgue(&u).unwrap();
        assert!(r.slack.abs() < 1e-8);
        let (d, gap) = blaschke_lebesgue_stability(&u).unwrap();
        assert!(d < 1e-8 && gap.abs() < 1e-8, "{d} {gap}");
    }

    #[test]
    fn reduction_pair_of_identical_bodies() {
        let u = polar_reuleaux(2.0, Pose::default()).unwrap();
        let r = check_reduction_distance(&u, &u).unwrap();
        assert!(r.lhs < 1e-12 && r.eps.abs() < 1e-10);
        let t = regular_triangle(1.0, Pose::default()).unwrap();
        assert!(check_reduction_distance(&t, &t).is_err());
    }

    #[test]
    fn regular_triangle_contact_angles() {
        let t = regular_triangle(1.3, Pose::default()).unwrap();
        let r = contact_angle_report(&t).unwrap();
        assert!(r.max_deviation() < 1e-9);
        assert!(r.eta.abs() < 1e-9);
        assert!((r.angles.iter().sum::<f64>() - TAU).abs() < 1e-12);
    }

    #[test]
    fn chain_on_regular_triangle_is_tight() {
        let t = regular_triangle(0.9, Pose::default()).unwrap();
        let c = cap_domain_chain(&t).unwrap();
        assert!(c.max_violation() < 1e-7);
        assert!((c.area_k - c.area_t).abs() < 1e-9);
    }
}
