use std::f64::consts::{FRAC_PI_2, TAU};

use super::pose::Pose;
use super::regular::{regular_triangle, solve_regular_triangle_params};
use crate::body::{hull_of_caps, ConvexBody, IncircleCertificate};
use crate::consts::TOL_OPT;
use crate::error::{GeometryError, Result};
use crate::numeric::{bisect, golden_max};
use crate::sphere::SpherePoint;

/// Incircle `B(p, r)` of a body of width `w ≤ π/2` together with three peaks
/// `q_i ∈ K` at distance `w − r` from `p` whose caps `conv(B ∪ {q_i}) \ B` have
/// pairwise disjoint interiors.
#[derive(Clone, Debug, PartialEq)]
pub struct CapDomainSpec {
    pub w: f64,
    pub base: IncircleCertificate,
    pub peaks: [SpherePoint; 3],
    /// Azimuths of the peaks about the incenter, increasing, in the frame of
    /// `Pose::new(p, 0)`.
    pub peak_azimuths: [f64; 3],
    /// `s_{i,1}, s_{i,2}`: where the two tangent segments from `q_i` touch `∂B`.
    pub attachment_points: [SpherePoint; 6],
    /// Half-angle at `p` subtended by the attachment interval of one cap.
    pub half_angle: f64,
}

impl CapDomainSpec {
    pub fn incenter(&self) -> SpherePoint {
        self.base.center
    }

    pub fn inradius(&self) -> f64 {
        self.base.radius
    }

    pub fn peak_distance(&self) -> f64 {
        self.w - self.base.radius
    }

    fn frame(&self) -> Pose {
        Pose::new(self.base.center, 0.0)
    }

    /// Cyclic gaps between consecutive attachment intervals; nonnegative iff
    /// the caps have disjoint interiors.
    pub fn attachment_gaps(&self) -> [f64; 3] {
        let a = self.peak_azimuths;
        let b = 2.0 * self.half_angle;
        [a[1] - a[0] - b, a[2] - a[1] - b, a[0] + TAU - a[2] - b]
    }

    /// `C = conv(B ∪ {q1, q2, q3})`.
    pub fn body(&self) -> Result<ConvexBody> {
        hull_of_caps(&[(self.base.center, self.base.radius)], &self.peaks)
    }
}

fn half_angle(r: f64, d: f64) -> f64 {
    if d <= r {
        0.0
    } else {
        (r.tan() / d.tan()).clamp(-1.0, 1.0).acos()
    }
}

/// Feasible peak directions: closed azimuth intervals where the radial
/// function of `K` about `p` reaches `d`.
fn feasible_intervals(k: &ConvexBody, pose: &Pose, d: f64) -> Vec<(f64, f64)> {
    let n = 2048;
    let radial = |phi: f64| k.radial_extent(&pose.center, &pose.direction(phi));
    let tol = 1e-9;
    let step = TAU / n as f64;
    let vals: Vec<f64> = (0..n).map(|i| radial(i as f64 * step)).collect();
    let mut inside = vec![false; n];
    let mut peaks: Vec<f64> = Vec::new();
    for i in 0..n {
        let (prev, next) = (vals[(i + n - 1) % n], vals[(i + 1) % n]);
        if vals[i] >= d - tol {
            inside[i] = true;
        }
        if vals[i] >= prev && vals[i] >= next {
            let c = i as f64 * step;
            let (x, v) = golden_max(radial, c - step, c + step, 1e-14);
            if v >= d - tol {
                peaks.push(x.rem_euclid(TAU));
            }
        }
    }
    let above = |phi: f64| radial(phi) - (d - tol);
    let mut out: Vec<(f64, f64)> = Vec::new();
    if inside.iter().all(|&b| b) {
        return vec![(0.0, TAU)];
    }
    // sampled runs with their boundaries refined by bisection
    for i in 0..n {
        if inside[i] && !inside[(i + n - 1) % n] {
            let mut j = i;
            while inside[(j + 1) % n] {
                j += 1;
            }
            let lo = bisect(above, (i as f64 - 1.0) * step, i as f64 * step, 1e-15);
            let hi = bisect(above, j as f64 * step, (j as f64 + 1.0) * step, 1e-15);
            out.push((lo.rem_euclid(TAU), hi - lo));
        }
    }
    for x in peaks {
        if !out.iter().any(|&(s, len)| (x - s).rem_euclid(TAU) <= len) {
            out.push((x, 0.0));
        }
    }
    out.sort_by(|a, b| a.0.total_cmp(&b.0));
    out
}

/// Earliest feasible azimuth at or after `x` (cyclically, within one turn), as
/// an unwrapped angle `≥ x`.
fn next_feasible(intervals: &[(f64, f64)], x: f64) -> Option<f64> {
    let mut best: Option<f64> = None;
    for &(s, len) in intervals {
        let off = (x - s).rem_euclid(TAU);
        let cand = if off <= len { x } else { x + (TAU - off) };
        if best.is_none_or(|b| cand < b) {
            best = Some(cand);
        }
    }
    best
}

/// Greedy placement of three azimuths with consecutive gaps at least `gap`.
fn place(intervals: &[(f64, f64)], starts: &[f64], gap: f64) -> Option<[f64; 3]> {
    for &s in starts {
        let a2 = next_feasible(intervals, s + gap)?;
        let a3 = next_feasible(intervals, a2 + gap)?;
        if a3 + gap <= s + TAU + 1e-12 {
            return Some([s, a2, a3]);
        }
    }
    None
}

/// The cap domain `C = conv(B ∪ {q1, q2, q3})` of a body of width at most π/2.
///
/// Among admissible peak triples, the one maximizing the smallest angular gap
/// between peaks is chosen (ties go to the smallest first azimuth).
pub fn cap_domain(k: &ConvexBody) -> Result<(CapDomainSpec, ConvexBody)> {
    let base = k.incircle()?;
    let (w, _) = k.width_direct()?;
    if w > FRAC_PI_2 + TOL_OPT {
        return Err(GeometryError::WidthOutOfRange {
            w,
            range: "(0, π/2]",
        });
    }
    let (p, r) = (base.center, base.radius);
    let d = w - r;
    let beta = half_angle(r, d);
    let pose = Pose::new(p, 0.0);
    let intervals = if d <= r {
        vec![(0.0, TAU)]
    } else {
        feasible_intervals(k, &pose, d)
    };
    if intervals.is_empty() {
        return Err(GeometryError::NotFound(format!(
            "no boundary point at distance {d} from the incenter"
        )));
    }
    let mut starts: Vec<f64> = Vec::new();
    for &(s, len) in &intervals {
        let m = ((len / 1e-3).ceil() as usize).clamp(1, 64);
        for j in 0..=m {
            starts.push(s + len * j as f64 / m as f64);
        }
    }
    let lowest = 2.0 * beta - TOL_OPT;
    let mut found = place(&intervals, &starts, lowest)
        .ok_or_else(|| GeometryError::NotFound(format!("no three peaks with gaps ≥ {lowest}")))?;
    let (mut lo, mut hi) = (lowest, TAU / 3.0);
    if let Some(t) = place(&intervals, &starts, hi) {
        found = t;
    } else {
        while hi - lo > 1e-12 {
            let mid = 0.5 * (lo + hi);
            match place(&intervals, &starts, mid) {
                Some(t) => {
                    found = t;
                    lo = mid;
                }
                None => hi = mid,
            }
        }
    }
    let az = found.map(|a| a.rem_euclid(TAU));
    let mut az = az;
    az.sort_by(f64::total_cmp);
    let peaks = az.map(|a| pose.point(d, a));
    let mut attachment_points = [p; 6];
    for i in 0..3 {
        attachment_points[2 * i] = pose.point(r, az[i] - beta);
        attachment_points[2 * i + 1] = pose.point(r, az[i] + beta);
    }
    let spec = CapDomainSpec {
        w,
        base,
        peaks,
        peak_azimuths: az,
        attachment_points,
        half_angle: beta,
    };
    let c = spec.body()?;
    Ok((spec, c))
}

/// Peaks moved along `∂B(p, w − r)` to azimuths `φ1, φ1 + 2π/3, φ1 + 4π/3`.
pub fn regularized_peaks(spec: &CapDomainSpec) -> [SpherePoint; 3] {
    let pose = spec.frame();
    let a0 = spec.peak_azimuths[0];
    [0.0, 1.0, 2.0].map(|k| pose.point(spec.peak_distance(), a0 + k * TAU / 3.0))
}

/// `C_reg = conv(B ∪ {q̃1, q̃2, q̃3})`, which has the same area as `C`.
pub fn regularized_cap_domain(spec: &CapDomainSpec) -> Result<ConvexBody> {
    hull_of_caps(
        &[(spec.base.center, spec.base.radius)],
        &regularized_peaks(spec),
    )
}

/// The hexagon `Q(η) = conv{q̃1, q̃2, q̃3, t̃1, t̃2, t̃3}` with the `q̃_i` at
/// distance `w − r(T_w) − η` and the `t̃_i` at distance `r(T_w) + η` from the
/// center, alternating at azimuth steps π/3.
pub fn hexagon_q(eta: f64, w: f64, pose: Pose) -> Result<ConvexBody> {
    let s = solve_regular_triangle_params(w)?;
    let max = 0.5 * w - s.r;
    if !(eta >= 0.0 && eta <= max + 1e-15) {
        return Err(GeometryError::EtaOutOfRange { eta, max });
    }
    let pts: Vec<SpherePoint> = (0..6)
        .map(|j| {
            let dist = if j % 2 == 0 { w - s.r - eta } else { s.r + eta };
            pose.point(dist, j as f64 * TAU / 6.0)
        })
        .collect();
    hull_of_caps(&[], &pts)
}

/// The regular triangle of width `w(K)` centered at the incenter of `K` with
/// its vertices on the rays through the regularized peaks.
pub fn candidate_regular_triangle(k: &ConvexBody) -> Result<ConvexBody> {
    let (spec, _) = cap_domain(k)?;
    candidate_from_spec(&spec)
}

pub(crate) fn candidate_from_spec(spec: &CapDomainSpec) -> Result<ConvexBody> {
    regular_triangle(spec.w, Pose::new(spec.base.center, spec.peak_azimuths[0]))
}
