use std::f64::consts::{FRAC_PI_2, PI};

use super::convex::ConvexBody;
use super::lune::Lune;
use crate::consts::{DEFAULT_BOUNDARY_SAMPLES, DEFAULT_WIDTH_DIRECTIONS};
use crate::error::Result;
use crate::numeric::{golden_max, golden_min};
use crate::sphere::{ArcGeom, Circle, SpherePoint};

/// Breadth of the body in every sampled supporting direction.
#[derive(Clone, Debug)]
pub struct BreadthProfile {
    pub directions: Vec<SpherePoint>,
    pub breadths: Vec<f64>,
}

impl BreadthProfile {
    pub fn min(&self) -> f64 {
        self.breadths.iter().copied().fold(f64::INFINITY, f64::min)
    }

    pub fn max(&self) -> f64 {
        self.breadths
            .iter()
            .copied()
            .fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn spread(&self) -> f64 {
        self.max() - self.min()
    }
}

impl ConvexBody {
    /// The outward unit normals of all supporting hemispheres, as circle
    /// pieces: one per arc of radius below π/2 (a circle about the antipode of
    /// its center), a point for each geodesic edge, and a quarter-plane fan
    /// (a great-circle piece about the vertex) for every corner.
    pub fn normal_pieces(&self) -> Vec<ArcGeom> {
        let arcs = self.arcs();
        let geoms = self.geoms();
        let mut out = Vec::with_capacity(2 * arcs.len());
        for (k, (a, g)) in arcs.iter().zip(geoms).enumerate() {
            if a.is_geodesic() {
                out.push(ArcGeom::point(-a.center));
            } else {
                let c = a.center.vector();
                let y_end = g.end();
                let u_end = (y_end.vector() - c * c.dot(y_end.vector())).normalize();
                let circle = Circle::with_frame(-a.center, FRAC_PI_2 - a.radius, u_end);
                out.push(ArcGeom {
                    circle,
                    phi0: 0.0,
                    span: g.span,
                });
            }
            let tau = self.turning_angles()[k];
            if tau > 0.0 {
                let y = a.end;
                let n_in = a.outward_normal(&y);
                let circle = Circle::with_frame(y, FRAC_PI_2, *n_in.vector());
                out.push(ArcGeom {
                    circle,
                    phi0: 0.0,
                    span: tau,
                });
            }
        }
        out
    }

    /// `π −` the largest distance from `u` to an outward normal: the breadth
    /// of the thinnest lune containing the body with `u` as one of its poles.
    pub fn breadth(&self, u: &SpherePoint) -> f64 {
        breadth_with(&self.normal_pieces(), u).0
    }

    fn direction_samples(&self, pieces: &[ArcGeom], n: usize) -> Vec<(usize, f64)> {
        let lens: Vec<f64> = pieces
            .iter()
            .map(|p| p.span * p.circle.radius.sin())
            .collect();
        let total: f64 = lens.iter().sum();
        let mut out = Vec::new();
        for (i, p) in pieces.iter().enumerate() {
            let m = if total > 0.0 {
                (n as f64 * lens[i] / total).ceil() as usize
            } else {
                0
            };
            let m = m.max(1);
            for j in 0..=m {
                out.push((i, p.span * j as f64 / m as f64));
            }
        }
        out
    }

    /// Breadths over the supporting directions sampled along the normal set.
    pub fn breadth_profile(&self, n: usize) -> BreadthProfile {
        let pieces = self.normal_pieces();
        let samples = self.direction_samples(&pieces, n);
        let directions: Vec<SpherePoint> = samples
            .iter()
            .map(|&(i, t)| pieces[i].point_at(t))
            .collect();
        let breadths = directions
            .iter()
            .map(|u| breadth_with(&pieces, u).0)
            .collect();
        BreadthProfile {
            directions,
            breadths,
        }
    }

    /// Width (minimal breadth of a supporting lune) with a witness lune.
    pub fn width_direct(&self) -> Result<(f64, Lune)> {
        let pieces = self.normal_pieces();
        let samples = self.direction_samples(&pieces, DEFAULT_WIDTH_DIRECTIONS);
        let vals: Vec<f64> = samples
            .iter()
            .map(|&(i, t)| breadth_with(&pieces, &pieces[i].point_at(t)).0)
            .collect();
        let mut order: Vec<usize> = (0..samples.len()).collect();
        order.sort_by(|&a, &b| vals[a].total_cmp(&vals[b]));
        let mut best = (vals[order[0]], samples[order[0]]);
        let mut per_piece = vec![0usize; pieces.len()];
        for s in &samples {
            per_piece[s.0] += 1;
        }
        for &k in order.iter().take(12) {
            let (i, t) = samples[k];
            let p = &pieces[i];
            if p.span == 0.0 {
                continue;
            }
            let step = p.span / (per_piece[i] - 1).max(1) as f64;
            let (lo, hi) = ((t - 1.5 * step).max(0.0), (t + 1.5 * step).min(p.span));
            let (tt, v) = golden_min(|s| breadth_with(&pieces, &p.point_at(s)).0, lo, hi, 1e-13);
            if v < best.0 {
                best = (v, (i, tt));
            }
        }
        let u = pieces[best.1 .0].point_at(best.1 .1);
        let (w, v) = breadth_with(&pieces, &u);
        Ok((
            w,
            Lune {
                pole_u: u,
                pole_v: v,
            },
        ))
    }

    /// Diameter with a pair of boundary points realizing it.
    pub fn diameter(&self) -> Result<(f64, (SpherePoint, SpherePoint))> {
        let samples = self.boundary_samples(DEFAULT_BOUNDARY_SAMPLES);
        let geoms = self.geoms();
        let far = |x: &SpherePoint| -> (f64, SpherePoint) {
            let mut best = (-1.0, *x);
            for g in geoms {
                let (d, t) = g.farthest(x);
                if d > best.0 {
                    best = (d, g.point_at(t));
                }
            }
            best
        };
        let vals: Vec<f64> = samples.iter().map(|s| far(&s.point).0).collect();
        let mut order: Vec<usize> = (0..samples.len()).collect();
        order.sort_by(|&a, &b| vals[b].total_cmp(&vals[a]));
        let mut per_arc = vec![0usize; self.arcs().len()];
        for s in &samples {
            per_arc[s.arc] += 1;
        }
        let s0 = samples[order[0]];
        let mut best = (vals[order[0]], s0.arc, s0.t);
        for &k in order.iter().take(12) {
            let s = samples[k];
            let span = geoms[s.arc].span;
            let step = span / per_arc[s.arc] as f64;
            let (lo, hi) = ((s.t - 1.5 * step).max(0.0), (s.t + 1.5 * step).min(span));
            let (t, v) = golden_max(|t| far(&self.point_on(s.arc, t)).0, lo, hi, 1e-13);
            if v > best.0 {
                best = (v, s.arc, t);
            }
        }
        let x = self.point_on(best.1, best.2);
        let (d, y) = far(&x);
        Ok((d, (x, y)))
    }

    /// Spread `max − min` of the breadth over the sampled supporting
    /// directions used by [`width_direct`](Self::width_direct).
    pub fn constant_width_spread(&self) -> f64 {
        self.breadth_profile(DEFAULT_WIDTH_DIRECTIONS).spread()
    }
}

/// Breadth for direction `u` given the normal pieces, with the opposite pole.
pub(crate) fn breadth_with(pieces: &[ArcGeom], u: &SpherePoint) -> (f64, SpherePoint) {
    let mut best = (-1.0, *u);
    for p in pieces {
        let (d, t) = p.farthest(u);
        if d > best.0 {
            best = (d, p.point_at(t));
        }
    }
    (PI - best.0, best.1)
}
