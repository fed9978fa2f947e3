use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, PI};

use serde::Serialize;

use crate::error::{GeometryError, Result};
use crate::shapes::solve_regular_triangle_params;
use crate::sphere::triangle_area_cot;

fn eta_range(eta: f64, w: f64) -> Result<(f64, f64)> {
    let s = solve_regular_triangle_params(w)?;
    let max = 0.5 * w - s.r;
    if !(eta >= 0.0 && eta <= max + 1e-15) {
        return Err(GeometryError::OutOfRange {
            value: eta,
            range: "[0, w/2 − r(T_w)]",
        });
    }
    Ok((s.r, max))
}

/// `F(η)`: area of the hexagon `Q(η)`, six triangles with sides `r + η`,
/// `w − r − η` enclosing π/3, where `r = r(T_w)`. `F(0) = area(T_w)`.
pub fn f_eval(eta: f64, w: f64) -> Result<f64> {
    let (r, _) = eta_range(eta, w)?;
    Ok(6.0 * triangle_area_cot(r + eta, w - r - eta, FRAC_PI_3))
}

/// `f'(η)` for `f(η) = cot((w − r − η)/2)·cot((r + η)/2)`:
/// `(sin(r+η) − sin(w−r−η)) / (4 sin²((r+η)/2) sin²((w−r−η)/2))`.
/// Negative on the domain, so `F = 12 arccot((f + 1/2)/(√3/2))` increases.
pub fn f_derivative(eta: f64, w: f64) -> Result<f64> {
    let (r, _) = eta_range(eta, w)?;
    let (a, b) = (r + eta, w - r - eta);
    let sa = (0.5 * a).sin();
    let sb = (0.5 * b).sin();
    Ok((a.sin() - b.sin()) / (4.0 * sa * sa * sb * sb))
}

/// `f_w(ε)`: the area of the sliver `[v1, v3, v3^ε]` added to `T_w` when the
/// third vertex is pushed a distance `ε` along the extended edge. The sliver has
/// sides `a_w` and `ε` enclosing `π − α_w`.
pub fn f_w_eval(eps: f64, w: f64) -> Result<f64> {
    let s = solve_regular_triangle_params(w)?;
    if !(eps >= 0.0) {
        return Err(GeometryError::OutOfRange {
            value: eps,
            range: "[0, ∞)",
        });
    }
    if eps == 0.0 {
        return Ok(0.0);
    }
    Ok(triangle_area_cot(s.a, eps, PI - s.alpha))
}

/// `f_w'(0) = sin(α_w)·tan(a_w/2)`.
pub fn f_w_slope_at_zero(w: f64) -> Result<f64> {
    let s = solve_regular_triangle_params(w)?;
    Ok(s.alpha.sin() * (0.5 * s.a).tan())
}

/// Quantities of the two slivers added to `U°_{π−w}` by a point `y` at
/// distance `ε` beyond the midpoint of one of its circular arcs.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct TipProfile {
    /// Length of the tangent segment from `y` to the cap.
    pub s: f64,
    /// Angle at the cap center between `y` and a tangency point.
    pub alpha: f64,
    /// Angle at `y` between the cap center and a tangency point.
    pub beta: f64,
    /// `2(cos ρ·α + β − π/2)`, the total added area.
    pub gap: f64,
}

/// The tip profile for `w ∈ (π/2, π)`, with cap radius `ρ = w − π/2`:
/// `cos s = cos(ρ+ε)/cos ρ`, `sin α = sin s / sin(ρ+ε)`,
/// `sin β = sin ρ / sin(ρ+ε)`, `gap = 2(cos ρ·α + β − π/2)`.
pub fn tip_profile(eps: f64, w: f64) -> Result<TipProfile> {
    if !(w > FRAC_PI_2 && w < PI) {
        return Err(GeometryError::WidthOutOfRange {
            w,
            range: "(π/2, π)",
        });
    }
    let rho = w - FRAC_PI_2;
    if !(eps >= 0.0 && rho + eps < FRAC_PI_2) {
        return Err(GeometryError::OutOfRange {
            value: eps,
            range: "[0, π − w)",
        });
    }
    // sin²(ρ+ε) − sin²ρ = cos²ρ − cos²(ρ+ε) = sin ε·sin(2ρ+ε)
    let q = (eps.sin() * (2.0 * rho + eps).sin()).sqrt();
    let s = q.atan2((rho + eps).cos());
    let alpha = q.atan2(rho.sin() * (rho + eps).cos());
    let beta = rho.sin().atan2(q);
    let gap = 2.0 * (rho.cos() * alpha - (q / rho.sin()).atan());
    Ok(TipProfile {
        s,
        alpha,
        beta,
        gap,
    })
}

/// Leading coefficient `c` of `gap(ε) = c·ε^{3/2} + O(ε^{5/2})`:
/// `c = (2√2/3)·√tan(w − π/2)`.
pub fn tip_gap_coefficient(w: f64) -> Result<f64> {
    if !(w > FRAC_PI_2 && w < PI) {
        return Err(GeometryError::WidthOutOfRange {
            w,
            range: "(π/2, π)",
        });
    }
    Ok(2.0 * 2f64.sqrt() / 3.0 * (w - FRAC_PI_2).tan().sqrt())
}

/// The alternative closed form `(1/(3√2))·√tan(π − w)` for the same
/// coefficient, kept for comparison with [`tip_gap_coefficient`].
pub fn tip_gap_coefficient_alt(w: f64) -> Result<f64> {
    if !(w > FRAC_PI_2 && w < PI) {
        return Err(GeometryError::WidthOutOfRange {
            w,
            range: "(π/2, π)",
        });
    }
    Ok((PI - w).tan().sqrt() / (3.0 * 2f64.sqrt()))
}

/// Area of the polar Reuleaux triangle from that of the Reuleaux triangle of
/// width `π − w`: `2π − (2π − area(U_{π−w}))·tan((π−w)/2)`.
pub fn polar_area_from_dual(area_dual: f64, w: f64) -> f64 {
    2.0 * PI - (2.0 * PI - area_dual) * (0.5 * (PI - w)).tan()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::{hexagon_q, regular_triangle, Pose};

    #[test]
    fn f_at_zero_is_triangle_area() {
        for w in [0.5, 1.0, FRAC_PI_2] {
            let t = regular_triangle(w, Pose::default()).unwrap();
            assert!((f_eval(0.0, w).unwrap() - t.area()).abs() < 1e-12);
        }
    }

    #[test]
    fn f_matches_hexagon_area() {
        let w = 1.2;
        let max = 0.5 * w - solve_regular_triangle_params(w).unwrap().r;
        for k in 0..=10 {
            let eta = max * k as f64 / 10.0;
            let q = hexagon_q(eta, w, Pose::default()).unwrap();
            assert!((q.area() - f_eval(eta, w).unwrap()).abs() < 1e-9);
        }
        assert!(f_eval(max + 1e-6, w).is_err());
    }

    #[test]
    fn derivative_matches_finite_differences() {
        let w = 1.0;
        let r = solve_regular_triangle_params(w).unwrap().r;
        let f = |e: f64| (0.5 * (w - r - e)).tan().recip() * (0.5 * (r + e)).tan().recip();
        for eta in [0.01, 0.05, 0.1] {
            let h = 1e-6;
            let fd = (f(eta + h) - f(eta - h)) / (2.0 * h);
            let d = f_derivative(eta, w).unwrap();
            assert!(d < 0.0);
            assert!((fd - d).abs() < 1e-6, "{fd} {d}");
        }
    }

    #[test]
    fn sliver_slope() {
        let w = 1.2;
        let h = 1e-7;
        let fd = f_w_eval(h, w).unwrap() / h;
        let slope = f_w_slope_at_zero(w).unwrap();
        assert!((fd / slope - 1.0).abs() < 1e-5);
    }

    #[test]
    fn tip_profile_zero_and_rate() {
        let p = tip_profile(0.0, 2.0).unwrap();
        assert_eq!((p.s, p.alpha, p.gap), (0.0, 0.0, 0.0));
        assert!((p.beta - FRAC_PI_2).abs() < 1e-15);
        for w in [1.8, 2.0, 2.5] {
            let eps = 1e-8;
            let c = tip_profile(eps, w).unwrap().gap / eps.powf(1.5);
            assert!((c / tip_gap_coefficient(w).unwrap() - 1.0).abs() < 1e-6);
        }
    }

    #[test]
    fn tip_profile_against_direct_trigonometry() {
        // oracle: the right triangle (cap center, tangency point, y) solved by
        // the plain inverse trigonometric formulas
        let (w, eps) = (2.2, 0.05);
        let rho = w - FRAC_PI_2;
        let s = ((rho + eps).cos() / rho.cos()).acos();
        let alpha = (s.sin() / (rho + eps).sin()).asin();
        let beta = (rho.sin() / (rho + eps).sin()).asin();
        let p = tip_profile(eps, w).unwrap();
        assert!((p.s - s).abs() < 1e-12);
        assert!((p.alpha - alpha).abs() < 1e-12);
        assert!((p.beta - beta).abs() < 1e-12);
        assert!((p.gap - 2.0 * (rho.cos() * alpha + beta - FRAC_PI_2)).abs() < 1e-12);
    }
}
