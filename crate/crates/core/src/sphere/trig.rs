//! Closed-form spherical trigonometry.

use std::f64::consts::PI;

use crate::error::{GeometryError, Result};

/// Side lengths and opposite angles of a spherical triangle.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TriangleData {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
}

impl TriangleData {
    /// Solves the angles from the three sides (law of cosines).
    pub fn from_sides(a: f64, b: f64, c: f64) -> Result<Self> {
        for s in [a, b, c] {
            if !(s > 0.0 && s < PI) {
                return Err(GeometryError::OutOfRange {
                    value: s,
                    range: "(0, π)",
                });
            }
        }
        let angle = |opp: f64, s1: f64, s2: f64| {
            ((opp.cos() - s1.cos() * s2.cos()) / (s1.sin() * s2.sin()))
                .clamp(-1.0, 1.0)
                .acos()
        };
        let t = Self {
            a,
            b,
            c,
            alpha: angle(a, b, c),
            beta: angle(b, a, c),
            gamma: angle(c, a, b),
        };
        if [t.alpha, t.beta, t.gamma]
            .iter()
            .any(|x| !(*x > 0.0 && *x < PI))
        {
            return Err(GeometryError::OutOfRange {
                value: a + b + c,
                range: "nondegenerate triangle",
            });
        }
        Ok(t)
    }

    /// Two sides and the angle they enclose.
    pub fn from_sas(a: f64, b: f64, gamma: f64) -> Result<Self> {
        let c = (a.cos() * b.cos() + a.sin() * b.sin() * gamma.cos())
            .clamp(-1.0, 1.0)
            .acos();
        Self::from_sides(a, b, c)
    }

    pub fn excess(&self) -> f64 {
        self.alpha + self.beta + self.gamma - PI
    }

    /// Largest deviation from the law of cosines over the three side/angle pairs.
    pub fn law_of_cosines_residual(&self) -> f64 {
        let r = |opp: f64, s1: f64, s2: f64, ang: f64| {
            (opp.cos() - (s1.cos() * s2.cos() + s1.sin() * s2.sin() * ang.cos())).abs()
        };
        r(self.a, self.b, self.c, self.alpha)
            .max(r(self.b, self.a, self.c, self.beta))
            .max(r(self.c, self.a, self.b, self.gamma))
    }
}

/// Area of the spherical triangle with sides `a`, `b` enclosing the angle `gamma`:
/// `2·arccot((cot(a/2)·cot(b/2) + cos γ) / sin γ)` with arccot valued in (0, π).
pub fn triangle_area_cot(a: f64, b: f64, gamma: f64) -> f64 {
    let num = gamma.sin();
    let den = (a / 2.0).tan().recip() * (b / 2.0).tan().recip() + gamma.cos();
    // atan2(sin γ, ·) is arccot(·/sin γ) on (0, π) since sin γ > 0
    2.0 * num.atan2(den)
}

/// Legs of the right spherical triangle with the given hypotenuse and the
/// angle between the hypotenuse and the adjacent leg (Napier's rules):
/// `tan(adjacent) = tan(hyp)·cos(angle)` and `sin(opposite) = sin(hyp)·sin(angle)`.
pub fn solve_right_triangle(hypotenuse: f64, angle: f64) -> (f64, f64) {
    let adjacent = (hypotenuse.tan() * angle.cos()).atan();
    let opposite = (hypotenuse.sin() * angle.sin()).clamp(-1.0, 1.0).asin();
    // cos(angle) rounds to ~6e-17 at π/2; snap so the right-angle case is exact
    let adjacent = if adjacent.abs() < 1e-15 {
        0.0
    } else {
        adjacent
    };
    (adjacent, opposite)
}

/// Area of the spherical cap of radius `r`.
pub fn cap_area(r: f64) -> f64 {
    2.0 * PI * (1.0 - r.cos())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_3};

    #[test]
    fn octant_area() {
        assert!((triangle_area_cot(FRAC_PI_2, FRAC_PI_2, FRAC_PI_2) - FRAC_PI_2).abs() < 1e-15);
    }

    #[test]
    fn small_triangle_matches_excess_oracle() {
        // oracle: excess from the three angles, law of cosines route
        let t = TriangleData::from_sas(0.01, 0.01, FRAC_PI_3).unwrap();
        let oracle = t.excess();
        let area = triangle_area_cot(0.01, 0.01, FRAC_PI_3);
        assert!((area - oracle).abs() < 1e-12, "{area} vs {oracle}");
        assert!((area - 4.330e-5).abs() < 1e-8);
    }

    #[test]
    fn degenerate_lune_limit() {
        assert!(triangle_area_cot(FRAC_PI_2, FRAC_PI_2, 1e-9) < 1e-8);
    }

    #[test]
    fn area_exceeding_pi_is_on_the_continuous_branch() {
        // sides close to π with a wide angle give areas above π
        let t = TriangleData::from_sas(2.5, 2.5, 2.8).unwrap();
        let a = triangle_area_cot(2.5, 2.5, 2.8);
        assert!(a > PI);
        assert!((a - t.excess()).abs() < 1e-10);
    }

    #[test]
    fn right_triangle_examples() {
        let (adj, _) = solve_right_triangle(2f64.sqrt().atan(), FRAC_PI_3);
        assert!((adj - (1.0 / 2f64.sqrt()).atan()).abs() < 1e-15);
        assert!((adj - 0.615480).abs() < 1e-6);
        let (adj, opp) = solve_right_triangle(0.7, 1e-12);
        assert!((adj - 0.7).abs() < 1e-12 && opp < 1e-11);
        let (adj, opp) = solve_right_triangle(0.3, FRAC_PI_2);
        assert_eq!(adj, 0.0);
        assert!((opp - 0.3).abs() < 1e-15);
    }

    #[test]
    fn triangle_data_validates() {
        assert!(TriangleData::from_sides(1.0, 1.0, 2.5).is_err());
        let t = TriangleData::from_sides(1.0, 1.2, 0.9).unwrap();
        assert!(t.law_of_cosines_residual() < 1e-12);
    }

    proptest::proptest! {
        #[test]
        fn sas_triangles_are_consistent(a in 0.01f64..3.0, b in 0.01f64..3.0, gamma in 0.01f64..3.1) {
            let t = TriangleData::from_sas(a, b, gamma).unwrap();
            proptest::prop_assert!(t.law_of_cosines_residual() < 1e-12);
            proptest::prop_assert!((t.gamma - gamma).abs() < 1e-6);
            // oracle: L'Huilier's theorem for the excess
            let s = 0.5 * (t.a + t.b + t.c);
            let q = (0.5 * s).tan() * (0.5 * (s - t.a)).tan() * (0.5 * (s - t.b)).tan() * (0.5 * (s - t.c)).tan();
            let excess = 4.0 * q.max(0.0).sqrt().atan();
            proptest::prop_assert!((triangle_area_cot(a, b, gamma) - excess).abs() < 1e-7);
        }
    }
}
