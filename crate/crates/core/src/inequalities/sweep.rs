use std::f64::consts::{FRAC_PI_2, PI};
use std::fmt::Write as _;
use std::str::FromStr;

use nalgebra::Rotation3;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::checks::{
    best_posed_polar_reuleaux, check_area_perimeter_polarity, check_barbier,
    check_blaschke_lebesgue, check_isominwidth, check_polar_hausdorff,
};
use super::fit::{fit_power_law, PowerFit};
use crate::body::ConvexBody;
use crate::consts::TOL_OPT;
use crate::error::{GeometryError, Result};
use crate::shapes::{
    candidate_regular_triangle, perturbed_polar_reuleaux, perturbed_triangle, polar_reuleaux,
    random_body, random_constant_width, regular_triangle, Pose,
};
use crate::sphere::SpherePoint;

/// Residual tolerance of the identity suites (Barbier, polarity).
pub const IDENTITY_TOL: f64 = 1e-7;
/// Tolerance of `|δ(K, L) − δ(K°, L°)|`.
pub const POLAR_HAUSDORFF_TOL: f64 = 1e-6;

/// The two perturbation families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    /// `[v1, v2, v3^ε]` around `T_w`, `w ≤ π/2`.
    SmallWidth,
    /// `conv(U°_{π−w} ∪ {y})`, `w ∈ (π/2, π)`.
    LargeWidth,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::SmallWidth => "small_width",
            Family::LargeWidth => "large_width",
        }
    }

    /// Accepted range of the fitted exponent of the area gap against `ε`.
    pub fn gap_band(self) -> (f64, f64) {
        match self {
            Family::SmallWidth => (0.95, 1.05),
            Family::LargeWidth => (1.45, 1.55),
        }
    }

    /// Accepted range of the fitted exponent of the distance against the gap.
    pub fn distance_band(self) -> (f64, f64) {
        match self {
            Family::SmallWidth => (0.95, 1.05),
            Family::LargeWidth => (0.62, 0.72),
        }
    }

    pub fn admits(self, w: f64) -> bool {
        match self {
            Family::SmallWidth => w > 0.0 && w <= FRAC_PI_2,
            Family::LargeWidth => w > FRAC_PI_2 && w < PI,
        }
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "small" | "small_width" | "small-width" => Ok(Family::SmallWidth),
            "large" | "large_width" | "large-width" => Ok(Family::LargeWidth),
            _ => Err(format!("unknown family `{s}` (expected small or large)")),
        }
    }
}

/// Pose used for both perturbation families.
pub fn sweep_pose() -> Pose {
    Pose::new(SpherePoint::new(0.2, -0.1, 0.95).expect("nonzero"), 0.4)
}

/// The perturbed body `K_ε` of a family at [`sweep_pose`].
pub fn family_body(family: Family, w: f64, eps: f64) -> Result<ConvexBody> {
    match family {
        Family::SmallWidth => perturbed_triangle(w, eps, sweep_pose()),
        Family::LargeWidth => perturbed_polar_reuleaux(w, eps, sweep_pose()),
    }
}

/// Exponent fits of the area gap against `ε` and of the distance to the
/// extremizer against the gap.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StabilityFitReport {
    pub family: String,
    pub w: f64,
    pub eps_grid: Vec<f64>,
    pub gap_values: Vec<f64>,
    pub distance_values: Vec<f64>,
    pub fitted_exponent: f64,
    pub fitted_constant: f64,
    pub residual: f64,
    pub distance_fit: PowerFit,
    pub gap_band: (f64, f64),
    pub distance_band: (f64, f64),
    pub in_band: bool,
}

impl StabilityFitReport {
    pub fn gap_fit(&self) -> PowerFit {
        PowerFit {
            exponent: self.fitted_exponent,
            constant: self.fitted_constant,
            residual: self.residual,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable report")
    }

    /// One row per `ε`; `slack` is `δ − ε/2` for the small family (the lower
    /// bound on the distance to any regular triangle) and the area gap for the
    /// large family.
    pub fn rows(&self) -> Vec<SweepRow> {
        let fam = self.family.parse::<Family>().ok();
        self.eps_grid
            .iter()
            .zip(&self.gap_values)
            .zip(&self.distance_values)
            .map(|((&eps, &gap), &d)| {
                let slack = match fam {
                    Some(Family::SmallWidth) => d - 0.5 * eps,
                    _ => gap,
                };
                SweepRow {
                    family: self.family.clone(),
                    w: self.w,
                    eps: Some(eps),
                    area_gap: Some(gap),
                    hausdorff: Some(d),
                    slack,
                    passed: slack >= -TOL_OPT,
                }
            })
            .collect()
    }
}

/// Builds `K_ε` over the grid, measures the area gap to the extremizer and the
/// Hausdorff distance to the constructive extremizer (the cap-domain regular
/// triangle for the small family, the incenter-aligned best-rotated `U°_{π−w}`
/// for the large one), and fits both rates.
pub fn stability_sweep(family: Family, w: f64, eps_grid: &[f64]) -> Result<StabilityFitReport> {
    if !family.admits(w) {
        let range = match family {
            Family::SmallWidth => "(0, π/2]",
            Family::LargeWidth => "(π/2, π)",
        };
        return Err(GeometryError::WidthOutOfRange { w, range });
    }
    if eps_grid.len() < 2 || eps_grid.windows(2).any(|p| p[1] <= p[0]) || eps_grid[0] <= 0.0 {
        return Err(GeometryError::OutOfRange {
            value: eps_grid.first().copied().unwrap_or(0.0),
            range: "strictly increasing positive ε grid",
        });
    }
    let base = match family {
        Family::SmallWidth => regular_triangle(w, sweep_pose())?,
        Family::LargeWidth => polar_reuleaux(w, sweep_pose())?,
    };
    let base_area = base.area();
    let measured: Vec<Result<(f64, f64)>> = eps_grid
        .par_iter()
        .map(|&eps| {
            let k = family_body(family, w, eps)?;
            let gap = k.area() - base_area;
            let d = match family {
                Family::SmallWidth => k.hausdorff(&candidate_regular_triangle(&k)?),
                Family::LargeWidth => best_posed_polar_reuleaux(&k, w)?.1,
            };
            Ok((gap, d))
        })
        .collect();
    let measured: Vec<(f64, f64)> = measured.into_iter().collect::<Result<_>>()?;
    let gap_values: Vec<f64> = measured.iter().map(|m| m.0).collect();
    let distance_values: Vec<f64> = measured.iter().map(|m| m.1).collect();
    let g = fit_power_law(eps_grid, &gap_values)?;
    let d = fit_power_law(&gap_values, &distance_values)?;
    let (gb, db) = (family.gap_band(), family.distance_band());
    let in_band =
        g.exponent >= gb.0 && g.exponent <= gb.1 && d.exponent >= db.0 && d.exponent <= db.1;
    Ok(StabilityFitReport {
        family: family.name().to_string(),
        w,
        eps_grid: eps_grid.to_vec(),
        gap_values,
        distance_values,
        fitted_exponent: g.exponent,
        fitted_constant: g.constant,
        residual: g.residual,
        distance_fit: d,
        gap_band: gb,
        distance_band: db,
        in_band,
    })
}

/// One CSV row; empty optional fields are not applicable to the suite.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub family: String,
    pub w: f64,
    pub eps: Option<f64>,
    pub area_gap: Option<f64>,
    pub hausdorff: Option<f64>,
    pub slack: f64,
    pub passed: bool,
}

pub const CSV_HEADER: &str = "family,w,eps,area_gap,hausdorff,slack,passed";

fn fmt_opt(v: Option<f64>) -> String {
    v.map(|x| format!("{x:.16e}")).unwrap_or_default()
}

/// CSV with [`CSV_HEADER`]; floats in scientific notation with 17
/// significant digits.
pub fn rows_to_csv(rows: &[SweepRow]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in rows {
        let _ = writeln!(
            out,
            "{},{:.16e},{},{},{},{:.16e},{}",
            r.family,
            r.w,
            fmt_opt(r.eps),
            fmt_opt(r.area_gap),
            fmt_opt(r.hausdorff),
            r.slack,
            r.passed
        );
    }
    out
}

/// The verification suites run over seeded random corpora.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    IsominwidthSmall,
    IsominwidthLarge,
    Barbier,
    BlaschkeLebesgue,
    Polarity,
    Glasauer,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::IsominwidthSmall,
        Suite::IsominwidthLarge,
        Suite::Barbier,
        Suite::BlaschkeLebesgue,
        Suite::Polarity,
        Suite::Glasauer,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::IsominwidthSmall => "isominwidth-small",
            Suite::IsominwidthLarge => "isominwidth-large",
            Suite::Barbier => "barbier",
            Suite::BlaschkeLebesgue => "blaschke-lebesgue",
            Suite::Polarity => "polarity",
            Suite::Glasauer => "glasauer",
        }
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown suite `{s}`"))
    }
}

/// Which random bodies a corpus draws.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Corpus {
    /// Hulls of points and small caps, width at most π/2.
    SmallWidth,
    /// Constant width above π/2 (polars of Reuleaux polygons).
    LargeConstantWidth,
    /// Constant width below π/2 (Reuleaux polygons).
    SmallConstantWidth,
    /// Alternating small-width and large constant-width bodies.
    Mixed,
    /// Alternating small and large constant-width bodies.
    ConstantWidth,
}

/// Per-body seeds and target widths drawn from `seed`.
fn corpus_plan(corpus: Corpus, seed: u64, n: usize) -> Vec<(u64, f64, Corpus)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|i| {
            let kind = match corpus {
                Corpus::Mixed if i % 2 == 0 => Corpus::SmallWidth,
                Corpus::Mixed => Corpus::LargeConstantWidth,
                Corpus::ConstantWidth if i % 2 == 0 => Corpus::SmallConstantWidth,
                Corpus::ConstantWidth => Corpus::LargeConstantWidth,
                c => c,
            };
            let w = match kind {
                Corpus::SmallWidth => rng.gen_range(0.1..FRAC_PI_2),
                Corpus::SmallConstantWidth => rng.gen_range(0.1..FRAC_PI_2 - 0.02),
                _ => rng.gen_range(FRAC_PI_2 + 0.02..PI - 0.05),
            };
            (rng.gen(), w, kind)
        })
        .collect()
}

fn build(kind: Corpus, w: f64, seed: u64) -> Result<ConvexBody> {
    match kind {
        Corpus::SmallWidth => random_body(w, seed),
        _ => random_constant_width(w, seed),
    }
}

/// `n` seeded random bodies, built in parallel, in seed order.
pub fn random_corpus(corpus: Corpus, seed: u64, n: usize) -> Result<Vec<ConvexBody>> {
    corpus_plan(corpus, seed, n)
        .into_par_iter()
        .map(|(s, w, kind)| build(kind, w, s))
        .collect()
}

/// A pair `(K, L)` of small-width random bodies sharing a reference point,
/// redrawn until `δ(K, L) < π/2`.
pub fn random_close_pair(seed: u64) -> Result<(ConvexBody, ConvexBody)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..50 {
        let k = random_body(rng.gen_range(0.1..FRAC_PI_2), rng.gen())?;
        let l = random_body(rng.gen_range(0.1..FRAC_PI_2), rng.gen())?;
        let (a, b) = (k.reference_point(), l.reference_point());
        let rot =
            Rotation3::rotation_between(b.vector(), a.vector()).unwrap_or_else(Rotation3::identity);
        let l = l.rotate(&rot).canonicalize();
        if k.hausdorff(&l) < FRAC_PI_2 - 1e-3 {
            return Ok((k, l));
        }
    }
    Err(GeometryError::GenerationFailure { attempts: 50 })
}

fn identity_row(suite: Suite, w: f64, residual: f64, tol: f64) -> SweepRow {
    SweepRow {
        family: suite.name().into(),
        w,
        eps: None,
        area_gap: None,
        hausdorff: None,
        slack: -residual,
        passed: residual < tol,
    }
}

/// Runs `suite` over `n` seeded bodies (pairs for Glasauer), one row per body
/// in seed order. For the inequality suites `slack` is `area − bound`; for the
/// identity suites it is the negated residual.
pub fn verify_suite(suite: Suite, seed: u64, n: usize) -> Result<Vec<SweepRow>> {
    let plan_kind = match suite {
        Suite::IsominwidthSmall => Corpus::SmallWidth,
        Suite::IsominwidthLarge => Corpus::LargeConstantWidth,
        Suite::Barbier => Corpus::ConstantWidth,
        Suite::BlaschkeLebesgue => Corpus::SmallConstantWidth,
        Suite::Polarity => Corpus::Mixed,
        Suite::Glasauer => Corpus::SmallWidth,
    };
    let plan = corpus_plan(plan_kind, seed, n);
    plan.into_par_iter()
        .map(|(s, w, kind)| -> Result<SweepRow> {
            if suite == Suite::Glasauer {
                let (k, l) = random_close_pair(s)?;
                let (d, dp) = check_polar_hausdorff(&k, &l)?;
                let mut row = identity_row(
                    suite,
                    k.width_direct()?.0,
                    (d - dp).abs(),
                    POLAR_HAUSDORFF_TOL,
                );
                row.hausdorff = Some(d);
                return Ok(row);
            }
            let k = build(kind, w, s)?;
            match suite {
                Suite::IsominwidthSmall | Suite::IsominwidthLarge | Suite::BlaschkeLebesgue => {
                    let r = if suite == Suite::BlaschkeLebesgue {
                        check_blaschke_lebesgue(&k)?
                    } else {
                        check_isominwidth(&k)?
                    };
                    Ok(SweepRow {
                        family: suite.name().into(),
                        w: r.w,
                        eps: None,
                        area_gap: Some(r.slack),
                        hausdorff: None,
                        slack: r.slack,
                        passed: r.passed,
                    })
                }
                Suite::Barbier => Ok(identity_row(
                    suite,
                    k.width_direct()?.0,
                    check_barbier(&k)?,
                    IDENTITY_TOL,
                )),
                Suite::Polarity => Ok(identity_row(
                    suite,
                    k.width_direct()?.0,
                    check_area_perimeter_polarity(&k)?,
                    IDENTITY_TOL,
                )),
                Suite::Glasauer => unreachable!(),
            }
        })
        .collect()
}
