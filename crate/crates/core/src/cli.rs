//! Command-line front end. Exit codes: 0 pass, 1 verification failure,
//! 2 usage error, 3 invalid body.

use std::f64::consts::{FRAC_PI_2, PI};
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::body::{CircularArc, ConvexBody};
use crate::error::GeometryError;
use crate::inequalities::{
    geometric_grid, rows_to_csv, stability_sweep, verify_suite, Family, Suite,
};
use crate::shapes::{
    perturbed_polar_reuleaux, perturbed_triangle, polar_reuleaux, random_body, regular_triangle,
    reuleaux_triangle, Pose,
};
use crate::sphere::SpherePoint;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INVALID_BODY: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "spherical-bodies",
    version,
    about = "Convex bodies on the unit sphere. All angles are in radians."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Shape {
    RegularTriangle,
    Reuleaux,
    PolarReuleaux,
    Disk,
    PerturbedTriangle,
    PerturbedPolarReuleaux,
    Random,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build a named body and write it in the JSON body schema.
    Construct {
        #[arg(value_enum)]
        shape: Shape,
        /// Width (regular-triangle, polar-reuleaux, perturbed-*, random).
        #[arg(long)]
        w: Option<f64>,
        /// Radius (reuleaux, disk).
        #[arg(long)]
        r: Option<f64>,
        /// Perturbation size (perturbed-*).
        #[arg(long)]
        eps: Option<f64>,
        /// Seed (random).
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Center as `x,y,z`; normalized onto the sphere.
        #[arg(long, value_parser = parse_point, default_value = "0,0,1")]
        center: SpherePoint,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        azimuth: f64,
        /// Output file; the body goes to standard output if omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print width, diameter, area, perimeter, inradius, incenter and
    /// constant-width spread of a body file as JSON.
    Measure { body: PathBuf },
    /// Run a verification suite over seeded random bodies and write a CSV.
    ///
    /// Columns: family,w,eps,area_gap,hausdorff,slack,passed. Empty fields do
    /// not apply to the suite. For isominwidth-* and blaschke-lebesgue, slack
    /// is area minus the bound; for barbier, polarity and glasauer it is the
    /// negated residual. Exit 0 iff every row passes.
    Verify {
        /// One of isominwidth-small, isominwidth-large, barbier,
        /// blaschke-lebesgue, polarity, glasauer.
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Fit the stability rates of a perturbation family and print the report
    /// as JSON. Exit 0 iff both exponents lie in the family's band.
    Stability {
        /// small or large.
        #[arg(long)]
        family: String,
        #[arg(long)]
        w: f64,
        #[arg(long, default_value_t = 1e-4)]
        eps_min: f64,
        #[arg(long, default_value_t = 1e-2)]
        eps_max: f64,
        #[arg(long, default_value_t = 12)]
        points: usize,
        /// Also write the per-ε rows as CSV.
        #[arg(long)]
        csv: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn parse_point(s: &str) -> Result<SpherePoint, String> {
    let v: Vec<f64> = s
        .split(',')
        .map(|t| t.trim().parse::<f64>().map_err(|e| format!("`{t}`: {e}")))
        .collect::<Result<_, _>>()?;
    if v.len() != 3 {
        return Err(format!("expected x,y,z, got {} values", v.len()));
    }
    SpherePoint::new(v[0], v[1], v[2]).map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct MeasureReport {
    width: f64,
    diameter: f64,
    area: f64,
    perimeter: f64,
    inradius: f64,
    incenter: [f64; 3],
    constant_width_spread: f64,
}

#[derive(Serialize)]
struct ConstructReport<'a> {
    shape: &'a str,
    arcs: usize,
    area: f64,
    width: f64,
}

struct Failure(i32, String);

impl From<GeometryError> for Failure {
    fn from(e: GeometryError) -> Self {
        Failure(EXIT_USAGE, e.to_string())
    }
}

fn need(v: Option<f64>, flag: &str, shape: Shape) -> Result<f64, Failure> {
    v.ok_or_else(|| Failure(EXIT_USAGE, format!("{shape:?} requires --{flag}")))
}

fn emit(out: &Option<PathBuf>, text: &str, stdout: &mut dyn Write) -> Result<(), Failure> {
    match out {
        Some(p) => std::fs::write(p, text)
            .map_err(|e| Failure(EXIT_USAGE, format!("{}: {e}", p.display()))),
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|e| Failure(EXIT_USAGE, e.to_string())),
    }
}

fn construct(
    shape: Shape,
    w: Option<f64>,
    r: Option<f64>,
    eps: Option<f64>,
    seed: u64,
    pose: Pose,
) -> Result<ConvexBody, Failure> {
    let body = match shape {
        Shape::RegularTriangle => regular_triangle(need(w, "w", shape)?, pose)?,
        Shape::Reuleaux => reuleaux_triangle(need(r, "r", shape)?, pose)?,
        Shape::PolarReuleaux => polar_reuleaux(need(w, "w", shape)?, pose)?,
        Shape::Disk => {
            let r = need(r, "r", shape)?;
            if !(r > 0.0 && r < FRAC_PI_2) {
                return Err(GeometryError::RadiusOutOfRange {
                    r,
                    range: "(0, π/2)",
                }
                .into());
            }
            ConvexBody::from_arcs(vec![CircularArc::full_circle(pose.center, r)])?
        }
        Shape::PerturbedTriangle => {
            perturbed_triangle(need(w, "w", shape)?, need(eps, "eps", shape)?, pose)?
        }
        Shape::PerturbedPolarReuleaux => {
            perturbed_polar_reuleaux(need(w, "w", shape)?, need(eps, "eps", shape)?, pose)?
        }
        Shape::Random => random_body(need(w, "w", shape)?, seed)?,
    };
    Ok(body.canonicalize())
}

fn measure(text: &str) -> Result<MeasureReport, Failure> {
    let body = ConvexBody::from_json_unchecked(text)
        .map_err(|e| Failure(EXIT_USAGE, format!("schema violation: {e}")))?;
    let report = body.validate();
    if !report.is_valid() {
        return Err(Failure(
            EXIT_INVALID_BODY,
            format!("invalid body: {report}"),
        ));
    }
    let invalid = |e: GeometryError| Failure(EXIT_INVALID_BODY, e.to_string());
    let (width, _) = body.width_direct().map_err(invalid)?;
    let (diameter, _) = body.diameter().map_err(invalid)?;
    let inc = body.incircle().map_err(invalid)?;
    Ok(MeasureReport {
        width,
        diameter,
        area: body.area(),
        perimeter: body.perimeter(),
        inradius: inc.radius,
        incenter: inc.center.coords(),
        constant_width_spread: body.constant_width_spread(),
    })
}

fn execute(cli: Cli, stdout: &mut dyn Write) -> Result<i32, Failure> {
    match cli.command {
        Command::Construct {
            shape,
            w,
            r,
            eps,
            seed,
            center,
            azimuth,
            out,
        } => {
            let body = construct(shape, w, r, eps, seed, Pose::new(center, azimuth))?;
            let json = body.to_json();
            emit(&out, &json, stdout)?;
            if out.is_some() {
                let name = shape
                    .to_possible_value()
                    .expect("named")
                    .get_name()
                    .to_string();
                let rep = ConstructReport {
                    shape: &name,
                    arcs: body.arcs().len(),
                    area: body.area(),
                    width: body.width_direct()?.0,
                };
                writeln!(
                    stdout,
                    "{}",
                    serde_json::to_string(&rep).expect("serializable")
                )
                .ok();
            }
            Ok(EXIT_OK)
        }
        Command::Measure { body } => {
            let text = std::fs::read_to_string(&body)
                .map_err(|e| Failure(EXIT_USAGE, format!("{}: {e}", body.display())))?;
            let rep = measure(&text)?;
            writeln!(
                stdout,
                "{}",
                serde_json::to_string_pretty(&rep).expect("serializable")
            )
            .ok();
            Ok(EXIT_OK)
        }
        Command::Verify {
            suite,
            seed,
            n,
            out,
        } => {
            let suite: Suite = suite.parse().map_err(|e| Failure(EXIT_USAGE, e))?;
            let rows =
                verify_suite(suite, seed, n).map_err(|e| Failure(EXIT_FAILED, e.to_string()))?;
            emit(&out, &rows_to_csv(&rows), stdout)?;
            Ok(if rows.iter().all(|r| r.passed) {
                EXIT_OK
            } else {
                EXIT_FAILED
            })
        }
        Command::Stability {
            family,
            w,
            eps_min,
            eps_max,
            points,
            csv,
            out,
        } => {
            let family: Family = family.parse().map_err(|e| Failure(EXIT_USAGE, e))?;
            if !(eps_min > 0.0 && eps_max > eps_min && points >= 2) {
                return Err(Failure(
                    EXIT_USAGE,
                    "need 0 < eps-min < eps-max and points ≥ 2".into(),
                ));
            }
            if family == Family::LargeWidth
                && w > FRAC_PI_2
                && w < PI
                && w - FRAC_PI_2 + eps_max >= FRAC_PI_2
            {
                return Err(Failure(
                    EXIT_USAGE,
                    format!("eps-max must stay below π − w = {}", PI - w),
                ));
            }
            let grid = geometric_grid(eps_min, eps_max, points);
            let report = stability_sweep(family, w, &grid)?;
            emit(&out, &(report.to_json() + "\n"), stdout)?;
            if let Some(p) = csv {
                emit(&Some(p), &rows_to_csv(&report.rows()), stdout)?;
            }
            Ok(if report.in_band { EXIT_OK } else { EXIT_FAILED })
        }
    }
}

/// Parses `args` (including the program name) and runs the command, writing
/// results to `stdout` and diagnostics to `stderr`; returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if code == EXIT_OK {
                stdout.write_all(text.as_bytes()).ok();
            } else {
                stderr.write_all(text.as_bytes()).ok();
            }
            return code;
        }
    };
    match execute(cli, stdout) {
        Ok(code) => code,
        Err(Failure(code, msg)) => {
            writeln!(stderr, "error: {msg}").ok();
            code
        }
    }
}
