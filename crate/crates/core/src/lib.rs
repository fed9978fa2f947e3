//! Convex bodies on the unit 2-sphere.
//!
//! Bodies are represented by their boundary, a closed cycle of circular arcs
//! of spherical radius at most π/2 (geodesic edges are the radius π/2 case)
//! traversed counterclockwise with the body on the side of each arc's center.
//! The representation is closed under convex hulls of caps, intersections of
//! caps and polarity, which covers regular triangles, Reuleaux triangles and
//! their polars, cap domains and perturbation families.
//!
//! Module map:
//! - [`sphere`]: points, spherical trigonometry, circle parametrisations;
//! - [`body`]: the arc-boundary body and its functionals (area, perimeter,
//!   width, diameter, incircle, Hausdorff distance, hulls);
//! - [`polar`]: polar bodies, lune/segment duality, constant width;
//! - [`shapes`]: constructors for the named bodies and random corpora;
//! - [`inequalities`]: closed-form evaluators, inequality checks, stability
//!   fits and the sweep harness;
//! - [`cli`]: the command-line front end used by the `spherical-bodies` binary.

pub mod body;
pub mod cli;
pub mod consts;
pub mod error;
pub mod inequalities;
mod numeric;
pub mod polar;
pub mod shapes;
pub mod sphere;

pub use body::{CircularArc, ConvexBody, IncircleCertificate, Lune};
pub use error::{GeometryError, Result};
pub use sphere::SpherePoint;
