//! Shared numerical tolerances.
//!
//! Geometric comparisons (closure of boundaries, point-on-circle checks,
//! containment) use [`TOL_GEOM`]. Quantities produced by an iterative search
//! (width, diameter, incircle, Hausdorff distance) are compared with
//! [`TOL_OPT`].

/// Tolerance for exact geometric identities.
pub const TOL_GEOM: f64 = 1e-9;

/// Tolerance for quantities obtained by numerical optimization.
pub const TOL_OPT: f64 = 1e-7;

/// Default number of boundary samples used by the sampling-based functionals.
pub const DEFAULT_BOUNDARY_SAMPLES: usize = 4096;

/// Default number of supporting directions swept by the width computation.
pub const DEFAULT_WIDTH_DIRECTIONS: usize = 720;
