//! Constructors for the named bodies: regular triangles, Reuleaux triangles
//! and their polars, cap domains, the hexagons `Q(η)`, the two perturbation
//! families and a seeded random corpus.

mod cap_domain;
mod perturb;
mod pose;
mod random;
mod regular;
mod reuleaux;

pub(crate) use cap_domain::candidate_from_spec;
pub use cap_domain::{
    candidate_regular_triangle, cap_domain, hexagon_q, regularized_cap_domain, regularized_peaks,
    CapDomainSpec,
};
pub use perturb::{
    perturbed_polar_reuleaux, perturbed_polar_reuleaux_tip, perturbed_triangle,
    perturbed_triangle_vertices,
};
pub use pose::Pose;
pub use random::{random_body, random_constant_width, random_reuleaux_polygon};
pub use regular::{
    regular_triangle, regular_triangle_inradius, regular_triangle_of_width,
    solve_regular_triangle_params, RegularTriangleSpec,
};
pub use reuleaux::{
    polar_reuleaux, polar_reuleaux_caps, regular_triangle_vertices, reuleaux_triangle,
};
