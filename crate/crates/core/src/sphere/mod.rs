//! Points, circles and closed-form trigonometry on the unit sphere.

mod circle;
mod point;
mod trig;

pub use circle::{wrap_angle, ArcGeom, Circle};
pub use point::{angle_at, geodesic_distance, reference_tangent, signed_angle_at, SpherePoint};
pub use trig::{cap_area, solve_right_triangle, triangle_area_cot, TriangleData};
