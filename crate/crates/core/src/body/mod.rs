//! The arc-boundary body representation and its measurements.

mod arc;
mod convex;
mod distance;
mod hull;
mod incircle;
mod lune;
mod measure;

pub use arc::CircularArc;
pub use convex::{BoundarySample, ConvexBody, ValidationReport, Violation};
pub use hull::{hull_of_caps, intersection_of_caps, Cap};
pub use incircle::IncircleCertificate;
pub use lune::{lune_breadth, Lune};
pub use measure::BreadthProfile;
