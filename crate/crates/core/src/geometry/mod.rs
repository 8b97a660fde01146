//! Exact rational 2D kernel: predicates, intersections, strict half-plane
//! feasibility, polygon kernels and external visibility.
//!
//! Every type here is an immutable value and every operation is pure; no
//! floating point appears on any correctness-bearing path. Floats are used
//! only to propose candidate points that are snapped to rationals and
//! re-verified exactly.

pub mod feasibility;
pub mod line;
pub mod point;
pub mod polygon;
pub mod predicates;
pub mod rat;
pub mod visibility;

pub use feasibility::{feasible_point, strict_halfplane_witness, Feasibility};
pub use line::{HalfPlane, Line, Ray, Sense};
pub use point::{pt, Point, Vec2};
pub use polygon::{Polygon, PolygonError};
pub use predicates::{on_segment, orient, segments_intersect, segments_properly_disjoint};
pub use rat::{format_rat, parse_rat, rat, rat_bits, ratio, simplest_in_open, Rat};
pub use visibility::{
    external_sees_vertex, inner_halfplanes, polygon_kernel_witness,
    polygon_kernel_witness_certified, VisibilityError,
};
