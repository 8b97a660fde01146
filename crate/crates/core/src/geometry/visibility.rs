//! Polygon kernels and visibility of polygon vertices from external points.

use super::feasibility::{feasible_point, strict_halfplane_witness, Feasibility};
use super::line::HalfPlane;
use super::point::Point;
use super::polygon::Polygon;
use super::predicates::orient;
use super::rat::Rat;
use num_traits::Zero;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum VisibilityError {
    #[error("point is not strictly outside the polygon")]
    PointNotOutside,
}

/// Inner open half-planes of every edge, oriented by the polygon's winding.
pub fn inner_halfplanes(poly: &Polygon) -> Vec<HalfPlane> {
    let clockwise = poly.signed_area2() < Rat::zero();
    poly.edges()
        .map(|(p, q)| {
            let h = HalfPlane::right_of_edge(p, q);
            if clockwise {
                h
            } else {
                h.flipped()
            }
        })
        .collect()
}

/// A point of the open kernel (intersection of the inner open half-planes of
/// all edges), or `None` when the polygon is not star-shaped with a
/// positive-area kernel. The polygon must be simple.
pub fn polygon_kernel_witness(poly: &Polygon) -> Option<Point> {
    feasible_point(&inner_halfplanes(poly))
}

/// Kernel decision together with an infeasibility certificate on failure.
pub fn polygon_kernel_witness_certified(poly: &Polygon) -> Feasibility {
    strict_halfplane_witness(&inner_halfplanes(poly))
}

/// Does the external point `p` see vertex `v` of a convex clockwise polygon,
/// i.e. does segment `p`–`v` meet the polygon only at `v`?
///
/// `p` must be strictly outside.
pub fn external_sees_vertex(
    poly: &Polygon,
    p: &Point,
    v: usize,
) -> Result<bool, VisibilityError> {
    let n = poly.len();
    if !poly.convex_strictly_outside(p) {
        return Err(VisibilityError::PointNotOutside);
    }
    let vert = poly.vertex(v);
    let prev = poly.vertex((v + n - 1) % n);
    let next = poly.vertex((v + 1) % n);
    // Strictly beyond the supporting line of at least one incident edge
    // (clockwise polygon: beyond = counterclockwise side).
    let beyond_prev = orient(prev, vert, p) > 0;
    let beyond_next = orient(vert, next, p) > 0;
    if !beyond_prev && !beyond_next {
        return Ok(false);
    }
    // Exclude collinear overlap with an incident edge: p on the line of the
    // edge and on the edge's own side of v.
    let overlaps_next =
        orient(vert, next, p) == 0 && vert.to(p).dot(&vert.to(next)) > Rat::zero();
    let overlaps_prev =
        orient(prev, vert, p) == 0 && vert.to(p).dot(&vert.to(prev)) > Rat::zero();
    Ok(!overlaps_next && !overlaps_prev)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::point::pt;
    use crate::geometry::rat::rat;

    fn square() -> Polygon {
        Polygon::new(vec![pt(0, 2), pt(2, 2), pt(2, 0), pt(0, 0)])
    }

    #[test]
    fn convex_kernel_is_interior() {
        let w = polygon_kernel_witness(&square()).expect("convex polygon has a kernel");
        assert!(square().convex_contains_strict(&w));
    }

    #[test]
    fn l_shape_kernel() {
        let l = Polygon::new(vec![pt(0, 0), pt(0, 2), pt(1, 2), pt(1, 1), pt(2, 1), pt(2, 0)]);
        l.validate_simple().unwrap();
        let w = polygon_kernel_witness(&l).expect("L-shape is star-shaped");
        // The kernel of this L is the open unit box; check strict feasibility
        // of every inner half-plane rather than trusting coordinates.
        for h in inner_halfplanes(&l) {
            assert!(h.contains(&w));
        }
        assert!(w.x > rat(0) && w.x < rat(1) && w.y > rat(0) && w.y < rat(1));
    }

    #[test]
    fn comb_polygon_has_no_kernel() {
        // A notch from the top forces y < 1, a notch from the bottom forces
        // y > 3; opposite-facing, so the kernel is empty.
        let comb = Polygon::new(vec![
            pt(0, 0),
            pt(0, 4),
            pt(1, 4),
            pt(1, 1),
            pt(2, 1),
            pt(2, 4),
            pt(6, 4),
            pt(6, 0),
            pt(5, 0),
            pt(5, 3),
            pt(4, 3),
            pt(4, 0),
        ]);
        comb.validate_simple().unwrap();
        assert!(polygon_kernel_witness(&comb).is_none());
        match polygon_kernel_witness_certified(&comb) {
            Feasibility::Infeasible(cert) => {
                assert!(cert.len() <= 3);
                let hs = inner_halfplanes(&comb);
                let sub: Vec<HalfPlane> = cert.iter().map(|&i| hs[i].clone()).collect();
                assert!(feasible_point(&sub).is_none());
            }
            Feasibility::Witness(_) => panic!("comb must not be star-shaped"),
        }
    }

    #[test]
    fn sees_examples() {
        let s = square();
        assert_eq!(external_sees_vertex(&s, &pt(3, 3), 1).unwrap(), true); // (2,2)
        assert_eq!(external_sees_vertex(&s, &pt(3, 3), 3).unwrap(), false); // (0,0)
        assert_eq!(external_sees_vertex(&s, &pt(1, 3), 0).unwrap(), true); // (0,2)
        assert!(external_sees_vertex(&s, &pt(1, 1), 0).is_err());
    }

    #[test]
    fn collinear_overlap_blocks_sight() {
        let s = square();
        // p on the extension of the top edge beyond (2,2): sees (2,2) but the
        // segment to (0,2) would run along the edge.
        assert_eq!(external_sees_vertex(&s, &pt(3, 2), 1).unwrap(), true);
        assert_eq!(external_sees_vertex(&s, &pt(3, 2), 0).unwrap(), false);
    }
}
