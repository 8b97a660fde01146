//! Exact orientation and segment predicates.

use super::point::Point;
use super::rat::Rat;
use num_traits::Zero;
use std::cmp::Ordering;

/// Sign of `(q - p) × (r - p)`: `+1` counterclockwise, `-1` clockwise,
/// `0` collinear.
pub fn orient(p: &Point, q: &Point, r: &Point) -> i32 {
    match p.to(q).cross(&p.to(r)).cmp(&Rat::zero()) {
        Ordering::Greater => 1,
        Ordering::Less => -1,
        Ordering::Equal => 0,
    }
}

/// For collinear `p, q, r`: is `r` within the closed bounding box of `pq`
/// (hence on the closed segment)?
fn collinear_on_segment(p: &Point, q: &Point, r: &Point) -> bool {
    let (lox, hix) = if p.x <= q.x { (&p.x, &q.x) } else { (&q.x, &p.x) };
    let (loy, hiy) = if p.y <= q.y { (&p.y, &q.y) } else { (&q.y, &p.y) };
    lox <= &r.x && &r.x <= hix && loy <= &r.y && &r.y <= hiy
}

/// `r` on the closed segment `pq`.
pub fn on_segment(p: &Point, q: &Point, r: &Point) -> bool {
    orient(p, q, r) == 0 && collinear_on_segment(p, q, r)
}

/// Do the closed segments share any point at all?
pub fn segments_intersect(a1: &Point, a2: &Point, b1: &Point, b2: &Point) -> bool {
    let o1 = orient(a1, a2, b1);
    let o2 = orient(a1, a2, b2);
    let o3 = orient(b1, b2, a1);
    let o4 = orient(b1, b2, a2);
    if o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0 {
        return o1 != o2 && o3 != o4;
    }
    // With a collinearity present, any contact point must include an endpoint
    // of one segment lying on the other.
    (o1 == 0 && collinear_on_segment(a1, a2, b1))
        || (o2 == 0 && collinear_on_segment(a1, a2, b2))
        || (o3 == 0 && collinear_on_segment(b1, b2, a1))
        || (o4 == 0 && collinear_on_segment(b1, b2, a2))
}

/// True iff the closed segments share no point, except that sharing exactly
/// one endpoint is permitted (adjacent edges). Overlap, interior crossing and
/// endpoint-in-interior all return false.
pub fn segments_properly_disjoint(a1: &Point, a2: &Point, b1: &Point, b2: &Point) -> bool {
    debug_assert!(a1 != a2 && b1 != b2, "degenerate segment");
    // Count shared endpoints.
    let shared: Vec<(&Point, &Point)> = [(a1, b1), (a1, b2), (a2, b1), (a2, b2)]
        .into_iter()
        .filter(|(x, y)| x == y)
        .collect();
    match shared.len() {
        0 => !segments_intersect(a1, a2, b1, b2),
        1 => {
            let e = shared[0].0;
            let ao = if a1 == e { a2 } else { a1 };
            let bo = if b1 == e { b2 } else { b1 };
            // Only a collinear overlap or an endpoint inside the other segment
            // can add contact beyond the shared endpoint.
            if orient(e, ao, bo) == 0 && e.to(ao).dot(&e.to(bo)) > Rat::zero() {
                return false;
            }
            !segments_intersect_excluding_point(a1, a2, b1, b2, e)
        }
        _ => false, // identical or reversed segments overlap fully
    }
}

/// Intersection test that ignores contact happening exactly at `skip`.
fn segments_intersect_excluding_point(
    a1: &Point,
    a2: &Point,
    b1: &Point,
    b2: &Point,
    skip: &Point,
) -> bool {
    // With one shared endpoint and non-overlapping directions the only other
    // possible contacts are an endpoint of one lying on the other.
    for (p, q, r) in [(a1, a2, b1), (a1, a2, b2), (b1, b2, a1), (b1, b2, a2)] {
        if r != skip && on_segment(p, q, r) {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::point::pt;

    #[test]
    fn orient_examples() {
        assert_eq!(orient(&pt(0, 0), &pt(1, 0), &pt(0, 1)), 1);
        assert_eq!(orient(&pt(0, 0), &pt(1, 0), &pt(2, 0)), 0);
        assert_eq!(orient(&pt(0, 0), &pt(0, 1), &pt(1, 1)), -1);
    }

    #[test]
    fn disjoint_examples() {
        // parallel disjoint
        assert!(segments_properly_disjoint(&pt(0, 0), &pt(1, 0), &pt(0, 1), &pt(1, 1)));
        // X crossing at (1,1)
        assert!(!segments_properly_disjoint(&pt(0, 0), &pt(2, 2), &pt(0, 2), &pt(2, 0)));
        // adjacent edges sharing an endpoint only
        assert!(segments_properly_disjoint(&pt(0, 0), &pt(1, 0), &pt(1, 0), &pt(2, 1)));
    }

    #[test]
    fn disjoint_edge_cases() {
        // collinear overlap through the shared endpoint
        assert!(!segments_properly_disjoint(&pt(0, 0), &pt(2, 0), &pt(2, 0), &pt(1, 0)));
        // collinear continuation: shares endpoint only
        assert!(segments_properly_disjoint(&pt(0, 0), &pt(2, 0), &pt(2, 0), &pt(4, 0)));
        // endpoint in interior
        assert!(!segments_properly_disjoint(&pt(0, 0), &pt(2, 0), &pt(1, 0), &pt(1, 5)));
        // T-contact at shared endpoint with third point touching interior
        assert!(!segments_properly_disjoint(&pt(0, 0), &pt(2, 0), &pt(0, 0), &pt(1, 0)));
        // full overlap
        assert!(!segments_properly_disjoint(&pt(0, 0), &pt(2, 0), &pt(0, 0), &pt(2, 0)));
        // disjoint collinear
        assert!(segments_properly_disjoint(&pt(0, 0), &pt(1, 0), &pt(2, 0), &pt(3, 0)));
    }
}
