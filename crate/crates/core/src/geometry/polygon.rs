//! Polygons; validation of the clockwise strictly-convex invariant.

use super::point::{Point, Vec2};
use super::predicates::segments_properly_disjoint;
use super::rat::Rat;
use num_traits::Zero;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolygonError {
    #[error("polygon needs at least 3 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("coincident consecutive vertices at index {0}")]
    CoincidentVertices(usize),
    #[error("flat vertex unsupported (index {0})")]
    FlatVertex(usize),
    #[error("counterclockwise turn at index {0} in clockwise polygon")]
    NotClockwiseConvex(usize),
    #[error("edge directions wind more than once (not simple)")]
    MultipleWinding,
    #[error("polygon edges self-intersect")]
    SelfIntersecting,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polygon {
    pub pts: Vec<Point>,
}

impl Polygon {
    pub fn new(pts: Vec<Point>) -> Self {
        Polygon { pts }
    }

    pub fn len(&self) -> usize {
        self.pts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pts.is_empty()
    }

    pub fn vertex(&self, i: usize) -> &Point {
        &self.pts[i % self.pts.len()]
    }

    /// Vertex pairs of each directed edge, in order.
    pub fn edges(&self) -> impl Iterator<Item = (&Point, &Point)> {
        let n = self.pts.len();
        (0..n).map(move |i| (&self.pts[i], &self.pts[(i + 1) % n]))
    }

    /// Twice the signed area (shoelace); negative for clockwise with y up.
    pub fn signed_area2(&self) -> Rat {
        let n = self.pts.len();
        let mut s = Rat::zero();
        for i in 0..n {
            let p = &self.pts[i];
            let q = &self.pts[(i + 1) % n];
            s += &p.x * &q.y - &q.x * &p.y;
        }
        s
    }

    /// Checks the convex-clockwise invariant: >= 3 vertices, strictly
    /// clockwise turn at every vertex (no flat vertices), a single winding,
    /// and negative signed area. This implies simplicity.
    pub fn validate_convex_clockwise(&self) -> Result<(), PolygonError> {
        let n = self.pts.len();
        if n < 3 {
            return Err(PolygonError::TooFewVertices(n));
        }
        let mut dirs: Vec<Vec2> = Vec::with_capacity(n);
        for i in 0..n {
            let p = &self.pts[i];
            let q = &self.pts[(i + 1) % n];
            if p == q {
                return Err(PolygonError::CoincidentVertices(i));
            }
            dirs.push(p.to(q));
        }
        for i in 0..n {
            let cr = dirs[i].cross(&dirs[(i + 1) % n]);
            if cr.is_zero() {
                return Err(PolygonError::FlatVertex((i + 1) % n));
            }
            if cr > Rat::zero() {
                return Err(PolygonError::NotClockwiseConvex((i + 1) % n));
            }
        }
        // All turns clockwise and strictly less than pi each; the polygon is
        // simple iff the directions make exactly one revolution. Count how
        // often the clockwise arc from dirs[i] to dirs[i+1] covers dirs[0].
        let mut wraps = 0usize;
        for i in 0..n {
            let u = &dirs[i];
            let v = &dirs[(i + 1) % n];
            if i + 1 == n {
                wraps += 1; // closing arc ends exactly at dirs[0]
                continue;
            }
            let strictly_inside =
                u.cross(&dirs[0]) < Rat::zero() && dirs[0].cross(v) < Rat::zero();
            let lands_on = v.same_direction(&dirs[0]);
            if strictly_inside || lands_on {
                wraps += 1;
            }
        }
        if wraps != 1 {
            return Err(PolygonError::MultipleWinding);
        }
        if self.signed_area2() >= Rat::zero() {
            return Err(PolygonError::NotClockwiseConvex(0));
        }
        Ok(())
    }

    /// O(k^2) simplicity test for general polygons (test/fixture use).
    pub fn validate_simple(&self) -> Result<(), PolygonError> {
        let n = self.pts.len();
        if n < 3 {
            return Err(PolygonError::TooFewVertices(n));
        }
        for i in 0..n {
            if self.pts[i] == self.pts[(i + 1) % n] {
                return Err(PolygonError::CoincidentVertices(i));
            }
        }
        for i in 0..n {
            for j in (i + 1)..n {
                let (a1, a2) = (&self.pts[i], &self.pts[(i + 1) % n]);
                let (b1, b2) = (&self.pts[j], &self.pts[(j + 1) % n]);
                if !segments_properly_disjoint(a1, a2, b1, b2) {
                    return Err(PolygonError::SelfIntersecting);
                }
            }
        }
        Ok(())
    }

    /// Membership in the open interior of a validated convex clockwise polygon.
    pub fn convex_contains_strict(&self, p: &Point) -> bool {
        self.edges().all(|(a, b)| super::predicates::orient(a, b, p) < 0)
    }

    /// Strictly outside a validated convex clockwise polygon.
    pub fn convex_strictly_outside(&self, p: &Point) -> bool {
        self.edges().any(|(a, b)| super::predicates::orient(a, b, p) > 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::point::pt;

    fn square() -> Polygon {
        Polygon::new(vec![pt(0, 2), pt(2, 2), pt(2, 0), pt(0, 0)])
    }

    #[test]
    fn square_is_convex_clockwise() {
        assert!(square().validate_convex_clockwise().is_ok());
        assert!(square().signed_area2() < Rat::zero());
    }

    #[test]
    fn counterclockwise_rejected() {
        let ccw = Polygon::new(vec![pt(0, 0), pt(2, 0), pt(2, 2), pt(0, 2)]);
        assert!(matches!(
            ccw.validate_convex_clockwise(),
            Err(PolygonError::NotClockwiseConvex(_))
        ));
    }

    #[test]
    fn flat_vertex_rejected() {
        let p = Polygon::new(vec![pt(0, 2), pt(1, 2), pt(2, 2), pt(2, 0), pt(0, 0)]);
        assert_eq!(p.validate_convex_clockwise(), Err(PolygonError::FlatVertex(1)));
    }

    #[test]
    fn double_winding_rejected() {
        // A clockwise "pentagram"-like walk: every turn is clockwise but the
        // directions wind twice; must be rejected.
        let p = Polygon::new(vec![pt(0, 10), pt(6, -8), pt(-9, 3), pt(9, 3), pt(-6, -8)]);
        let r = p.validate_convex_clockwise();
        assert!(
            matches!(r, Err(PolygonError::MultipleWinding)),
            "unexpected: {r:?}"
        );
    }

    #[test]
    fn interior_tests() {
        let s = square();
        assert!(s.convex_contains_strict(&pt(1, 1)));
        assert!(!s.convex_contains_strict(&pt(0, 1))); // boundary
        assert!(s.convex_strictly_outside(&pt(3, 3)));
        assert!(!s.convex_strictly_outside(&pt(2, 1))); // boundary
    }
}
