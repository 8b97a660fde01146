//! Lines, rays and strict half-planes.

use super::point::{Point, Vec2};
use super::rat::Rat;
use num_traits::Zero;

/// The locus `a·x + b·y = c` with `(a, b) != (0, 0)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Line {
    pub a: Rat,
    pub b: Rat,
    pub c: Rat,
}

impl Line {
    pub fn new(a: Rat, b: Rat, c: Rat) -> Self {
        assert!(!(a.is_zero() && b.is_zero()), "degenerate line");
        Line { a, b, c }
    }

    /// Line through two distinct points. For `r` off the line,
    /// `eval(r) = -cross(q - p, r - p)`, so a clockwise turn p,q,r gives
    /// `eval(r) > 0`.
    pub fn through(p: &Point, q: &Point) -> Self {
        assert!(p != q, "line through coincident points");
        let a = &q.y - &p.y;
        let b = &p.x - &q.x;
        let c = &a * &p.x + &b * &p.y;
        Line { a, b, c }
    }

    /// `a·x + b·y - c`; sign tells the side.
    pub fn eval(&self, p: &Point) -> Rat {
        &self.a * &p.x + &self.b * &p.y - &self.c
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.eval(p).is_zero()
    }

    pub fn is_parallel(&self, other: &Line) -> bool {
        (&self.a * &other.b - &self.b * &other.a).is_zero()
    }

    /// Unique intersection point, absent when parallel (including coincident).
    pub fn intersection(&self, other: &Line) -> Option<Point> {
        let det = &self.a * &other.b - &self.b * &other.a;
        if det.is_zero() {
            return None;
        }
        let x = (&self.c * &other.b - &self.b * &other.c) / &det;
        let y = (&self.a * &other.c - &self.c * &other.a) / &det;
        Some(Point::new(x, y))
    }
}

/// Half-line `origin + t·dir`, `t >= 0`, `dir != 0`.
#[derive(Clone, Debug)]
pub struct Ray {
    pub origin: Point,
    pub dir: Vec2,
}

impl Ray {
    pub fn new(origin: Point, dir: Vec2) -> Self {
        assert!(!dir.is_zero(), "degenerate ray");
        Ray { origin, dir }
    }

    pub fn at(&self, t: &Rat) -> Point {
        self.origin.add_scaled(&self.dir, t)
    }

    /// Supporting line of the ray.
    pub fn line(&self) -> Line {
        Line::through(&self.origin, &self.origin.add(&self.dir))
    }

    /// Parameter at which the ray meets `line`, if a unique one exists
    /// (`t` may be negative; callers filter).
    pub fn param_at_line(&self, line: &Line) -> Option<Rat> {
        let denom = &line.a * &self.dir.x + &line.b * &self.dir.y;
        if denom.is_zero() {
            return None;
        }
        Some(-(line.eval(&self.origin)) / denom)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sense {
    /// `a·x + b·y > c`
    Greater,
    /// `a·x + b·y < c`
    Less,
}

/// Open half-plane; membership is strict.
#[derive(Clone, Debug)]
pub struct HalfPlane {
    pub line: Line,
    pub sense: Sense,
}

impl HalfPlane {
    pub fn new(line: Line, sense: Sense) -> Self {
        HalfPlane { line, sense }
    }

    pub fn contains(&self, p: &Point) -> bool {
        let v = self.line.eval(p);
        match self.sense {
            Sense::Greater => v > Rat::zero(),
            Sense::Less => v < Rat::zero(),
        }
    }

    /// Open side of the directed edge `p -> q` that a clockwise polygon's
    /// interior lies on (its right).
    pub fn right_of_edge(p: &Point, q: &Point) -> Self {
        HalfPlane { line: Line::through(p, q), sense: Sense::Greater }
    }

    /// Open side strictly beyond the supporting line of the clockwise-polygon
    /// edge `p -> q`, away from the polygon.
    pub fn beyond_edge(p: &Point, q: &Point) -> Self {
        HalfPlane { line: Line::through(p, q), sense: Sense::Less }
    }

    /// The complementary open half-plane.
    pub fn flipped(&self) -> Self {
        let sense = match self.sense {
            Sense::Greater => Sense::Less,
            Sense::Less => Sense::Greater,
        };
        HalfPlane { line: self.line.clone(), sense }
    }

    /// Coefficients `(a, b, c)` normalized so membership reads `a·x + b·y < c`.
    pub fn as_less_than(&self) -> (Rat, Rat, Rat) {
        match self.sense {
            Sense::Less => (self.line.a.clone(), self.line.b.clone(), self.line.c.clone()),
            Sense::Greater => (-self.line.a.clone(), -self.line.b.clone(), -self.line.c.clone()),
        }
    }
}
