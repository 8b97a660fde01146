//! Points and direction vectors over exact rationals. `y` grows upward.

use super::rat::{format_rat, Rat};
use num_traits::Zero;
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Point {
    pub x: Rat,
    pub y: Rat,
}

#[derive(Clone, PartialEq, Eq)]
pub struct Vec2 {
    pub x: Rat,
    pub y: Rat,
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", format_rat(&self.x), format_rat(&self.y))
    }
}

impl fmt::Debug for Vec2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}, {}>", format_rat(&self.x), format_rat(&self.y))
    }
}

impl Point {
    pub fn new(x: Rat, y: Rat) -> Self {
        Point { x, y }
    }

    pub fn to(&self, other: &Point) -> Vec2 {
        Vec2 { x: &other.x - &self.x, y: &other.y - &self.y }
    }

    pub fn add(&self, v: &Vec2) -> Point {
        Point { x: &self.x + &v.x, y: &self.y + &v.y }
    }

    pub fn add_scaled(&self, v: &Vec2, t: &Rat) -> Point {
        Point { x: &self.x + &v.x * t, y: &self.y + &v.y * t }
    }

    /// `(1-t)·self + t·other`.
    pub fn lerp(&self, other: &Point, t: &Rat) -> Point {
        self.add_scaled(&self.to(other), t)
    }

    pub fn midpoint(&self, other: &Point) -> Point {
        self.lerp(other, &super::rat::ratio(1, 2))
    }

    /// Squared Euclidean distance, exact.
    pub fn dist2(&self, other: &Point) -> Rat {
        let v = self.to(other);
        v.norm2()
    }
}

impl Vec2 {
    pub fn new(x: Rat, y: Rat) -> Self {
        Vec2 { x, y }
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn cross(&self, other: &Vec2) -> Rat {
        &self.x * &other.y - &self.y * &other.x
    }

    pub fn dot(&self, other: &Vec2) -> Rat {
        &self.x * &other.x + &self.y * &other.y
    }

    pub fn norm2(&self) -> Rat {
        self.dot(self)
    }

    /// Counterclockwise perpendicular (rotate by +90°).
    pub fn perp_ccw(&self) -> Vec2 {
        Vec2 { x: -self.y.clone(), y: self.x.clone() }
    }

    pub fn neg(&self) -> Vec2 {
        Vec2 { x: -self.x.clone(), y: -self.y.clone() }
    }

    pub fn scaled(&self, t: &Rat) -> Vec2 {
        Vec2 { x: &self.x * t, y: &self.y * t }
    }

    pub fn plus(&self, other: &Vec2) -> Vec2 {
        Vec2 { x: &self.x + &other.x, y: &self.y + &other.y }
    }

    /// Same direction test (parallel and positive dot).
    pub fn same_direction(&self, other: &Vec2) -> bool {
        self.cross(other).is_zero() && self.dot(other) > Rat::zero()
    }
}

/// Convenience constructor from integers.
pub fn pt(x: i64, y: i64) -> Point {
    Point::new(super::rat::rat(x), super::rat::rat(y))
}

/// Replace `p` by a nearby point with small dyadic coordinates while `ok`
/// stays true; returns `p` unchanged if no coarse grid point qualifies.
pub fn snap_point_with(p: &Point, ok: impl Fn(&Point) -> bool) -> Point {
    debug_assert!(ok(p), "snap input must satisfy the predicate");
    for g in 0..64u32 {
        let cand = Point::new(
            super::rat::round_to_dyadic(&p.x, g),
            super::rat::round_to_dyadic(&p.y, g),
        );
        if ok(&cand) {
            return cand;
        }
    }
    p.clone()
}
