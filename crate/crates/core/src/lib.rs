//! Deciding and constructing planar straight-line drawing extensions of a
//! plane graph whose inner cycle is prescribed as a convex polygon.
//!
//! The library models plane graphs combinatorially (clockwise rotation
//! systems with a designated outer face), tests the two necessary conditions
//! for extendability (no outer chords, every petal realizable), constructs an
//! extension whenever the conditions hold, and verifies every produced
//! drawing with an independent exact oracle.

pub mod augment;
pub mod extend;
pub mod fixtures;
pub mod gen;
pub mod geometry;
pub mod io;
pub mod petals;
pub mod plane_graph;
pub mod star_drawer;
pub mod verify;
