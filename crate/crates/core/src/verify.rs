//! Independent exact verification of claimed straight-line drawings:
//! pairwise edge disjointness, rotation-system preservation, outer-face
//! identification and bit-exact fixed coordinates.
//!
//! This module shares only the geometry kernel with the constructive code;
//! it never looks at scaffold data.

use crate::geometry::point::Point;
use crate::geometry::polygon::Polygon;
use crate::geometry::predicates::{on_segment, segments_properly_disjoint};
use crate::geometry::rat::Rat;
use crate::geometry::visibility::polygon_kernel_witness;
use crate::plane_graph::{compare_ccw_from_east, PlaneGraph, VId};
use num_traits::Zero;
use std::collections::HashMap;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("face is not realized as a simple polygon")]
    NonSimpleFace,
}

/// Total assignment of exact coordinates to the vertices of one graph.
#[derive(Clone, Debug)]
pub struct Drawing {
    pub coords: Vec<Point>,
}

impl Drawing {
    pub fn new(coords: Vec<Point>) -> Self {
        Drawing { coords }
    }

    pub fn get(&self, v: VId) -> &Point {
        &self.coords[v as usize]
    }

    pub fn set(&mut self, v: VId, p: Point) {
        self.coords[v as usize] = p;
    }

    pub fn polygon_of_walk(&self, walk: &[VId]) -> Polygon {
        Polygon::new(walk.iter().map(|&v| self.get(v).clone()).collect())
    }
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    /// Check that the stored outer face is realized as the unbounded face.
    pub check_outer: bool,
    /// Compare all edge pairs instead of pruning by x-interval overlap
    /// (exact either way; intended for cross-checking up to mid-size inputs).
    pub force_pairwise: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { check_outer: true, force_pairwise: false }
    }
}

#[derive(Clone, Debug)]
pub struct VerReport {
    pub planar: bool,
    pub embedding_ok: bool,
    pub outer_face_ok: bool,
    pub fixed_coords_ok: bool,
    pub degeneracies: Vec<String>,
    pub first_violation: Option<String>,
}

impl VerReport {
    pub fn ok(&self) -> bool {
        self.planar
            && self.embedding_ok
            && self.outer_face_ok
            && self.fixed_coords_ok
            && self.degeneracies.is_empty()
    }
}

/// Verify a claimed planar straight-line realization of `g`.
///
/// `fixed` lists prescribed coordinates that must be reproduced bit-exactly.
pub fn verify(
    g: &PlaneGraph,
    d: &Drawing,
    fixed: &HashMap<VId, Point>,
    opts: VerifyOptions,
) -> VerReport {
    assert_eq!(d.coords.len(), g.num_vertices(), "drawing must be total");
    let mut report = VerReport {
        planar: true,
        embedding_ok: true,
        outer_face_ok: true,
        fixed_coords_ok: true,
        degeneracies: Vec::new(),
        first_violation: None,
    };

    // Degeneracies first: the segment predicates assume distinct endpoints.
    let mut order: Vec<VId> = g.vertices().collect();
    order.sort_by(|&a, &b| (&d.get(a).x, &d.get(a).y).cmp(&(&d.get(b).x, &d.get(b).y)));
    for w in order.windows(2) {
        if d.get(w[0]) == d.get(w[1]) {
            report.planar = false;
            let msg = format!("coincident vertices {} and {}", g.id(w[0]), g.id(w[1]));
            report.degeneracies.push(msg.clone());
            report.first_violation.get_or_insert(msg);
        }
    }
    for (u, v) in g.edges() {
        if d.get(u) == d.get(v) {
            report.planar = false;
            let msg = format!("zero-length edge {} - {}", g.id(u), g.id(v));
            report.degeneracies.push(msg.clone());
            report.first_violation.get_or_insert(msg);
        }
    }
    if !report.degeneracies.is_empty() {
        return report;
    }

    planarity_pass(g, d, opts, &mut report);
    embedding_pass(g, d, &mut report);
    if opts.check_outer {
        outer_face_pass(g, d, &mut report);
    }
    for (&v, p) in fixed {
        if d.get(v) != p {
            report.fixed_coords_ok = false;
            report
                .first_violation
                .get_or_insert_with(|| format!("prescribed coordinate of {} not preserved", g.id(v)));
        }
    }
    report
}

fn planarity_pass(g: &PlaneGraph, d: &Drawing, opts: VerifyOptions, report: &mut VerReport) {
    let edges = g.edges();
    let mut idx: Vec<usize> = (0..edges.len()).collect();
    let xspan = |&(u, v): &(VId, VId)| -> (Rat, Rat) {
        let (a, b) = (d.get(u), d.get(v));
        if a.x <= b.x {
            (a.x.clone(), b.x.clone())
        } else {
            (b.x.clone(), a.x.clone())
        }
    };
    let spans: Vec<(Rat, Rat)> = edges.iter().map(xspan).collect();
    idx.sort_by(|&i, &j| spans[i].0.cmp(&spans[j].0));

    let record = |report: &mut VerReport, (u1, v1): (VId, VId), (u2, v2): (VId, VId)| {
        report.planar = false;
        report.first_violation.get_or_insert_with(|| {
            format!(
                "edges {} - {} and {} - {} intersect",
                g.id(u1),
                g.id(v1),
                g.id(u2),
                g.id(v2)
            )
        });
    };

    let test = |a: (VId, VId), b: (VId, VId)| -> bool {
        segments_properly_disjoint(d.get(a.0), d.get(a.1), d.get(b.0), d.get(b.1))
    };

    if opts.force_pairwise {
        for i in 0..edges.len() {
            for j in (i + 1)..edges.len() {
                if !test(edges[i], edges[j]) {
                    record(report, edges[i], edges[j]);
                }
            }
        }
    } else {
        // Sweep by x-interval: only overlapping spans can intersect.
        let mut active: Vec<usize> = Vec::new();
        for &i in &idx {
            active.retain(|&j| spans[j].1 >= spans[i].0);
            for &j in &active {
                if !test(edges[i], edges[j]) {
                    record(report, edges[i], edges[j]);
                }
            }
            active.push(i);
        }
    }

    // A vertex in the interior of a non-incident edge counts as non-planar.
    let mut by_x: Vec<VId> = g.vertices().collect();
    by_x.sort_by(|&a, &b| d.get(a).x.cmp(&d.get(b).x));
    for (k, &(u, v)) in edges.iter().enumerate() {
        let (lo, hi) = &spans[k];
        let start = by_x.partition_point(|&w| d.get(w).x < *lo);
        for &w in &by_x[start..] {
            if d.get(w).x > *hi {
                break;
            }
            if w == u || w == v {
                continue;
            }
            if on_segment(d.get(u), d.get(v), d.get(w)) {
                report.planar = false;
                let msg = format!("vertex {} lies on edge {} - {}", g.id(w), g.id(u), g.id(v));
                report.degeneracies.push(msg.clone());
                report.first_violation.get_or_insert(msg);
            }
        }
    }
}

fn embedding_pass(g: &PlaneGraph, d: &Drawing, report: &mut VerReport) {
    for v in g.vertices() {
        let rot = g.rotation(v);
        if rot.len() <= 2 {
            continue; // any cyclic order of two neighbors matches
        }
        let origin = d.get(v);
        let mut realized: Vec<VId> = rot.to_vec();
        realized.sort_by(|&a, &b| {
            let da = origin.to(d.get(a));
            let db = origin.to(d.get(b));
            compare_ccw_from_east(&da, &db).reverse()
        });
        if !cyclic_eq(rot, &realized) {
            report.embedding_ok = false;
            report
                .first_violation
                .get_or_insert_with(|| format!("rotation at {} not realized", g.id(v)));
        }
    }
}

fn cyclic_eq(a: &[VId], b: &[VId]) -> bool {
    debug_assert_eq!(a.len(), b.len());
    if a.is_empty() {
        return true;
    }
    match b.iter().position(|&x| x == a[0]) {
        None => false,
        Some(s) => (0..a.len()).all(|i| a[i] == b[(s + i) % b.len()]),
    }
}

fn outer_face_pass(g: &PlaneGraph, d: &Drawing, report: &mut VerReport) {
    let walk = g.outer_face();
    if walk.len() < 3 {
        report.outer_face_ok = false;
        report.first_violation.get_or_insert_with(|| "outer face too short".into());
        return;
    }
    // Detector 1: the outer facial walk, traversed as stored (clockwise),
    // must enclose the drawing negatively.
    let poly = d.polygon_of_walk(walk);
    if poly.signed_area2() >= Rat::zero() {
        report.outer_face_ok = false;
        report
            .first_violation
            .get_or_insert_with(|| "outer facial walk not realized clockwise".into());
        return;
    }
    // Detector 2: the extreme vertex of the drawing lies on the outer walk.
    let extreme = g
        .vertices()
        .min_by(|&a, &b| (&d.get(a).y, &d.get(a).x).cmp(&(&d.get(b).y, &d.get(b).x)))
        .unwrap();
    if !walk.contains(&extreme) {
        report.outer_face_ok = false;
        report
            .first_violation
            .get_or_insert_with(|| format!("extreme vertex {} not on the outer face", g.id(extreme)));
    }
}

/// Kernel witness of a realized facial cycle; errors if the face polygon is
/// not simple.
pub fn face_star_shaped(d: &Drawing, face: &[VId]) -> Result<Option<Point>, VerifyError> {
    let poly = d.polygon_of_walk(face);
    if poly.validate_simple().is_err() {
        return Err(VerifyError::NonSimpleFace);
    }
    Ok(polygon_kernel_witness(&poly))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::octahedron_with_coords;
    use crate::geometry::point::pt;

    fn octa_drawing() -> (PlaneGraph, Drawing) {
        let (g, coords) = octahedron_with_coords();
        (g, Drawing::new(coords))
    }

    #[test]
    fn octahedron_drawing_verifies() {
        let (g, d) = octa_drawing();
        let rep = verify(&g, &d, &HashMap::new(), VerifyOptions::default());
        assert!(rep.ok(), "{rep:?}");
        let rep2 = verify(
            &g,
            &d,
            &HashMap::new(),
            VerifyOptions { force_pairwise: true, ..Default::default() },
        );
        assert!(rep2.ok());
    }

    #[test]
    fn crossing_detected() {
        let (g, mut d) = octa_drawing();
        let a = g.resolve("a").unwrap();
        d.set(a, pt(40, 40));
        let rep = verify(&g, &d, &HashMap::new(), VerifyOptions::default());
        assert!(!rep.planar);
        assert!(rep.first_violation.is_some());
        let rep2 = verify(
            &g,
            &d,
            &HashMap::new(),
            VerifyOptions { force_pairwise: true, ..Default::default() },
        );
        assert_eq!(rep.planar, rep2.planar);
    }

    #[test]
    fn mirrored_rotation_detected() {
        let (g, d) = octa_drawing();
        let a = g.resolve("a").unwrap() as usize;
        let mut rots = g.rotations().to_vec();
        rots[a].reverse();
        let g2 = PlaneGraph::from_parts(g.ids().to_vec(), rots, g.outer_face().to_vec()).unwrap();
        let rep = verify(
            &g2,
            &d,
            &HashMap::new(),
            VerifyOptions { check_outer: false, force_pairwise: false },
        );
        assert!(!rep.embedding_ok);
    }

    #[test]
    fn fixed_coordinates_enforced() {
        let (g, d) = octa_drawing();
        let a = g.resolve("a").unwrap();
        let mut fixed = HashMap::new();
        fixed.insert(a, pt(1, 1));
        let rep = verify(&g, &d, &fixed, VerifyOptions::default());
        assert!(!rep.fixed_coords_ok);
    }

    #[test]
    fn vertex_on_edge_detected() {
        let (g, mut d) = octa_drawing();
        let a = g.resolve("a").unwrap();
        // interior of outer edge A-B, which runs from (0,0) to (12,0)
        d.set(a, pt(6, 0));
        let rep = verify(&g, &d, &HashMap::new(), VerifyOptions::default());
        assert!(!rep.planar);
    }

    #[test]
    fn star_shaped_faces() {
        let d = Drawing::new(vec![pt(0, 0), pt(4, 0), pt(4, 4), pt(0, 4)]);
        assert!(face_star_shaped(&d, &[0, 1, 2, 3]).unwrap().is_some());

        // dart-shaped quadrilateral: star-shaped, kernel near the reflex side
        let d2 = Drawing::new(vec![pt(0, 0), pt(8, 0), pt(4, 6), pt(4, 2)]);
        let w2 = face_star_shaped(&d2, &[0, 1, 2, 3]).unwrap();
        assert!(w2.is_some());

        // spiral face: empty kernel
        let d3 = Drawing::new(vec![
            pt(0, 0),
            pt(10, 0),
            pt(10, 10),
            pt(2, 10),
            pt(2, 4),
            pt(6, 4),
            pt(6, 6),
            pt(4, 6),
            pt(4, 8),
            pt(8, 8),
            pt(8, 2),
            pt(0, 2),
        ]);
        let w3 = face_star_shaped(&d3, &(0..12).collect::<Vec<_>>());
        match w3 {
            Ok(None) => {}
            other => panic!("spiral should have empty kernel, got {other:?}"),
        }
    }
}
