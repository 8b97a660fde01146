//! Filling star-shaped (and convex) polygons with planar straight-line
//! drawings of internally triangulated plane graphs whose boundary is fixed.
//!
//! The filler cuts the polygon along a segment from a reflex vertex through a
//! kernel point, routes a chordless interior path of the graph along the cut,
//! splits at any boundary chords the pieces acquire, and recurses; each cut
//! removes a reflex vertex and moves interior vertices to piece boundaries,
//! so the recursion bottoms out at triangle faces. Every result is checked by
//! the independent verifier before it is returned.

use crate::geometry::feasibility::feasible_point;
use crate::geometry::line::{HalfPlane, Line};
use crate::geometry::point::{snap_point_with, Point};
use crate::geometry::polygon::Polygon;
use crate::geometry::predicates::orient;
use crate::geometry::rat::{simplest_in_open, Rat};
use crate::geometry::visibility::inner_halfplanes;
use crate::plane_graph::{induced_subgraph, norm_edge, PlaneGraph, VId};
use crate::verify::{verify, Drawing, VerifyOptions};
use num_traits::{One, Zero};
use std::collections::{HashMap, HashSet, VecDeque};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FillError {
    #[error("fill graph is not internally triangulated")]
    NotInternallyTriangulated,
    #[error("fill boundary has a chord {0} - {1}")]
    BoundaryChord(String, String),
    #[error("polygon size does not match the boundary")]
    SizeMismatch,
    #[error("polygon is not star-shaped with positive-area kernel")]
    NotStarShaped,
    #[error("fill failed: {0}")]
    Defect(String),
    #[error("fill failed verification: {0}")]
    VerifyFailed(String),
}

/// A fill problem: an internally triangulated plane graph whose outer cycle
/// is chordless, pinned to a star-shaped polygon. `polygon.pts[i]` is the
/// position of `h.outer_face()[i]`. The kernel witness is recomputed here,
/// never trusted from the caller.
pub struct FillTask {
    pub h: PlaneGraph,
    pub polygon: Polygon,
    pub kernel_witness: Point,
}

impl FillTask {
    pub fn new(h: PlaneGraph, polygon: Polygon) -> Result<FillTask, FillError> {
        let boundary = h.outer_face().to_vec();
        if boundary.len() != polygon.len() {
            return Err(FillError::SizeMismatch);
        }
        let faces = h.faces();
        if faces.outer == usize::MAX {
            return Err(FillError::Defect("boundary is not a face".into()));
        }
        for (f, w) in faces.walks.iter().enumerate() {
            if f != faces.outer && w.len() != 3 {
                return Err(FillError::NotInternallyTriangulated);
            }
        }
        if let Some((u, v)) = boundary_chord(&h, &boundary) {
            return Err(FillError::BoundaryChord(h.id(u).into(), h.id(v).into()));
        }
        let kernel_witness = kernel_point(&polygon)?;
        Ok(FillTask { h, polygon, kernel_witness })
    }
}

fn boundary_chord(g: &PlaneGraph, walk: &[VId]) -> Option<(VId, VId)> {
    let pos: HashMap<VId, usize> = walk.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let l = walk.len();
    for (u, v) in g.edges() {
        if let (Some(&a), Some(&b)) = (pos.get(&u), pos.get(&v)) {
            let d = (a + l - b) % l;
            if d != 1 && d != l - 1 {
                return Some((u, v));
            }
        }
    }
    None
}

fn kernel_point(poly: &Polygon) -> Result<Point, FillError> {
    let hs = inner_halfplanes(poly);
    let w = feasible_point(&hs).ok_or(FillError::NotStarShaped)?;
    Ok(snap_point_with(&w, |p| hs.iter().all(|h| h.contains(p))))
}

/// Planar straight-line drawing of the task graph inside its polygon, with
/// the boundary bit-identical. Verified before returning.
pub fn draw_in_star_polygon(task: &FillTask) -> Result<Drawing, FillError> {
    let h = &task.h;
    let boundary = h.outer_face().to_vec();
    let mut coords: Vec<Option<Point>> = vec![None; h.num_vertices()];
    for (i, &v) in boundary.iter().enumerate() {
        coords[v as usize] = Some(task.polygon.pts[i].clone());
    }
    let interior = fill_rec(h, &task.polygon, 0)?;
    for (v, p) in interior {
        if coords[v as usize].replace(p).is_some() {
            return Err(FillError::Defect(format!("vertex {} placed twice", h.id(v))));
        }
    }
    let coords: Option<Vec<Point>> = coords.into_iter().collect();
    let coords = coords.ok_or_else(|| FillError::Defect("vertex left unplaced".into()))?;
    let d = Drawing::new(coords);
    let fixed: HashMap<VId, Point> = boundary
        .iter()
        .enumerate()
        .map(|(i, &v)| (v, task.polygon.pts[i].clone()))
        .collect();
    let rep = verify(h, &d, &fixed, VerifyOptions::default());
    if !rep.ok() {
        return Err(FillError::VerifyFailed(
            rep.first_violation.unwrap_or_else(|| "unknown".into()),
        ));
    }
    Ok(d)
}

/// Fill a convex region whose boundary cycle may have inner chords: chords of
/// a convex polygon are drawn straight, the region splits along them, and
/// each chordless piece is filled. Verified before returning.
pub fn fill_convex_region(h: &PlaneGraph, polygon: &Polygon) -> Result<Drawing, FillError> {
    polygon
        .validate_convex_clockwise()
        .map_err(|e| FillError::Defect(format!("region polygon not convex: {e}")))?;
    let boundary = h.outer_face().to_vec();
    if boundary.len() != polygon.len() {
        return Err(FillError::SizeMismatch);
    }
    let faces = h.faces();
    for (f, w) in faces.walks.iter().enumerate() {
        if f != faces.outer && w.len() != 3 {
            return Err(FillError::NotInternallyTriangulated);
        }
    }
    let mut coords: Vec<Option<Point>> = vec![None; h.num_vertices()];
    for (i, &v) in boundary.iter().enumerate() {
        coords[v as usize] = Some(polygon.pts[i].clone());
    }
    for (v, p) in fill_rec(h, polygon, 0)? {
        coords[v as usize] = Some(p);
    }
    let coords: Option<Vec<Point>> = coords.into_iter().collect();
    let d = Drawing::new(coords.ok_or_else(|| FillError::Defect("vertex left unplaced".into()))?);
    let fixed: HashMap<VId, Point> =
        boundary.iter().enumerate().map(|(i, &v)| (v, polygon.pts[i].clone())).collect();
    let rep = verify(h, &d, &fixed, VerifyOptions::default());
    if !rep.ok() {
        return Err(FillError::VerifyFailed(
            rep.first_violation.unwrap_or_else(|| "unknown".into()),
        ));
    }
    Ok(d)
}

const MAX_DEPTH: usize = 10_000;

/// Recursive region filler. `g`'s outer face is the region boundary, pinned
/// to `poly`. Returns placements for all interior vertices of `g`.
fn fill_rec(g: &PlaneGraph, poly: &Polygon, depth: usize) -> Result<Vec<(VId, Point)>, FillError> {
    if depth > MAX_DEPTH {
        return Err(FillError::Defect("recursion limit exceeded".into()));
    }
    let walk = g.outer_face().to_vec();
    let m = walk.len();

    // Split at a boundary chord first, if any.
    if let Some((u, v)) = boundary_chord(g, &walk) {
        return split_at_chord(g, poly, &walk, u, v, depth);
    }

    let interior_count = g.num_vertices() - m;
    if interior_count == 0 {
        if m != 3 {
            return Err(FillError::Defect(format!(
                "chordless region without interior must be a triangle, got {m}-gon"
            )));
        }
        return Ok(Vec::new());
    }

    // Choose the cut origin: a reflex polygon vertex if one exists, else any
    // non-flat vertex.
    let turn = |t: usize| -> i32 {
        orient(poly.vertex(t + m - 1), poly.vertex(t), poly.vertex(t + 1))
    };
    let r = (0..m)
        .find(|&t| turn(t) > 0)
        .or_else(|| (0..m).find(|&t| turn(t) != 0))
        .ok_or_else(|| FillError::Defect("degenerate region polygon".into()))?;

    let hs = inner_halfplanes(poly);
    let kappa = {
        let w = feasible_point(&hs).ok_or(FillError::NotStarShaped)?;
        snap_point_with(&w, |p| hs.iter().all(|h| h.contains(p)))
    };

    // Shoot the cut ray from P(r) through the kernel point and find the first
    // boundary hit strictly beyond it.
    let origin = poly.vertex(r).clone();
    let dir = origin.to(&kappa);
    let kappa_t = Rat::one(); // kappa is at parameter 1 along (origin, dir)
    let mut best: Option<(Rat, Hit)> = None;
    let consider = |t: Rat, hit: Hit, best: &mut Option<(Rat, Hit)>| {
        if t <= kappa_t {
            return;
        }
        if best.as_ref().map_or(true, |(bt, _)| t < *bt) {
            *best = Some((t, hit));
        }
    };
    let cut_line = Line::through(&origin, &kappa);
    for e in 0..m {
        if e == r || (e + 1) % m == r {
            // Edges incident to the origin vertex cannot host the exit.
            // (Their interior would force the kernel onto the boundary.)
        }
        let (a, b) = (poly.vertex(e), poly.vertex((e + 1) % m));
        let va = cut_line.eval(a);
        let vb = cut_line.eval(b);
        if va.is_zero() {
            if e != r {
                let t = param_on_ray(&origin, &dir, a);
                consider(t, Hit::Vertex(e), &mut best);
            }
            continue;
        }
        if vb.is_zero() {
            continue; // handled as the vertex of the next edge
        }
        if (va > Rat::zero()) != (vb > Rat::zero()) {
            // proper interior crossing of the edge's open segment
            let sigma = &va / (&va - &vb);
            let z = a.lerp(b, &sigma);
            let t = param_on_ray(&origin, &dir, &z);
            consider(t, Hit::Edge(e, z), &mut best);
        }
    }
    let (_, hit) = best.ok_or_else(|| FillError::Defect("cut ray found no exit".into()))?;

    // Materialize the cut target: either an existing boundary vertex or a
    // dummy subdividing the hit edge.
    let (g2, walk2, poly2, target_pos, dummy) = match hit {
        Hit::Vertex(pos) => (g.clone(), walk.clone(), poly.clone(), pos, None),
        Hit::Edge(e, z) => {
            let (g2, d) = subdivide_boundary_edge(g, &walk, e)?;
            let mut w2 = walk.clone();
            w2.insert(e + 1, d);
            let mut p2 = poly.clone();
            p2.pts.insert(e + 1, z);
            (g2, w2, p2, e + 1, Some(d))
        }
    };
    let m2 = walk2.len();
    let r2 = walk2.iter().position(|&x| x == walk[r]).unwrap();
    let b_r = walk2[r2];
    let target = walk2[target_pos];

    // Chordless interior path from the cut origin to the target.
    let on_boundary: HashSet<VId> = walk2.iter().copied().collect();
    let path = interior_path(&g2, b_r, target, &on_boundary)
        .ok_or_else(|| FillError::Defect("no interior path along the cut".into()))?;
    debug_assert!(path.len() >= 3);

    // Place the internal path vertices on the part of the cut segment inside
    // the open kernel, in path order.
    let z_pt = poly2.pts[target_pos].clone();
    let seg_dir = origin.to(&z_pt);
    let mut t_lo = Rat::zero();
    let mut t_hi = Rat::one();
    for h in &hs {
        clip_param_interval(&origin, &seg_dir, h, &mut t_lo, &mut t_hi);
    }
    if t_lo >= t_hi {
        return Err(FillError::Defect("cut segment misses the open kernel".into()));
    }
    let mut placements: Vec<(VId, Point)> = Vec::new();
    let mut cursor = t_lo.clone();
    let internals = &path[1..path.len() - 1];
    for &x in internals {
        let t = simplest_in_open(&cursor, &t_hi);
        placements.push((x, origin.add_scaled(&seg_dir, &t)));
        cursor = t;
    }

    // Split the region along the path and recurse on both pieces.
    let path_pts: HashMap<VId, Point> = placements.iter().cloned().collect();
    let pieces = split_along_path(&g2, &walk2, r2, target_pos, &path)?;
    for (piece_verts, piece_walk) in pieces {
        let piece_poly = Polygon::new(
            piece_walk
                .iter()
                .map(|&v| {
                    if let Some(p) = path_pts.get(&v) {
                        p.clone()
                    } else {
                        let pos = walk2.iter().position(|&x| x == v).unwrap();
                        poly2.pts[pos].clone()
                    }
                })
                .collect(),
        );
        let (sub, map) = induced_subgraph(&g2, &piece_verts, &piece_walk)
            .map_err(|e| FillError::Defect(format!("piece extraction failed: {e}")))?;
        for (v, p) in fill_rec(&sub, &piece_poly, depth + 1)? {
            placements.push((map[v as usize], p));
        }
    }
    // The dummy never leaves this level.
    if let Some(d) = dummy {
        placements.retain(|&(v, _)| v != d);
        for p in &mut placements {
            debug_assert!(p.0 != d);
        }
    }
    let _ = m2;
    Ok(placements)
}

enum Hit {
    Vertex(usize),
    Edge(usize, Point),
}

fn param_on_ray(origin: &Point, dir: &crate::geometry::point::Vec2, p: &Point) -> Rat {
    // dir is nonzero; use the dominant coordinate.
    if !dir.x.is_zero() {
        (&p.x - &origin.x) / &dir.x
    } else {
        (&p.y - &origin.y) / &dir.y
    }
}

fn clip_param_interval(
    origin: &Point,
    dir: &crate::geometry::point::Vec2,
    h: &HalfPlane,
    lo: &mut Rat,
    hi: &mut Rat,
) {
    // constraint: sense(a x + b y - c) along origin + t dir
    let at0 = h.line.eval(origin);
    let slope = &h.line.a * &dir.x + &h.line.b * &dir.y;
    let (at0, slope) = match h.sense {
        crate::geometry::line::Sense::Greater => (at0, slope),
        crate::geometry::line::Sense::Less => (-at0, -slope),
    };
    // need at0 + t * slope > 0
    if slope.is_zero() {
        if at0 <= Rat::zero() {
            *lo = Rat::one();
            *hi = Rat::zero(); // empty
        }
        return;
    }
    let bound = -at0 / &slope;
    if slope > Rat::zero() {
        if bound > *lo {
            *lo = bound;
        }
    } else if bound < *hi {
        *hi = bound;
    }
}

/// Split at a boundary chord (u, v): the region separates into the two
/// walk arcs closed by the chord.
fn split_at_chord(
    g: &PlaneGraph,
    poly: &Polygon,
    walk: &[VId],
    u: VId,
    v: VId,
    depth: usize,
) -> Result<Vec<(VId, Point)>, FillError> {
    let pa = walk.iter().position(|&x| x == u).unwrap();
    let pb = walk.iter().position(|&x| x == v).unwrap();
    let (pa, pb) = if pa < pb { (pa, pb) } else { (pb, pa) };
    let m = walk.len();
    let walk1: Vec<VId> = (pa..=pb).map(|t| walk[t]).collect();
    let mut walk2: Vec<VId> = (pb..m).map(|t| walk[t]).collect();
    walk2.extend((0..=pa).map(|t| walk[t]));
    let blocked: HashSet<(VId, VId)> = walk_edges(walk)
        .chain(std::iter::once(norm_edge(walk[pa], walk[pb])))
        .collect();
    let faces = g.faces();
    let seed1 = faces.face_of_dart(walk[pa], walk[pb]);
    let seed2 = faces.face_of_dart(walk[pb], walk[pa]);
    let regions = flood_regions(g, &blocked, &[seed1, seed2])?;
    let mut placements = Vec::new();
    for (region_faces, piece_walk) in regions.into_iter().zip([walk1, walk2]) {
        let verts = region_vertex_set(g, &faces, &region_faces, &piece_walk);
        let piece_poly = Polygon::new(
            piece_walk
                .iter()
                .map(|&x| poly.pts[walk.iter().position(|&y| y == x).unwrap()].clone())
                .collect(),
        );
        let (sub, map) = induced_subgraph(g, &verts, &piece_walk)
            .map_err(|e| FillError::Defect(format!("chord piece extraction failed: {e}")))?;
        for (x, p) in fill_rec(&sub, &piece_poly, depth + 1)? {
            placements.push((map[x as usize], p));
        }
    }
    Ok(placements)
}

fn walk_edges(walk: &[VId]) -> impl Iterator<Item = (VId, VId)> + '_ {
    let l = walk.len();
    (0..l).map(move |t| norm_edge(walk[t], walk[(t + 1) % l]))
}

/// Subdivide the boundary edge at walk position `e` with a dummy vertex; the
/// incident inner triangle is re-triangulated through its tip.
fn subdivide_boundary_edge(
    g: &PlaneGraph,
    walk: &[VId],
    e: usize,
) -> Result<(PlaneGraph, VId), FillError> {
    let m = walk.len();
    let (bs, bt) = (walk[e], walk[(e + 1) % m]);
    // inner triangle tip at this boundary edge
    let (_, y0) = g.next_dart(bt, bs);
    let (back, y1) = g.next_dart(bs, y0);
    if back != y0 || y1 != bt {
        return Err(FillError::Defect("boundary edge has no inner triangle".into()));
    }
    let y = y0;
    let mut ids = g.ids().to_vec();
    let mut rot = g.rotations().to_vec();
    let did = {
        let mut n = 0usize;
        loop {
            let cand = format!("~cut{n}");
            if !ids.contains(&cand) {
                break cand;
            }
            n += 1;
        }
    };
    let d = ids.len() as VId;
    ids.push(did);
    rot.push(vec![bs, bt, y]);
    // replace the neighbors across the subdivided edge
    for x in rot[bs as usize].iter_mut() {
        if *x == bt {
            *x = d;
        }
    }
    for x in rot[bt as usize].iter_mut() {
        if *x == bs {
            *x = d;
        }
    }
    // insert d after bs at the tip
    let pos = rot[y as usize]
        .iter()
        .position(|&x| x == bs)
        .ok_or_else(|| FillError::Defect("tip missing subdivided endpoint".into()))?;
    rot[y as usize].insert(pos + 1, d);
    let mut outer = walk.to_vec();
    outer.insert(e + 1, d);
    let g2 = PlaneGraph::checked(ids, rot, outer)
        .map_err(|e| FillError::Defect(format!("subdivision broke the graph: {e}")))?;
    Ok((g2, d))
}

/// Shortest interior path between two boundary vertices; shortest paths are
/// chordless.
fn interior_path(
    g: &PlaneGraph,
    from: VId,
    to: VId,
    boundary: &HashSet<VId>,
) -> Option<Vec<VId>> {
    let mut pred: HashMap<VId, VId> = HashMap::new();
    let mut queue = VecDeque::from([from]);
    pred.insert(from, from);
    while let Some(x) = queue.pop_front() {
        for &y in g.rotation(x) {
            if pred.contains_key(&y) {
                continue;
            }
            if y == to {
                if x == from {
                    continue; // a direct boundary edge is not a cut path
                }
                pred.insert(y, x);
                let mut path = vec![to];
                let mut cur = to;
                while cur != from {
                    cur = pred[&cur];
                    path.push(cur);
                }
                path.reverse();
                return Some(path);
            }
            if boundary.contains(&y) {
                continue;
            }
            pred.insert(y, x);
            queue.push_back(y);
        }
    }
    None
}

/// Split the region along a placed interior path from walk position `r` to
/// walk position `s`. Returns both pieces as (vertex set, boundary walk).
fn split_along_path(
    g: &PlaneGraph,
    walk: &[VId],
    r: usize,
    s: usize,
    path: &[VId],
) -> Result<Vec<(Vec<VId>, Vec<VId>)>, FillError> {
    let m = walk.len();
    // piece 1: walk r..s plus the path reversed; piece 2: walk s..r plus path
    let arc = |from: usize, to: usize| -> Vec<VId> {
        let mut out = Vec::new();
        let mut t = from;
        loop {
            out.push(walk[t]);
            if t == to {
                break;
            }
            t = (t + 1) % m;
        }
        out
    };
    let internals: Vec<VId> = path[1..path.len() - 1].to_vec();
    let mut walk1 = arc(r, s);
    walk1.extend(internals.iter().rev());
    let mut walk2 = arc(s, r);
    walk2.extend(internals.iter());

    let blocked: HashSet<(VId, VId)> = walk_edges(walk)
        .chain((0..path.len() - 1).map(|t| norm_edge(path[t], path[t + 1])))
        .collect();
    let faces = g.faces();
    // Seeds: inner faces at the first boundary edge of each arc.
    let seed1 = faces.face_of_dart(walk[(r + 1) % m], walk[r]);
    let seed2 = faces.face_of_dart(walk[(s + 1) % m], walk[s]);
    let regions = flood_regions(g, &blocked, &[seed1, seed2])?;
    let mut out = Vec::new();
    for (region_faces, piece_walk) in regions.into_iter().zip([walk1, walk2]) {
        let verts = region_vertex_set(g, &faces, &region_faces, &piece_walk);
        out.push((verts, piece_walk));
    }
    Ok(out)
}

/// Flood inner faces from the seeds without crossing blocked edges; the
/// floods must be disjoint and cover every inner face.
fn flood_regions(
    g: &PlaneGraph,
    blocked: &HashSet<(VId, VId)>,
    seeds: &[usize; 2],
) -> Result<[Vec<usize>; 2], FillError> {
    let faces = g.faces();
    let mut owner: Vec<Option<u8>> = vec![None; faces.walks.len()];
    let mut out: [Vec<usize>; 2] = [Vec::new(), Vec::new()];
    for (side, &seed) in seeds.iter().enumerate() {
        if seed == faces.outer {
            return Err(FillError::Defect("region seed is the outer face".into()));
        }
        if owner[seed].is_some() {
            return Err(FillError::Defect("region seeds collide".into()));
        }
        owner[seed] = Some(side as u8);
        let mut queue = VecDeque::from([seed]);
        out[side].push(seed);
        while let Some(f) = queue.pop_front() {
            let w = &faces.walks[f];
            for t in 0..w.len() {
                let (u, v) = (w[t], w[(t + 1) % w.len()]);
                if blocked.contains(&norm_edge(u, v)) {
                    continue;
                }
                let f2 = faces.face_of_dart(v, u);
                if f2 == faces.outer {
                    return Err(FillError::Defect("region leaked to the outer face".into()));
                }
                if owner[f2].is_none() {
                    owner[f2] = Some(side as u8);
                    out[side as usize].push(f2);
                    queue.push_back(f2);
                } else if owner[f2] != Some(side as u8) {
                    return Err(FillError::Defect("cut does not separate the region".into()));
                }
            }
        }
    }
    for (f, o) in owner.iter().enumerate() {
        if f != faces.outer && o.is_none() {
            return Err(FillError::Defect("cut leaves an unreached face".into()));
        }
    }
    Ok(out)
}

fn region_vertex_set(
    g: &PlaneGraph,
    faces: &crate::plane_graph::Faces,
    region_faces: &[usize],
    piece_walk: &[VId],
) -> Vec<VId> {
    let mut seen: HashSet<VId> = piece_walk.iter().copied().collect();
    let mut verts: Vec<VId> = piece_walk.to_vec();
    for &f in region_faces {
        for &v in &faces.walks[f] {
            if seen.insert(v) {
                verts.push(v);
            }
        }
    }
    let _ = g;
    verts
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::point::pt;
    use crate::plane_graph::plane_graph_from_drawing;

    fn task_from_drawing(
        ids: Vec<String>,
        adj: &[(usize, usize)],
        coords: &[Point],
        polygon_of: &[usize],
    ) -> FillTask {
        let g = plane_graph_from_drawing(ids, adj, coords).unwrap();
        let poly = Polygon::new(
            g.outer_face().iter().map(|&v| coords[v as usize].clone()).collect(),
        );
        let _ = polygon_of;
        FillTask::new(g, poly).unwrap()
    }

    #[test]
    fn triangle_with_center() {
        let coords = [pt(0, 0), pt(8, 0), pt(4, 7), pt(4, 2)];
        let t = task_from_drawing(
            (0..4).map(|i| format!("v{i}")).collect(),
            &[(0, 1), (1, 2), (2, 0), (0, 3), (1, 3), (2, 3)],
            &coords,
            &[],
        );
        let d = draw_in_star_polygon(&t).unwrap();
        // interior vertex strictly inside
        let v3 = t.h.resolve("v3").unwrap();
        assert!(t.polygon.convex_contains_strict(d.get(v3)));
    }

    #[test]
    fn wheel_hub_inside_square() {
        // W4: square boundary + hub adjacent to all corners.
        let coords = [pt(0, 2), pt(2, 2), pt(2, 0), pt(0, 0), pt(1, 1)];
        let t = task_from_drawing(
            (0..5).map(|i| format!("v{i}")).collect(),
            &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (1, 4), (2, 4), (3, 4)],
            &coords,
            &[],
        );
        let d = draw_in_star_polygon(&t).unwrap();
        let hub = t.h.resolve("v4").unwrap();
        assert!(t.polygon.convex_contains_strict(d.get(hub)));
    }

    #[test]
    fn l_shaped_star_polygon_fill() {
        // L-shaped hexagon with three interior vertices forming a fan that
        // needs the reflex cut.
        let coords = [
            pt(0, 0),
            pt(0, 6),
            pt(3, 6),
            pt(3, 3),
            pt(6, 3),
            pt(6, 0),
            // interior
            pt(1, 3),
            pt(2, 2),
            pt(3, 1),
        ];
        let ids: Vec<String> = (0..9).map(|i| format!("v{i}")).collect();
        let adj = [
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 5),
            (5, 0),
            // interior fan
            (0, 6),
            (1, 6),
            (2, 6),
            (2, 7),
            (3, 7),
            (6, 7),
            (0, 7),
            (0, 8),
            (7, 8),
            (3, 8),
            (4, 8),
            (5, 8),
        ];
        let t = task_from_drawing(ids, &adj, &coords, &[]);
        let d = draw_in_star_polygon(&t).unwrap();
        for v in 6..9 {
            let p = d.get(v);
            // strictly inside the L: reuse the kernel half-planes of each
            // edge? Containment is already enforced by the verifier through
            // non-crossing with the boundary; just sanity-check y-range.
            assert!(p.x > Rat::zero() && p.y > Rat::zero());
        }
    }

    #[test]
    fn chordless_violation_detected() {
        // square boundary with a chord between opposite corners
        let coords = [pt(0, 2), pt(2, 2), pt(2, 0), pt(0, 0)];
        let g = plane_graph_from_drawing(
            (0..4).map(|i| format!("v{i}")).collect(),
            &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)],
            &coords,
        )
        .unwrap();
        let poly = Polygon::new(
            g.outer_face().iter().map(|&v| coords[v as usize].clone()).collect(),
        );
        assert!(matches!(FillTask::new(g, poly), Err(FillError::BoundaryChord(_, _))));
    }

    #[test]
    fn convex_region_with_chord() {
        // C4 with one inside chord and no interior vertices.
        let coords = [pt(0, 2), pt(2, 2), pt(2, 0), pt(0, 0)];
        let g = plane_graph_from_drawing(
            (0..4).map(|i| format!("v{i}")).collect(),
            &[(0, 1), (1, 2), (2, 3), (3, 0), (1, 3)],
            &coords,
        )
        .unwrap();
        let poly = Polygon::new(
            g.outer_face().iter().map(|&v| coords[v as usize].clone()).collect(),
        );
        let d = fill_convex_region(&g, &poly).unwrap();
        assert_eq!(d.coords.len(), 4);
    }

    #[test]
    fn convex_region_with_chords_and_interior() {
        // C6 with three non-crossing chords and a vertex inside the middle
        // triangle they form.
        let coords = [
            pt(0, 0),
            pt(0, 4),
            pt(3, 6),
            pt(6, 4),
            pt(6, 0),
            pt(3, -2),
            pt(3, 2),
        ];
        let ids: Vec<String> = (0..7).map(|i| format!("v{i}")).collect();
        let adj = [
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 5),
            (5, 0),
            (1, 3),
            (3, 5),
            (5, 1),
            (1, 6),
            (3, 6),
            (5, 6),
        ];
        let g = plane_graph_from_drawing(ids, &adj, &coords).unwrap();
        let poly = Polygon::new(
            g.outer_face().iter().map(|&v| coords[v as usize].clone()).collect(),
        );
        let d = fill_convex_region(&g, &poly).unwrap();
        let v6 = g.resolve("v6").unwrap();
        assert!(poly.convex_contains_strict(d.get(v6)));
    }
}
