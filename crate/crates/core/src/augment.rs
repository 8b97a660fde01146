//! Completing a plane graph to a maximal one in which the given cycle is
//! strictly internal and outerchordless, adding only trivial petals, and
//! undoing the completion on drawings.
//!
//! The construction follows four passes: triangulate inside the cycle, put a
//! new trivial petal on every cycle edge whose outside face is not already an
//! inner triangle, triangulate the remaining inner faces (helper vertices at
//! cycle corners so that no edge incident to the cycle is ever added), and
//! finally shrink the outer face to a cycle-free triangle, adding one guard
//! vertex if a cycle vertex still touches it.

use crate::petals::{enumerate, PetalSet};
use crate::plane_graph::{
    is_maximal, is_strictly_internal, norm_edge, outer_chords, side_map, CycleRef, PlaneGraph,
    Side, VId,
};
use crate::verify::Drawing;
use std::collections::{HashMap, HashSet};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum AugmentError {
    #[error("cycle has outer chords")]
    OuterChord,
    #[error("invalid input graph: {0}")]
    Invalid(String),
    #[error("augmentation defect: {0}")]
    Defect(String),
    #[error("drawing does not cover the augmented graph")]
    IncompleteDrawing,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    /// Trivial petal placed on a cycle edge.
    EdgePetal,
    /// Helper vertex splitting a face.
    FaceFill,
    /// Chord added while triangulating.
    Triangulation,
    /// Final vertex making the cycle strictly internal.
    OuterGuard,
}

pub struct Augmentation {
    pub g_prime: PlaneGraph,
    /// Vertices `0..original_vertices` of `g_prime` are the input vertices,
    /// with unchanged ids and indices.
    pub original_vertices: usize,
    pub added_vertices: Vec<(VId, Provenance)>,
    pub added_edges: Vec<((VId, VId), Provenance)>,
}

impl Augmentation {
    pub fn is_identity(&self) -> bool {
        self.added_vertices.is_empty() && self.added_edges.is_empty()
    }
}

/// Restrict a drawing of the augmented graph to the original one.
pub fn restrict(a: &Augmentation, d: &Drawing) -> Result<Drawing, AugmentError> {
    if d.coords.len() != a.g_prime.num_vertices() {
        return Err(AugmentError::IncompleteDrawing);
    }
    Ok(Drawing::new(d.coords[..a.original_vertices].to_vec()))
}

struct Builder {
    ids: Vec<String>,
    rot: Vec<Vec<VId>>,
    outer: Vec<VId>,
    edges: HashSet<(VId, VId)>,
    cverts: HashSet<VId>,
    added_vertices: Vec<(VId, Provenance)>,
    added_edges: Vec<((VId, VId), Provenance)>,
    fresh: usize,
}

impl Builder {
    fn new(g: &PlaneGraph, c: &CycleRef) -> Self {
        let mut edges = HashSet::new();
        for (u, v) in g.edges() {
            edges.insert(norm_edge(u, v));
        }
        Builder {
            ids: g.ids().to_vec(),
            rot: g.rotations().to_vec(),
            outer: g.outer_face().to_vec(),
            edges,
            cverts: c.vertex_set(),
            added_vertices: Vec::new(),
            added_edges: Vec::new(),
            fresh: 0,
        }
    }

    fn has_edge(&self, u: VId, v: VId) -> bool {
        self.edges.contains(&norm_edge(u, v))
    }

    fn on_cycle(&self, v: VId) -> bool {
        self.cverts.contains(&v)
    }

    fn new_vertex(&mut self, tag: Provenance) -> VId {
        let id = loop {
            let cand = format!("~aug{}", self.fresh);
            self.fresh += 1;
            if !self.ids.contains(&cand) {
                break cand;
            }
        };
        let v = self.ids.len() as VId;
        self.ids.push(id);
        self.rot.push(Vec::new());
        self.added_vertices.push((v, tag));
        v
    }

    // Insert neighbor `nbr` into rot[v] immediately after `after`.
    fn insert_after(&mut self, v: VId, after: VId, nbr: VId) {
        let rot = &mut self.rot[v as usize];
        let pos = rot
            .iter()
            .position(|&x| x == after)
            .unwrap_or_else(|| panic!("no neighbor {after} at {v}"));
        rot.insert(pos + 1, nbr);
    }

    fn record_edge(&mut self, u: VId, v: VId, tag: Provenance) {
        self.edges.insert(norm_edge(u, v));
        self.added_edges.push((norm_edge(u, v), tag));
    }

    /// Chord between occurrences `p < q` of a facial walk (face on the left).
    /// Returns the sub-walks `[w_p..=w_q]` and `[w_q.. ++ ..=w_p]`.
    fn split_chord(
        &mut self,
        walk: &[VId],
        p: usize,
        q: usize,
        tag: Provenance,
    ) -> (Vec<VId>, Vec<VId>) {
        let l = walk.len();
        let (a, b) = (walk[p], walk[q]);
        debug_assert!(a != b && !self.has_edge(a, b));
        self.insert_after(a, walk[(p + l - 1) % l], b);
        self.insert_after(b, walk[(q + l - 1) % l], a);
        self.record_edge(a, b, tag);
        let inner: Vec<VId> = (p..=q).map(|t| walk[t]).collect();
        let mut rest: Vec<VId> = (q..l).map(|t| walk[t]).collect();
        rest.extend((0..=p).map(|t| walk[t]));
        (inner, rest)
    }

    /// Degree-2 helper vertex joining occurrences `p < q`; like a chord that
    /// is subdivided by a new vertex. Returns the two sub-walks, each ending
    /// with the helper.
    fn split_helper2(
        &mut self,
        walk: &[VId],
        p: usize,
        q: usize,
        tag: Provenance,
    ) -> (Vec<VId>, Vec<VId>, VId) {
        let l = walk.len();
        let (a, b) = (walk[p], walk[q]);
        debug_assert!(a != b);
        let s = self.new_vertex(tag);
        self.rot[s as usize] = vec![a, b];
        self.insert_after(a, walk[(p + l - 1) % l], s);
        self.insert_after(b, walk[(q + l - 1) % l], s);
        self.record_edge(a, s, tag);
        self.record_edge(b, s, tag);
        let mut inner: Vec<VId> = (p..=q).map(|t| walk[t]).collect();
        inner.push(s);
        let mut rest: Vec<VId> = (q..l).map(|t| walk[t]).collect();
        rest.extend((0..=p).map(|t| walk[t]));
        rest.push(s);
        (inner, rest, s)
    }

    /// Helper vertex adjacent to the three consecutive corners around
    /// occurrence `p`; splits off two triangles. Returns the remainder walk
    /// (the original walk with `w_p` replaced by the helper).
    fn split_helper3(&mut self, walk: &[VId], p: usize, tag: Provenance) -> (Vec<VId>, VId) {
        let l = walk.len();
        let u = walk[(p + l - 1) % l];
        let v = walk[p];
        let w = walk[(p + 1) % l];
        debug_assert!(u != v && v != w && u != w);
        let s = self.new_vertex(tag);
        self.rot[s as usize] = vec![w, v, u];
        self.insert_after(u, walk[(p + l - 2) % l], s);
        self.insert_after(v, u, s);
        self.insert_after(w, v, s);
        for x in [u, v, w] {
            self.record_edge(s, x, tag);
        }
        let mut rest: Vec<VId> = Vec::with_capacity(l);
        for (t, &x) in walk.iter().enumerate() {
            rest.push(if t == p { s } else { x });
        }
        (rest, s)
    }

    /// Star helper adjacent to every corner of a simple walk; triangulates
    /// the face completely.
    fn split_star(&mut self, walk: &[VId], tag: Provenance) -> VId {
        let l = walk.len();
        debug_assert!(is_simple_walk(walk));
        let s = self.new_vertex(tag);
        self.rot[s as usize] = walk.iter().rev().copied().collect();
        for p in 0..l {
            let v = walk[p];
            self.insert_after(v, walk[(p + l - 1) % l], s);
            self.record_edge(s, v, tag);
        }
        s
    }

    fn graph(&self) -> Result<PlaneGraph, AugmentError> {
        PlaneGraph::checked(self.ids.clone(), self.rot.clone(), self.outer.clone())
            .map_err(|e| AugmentError::Defect(format!("invalid intermediate graph: {e}")))
    }

    /// Fully triangulate a facial region given by `walk`. `restricted` bans
    /// new edges incident to cycle vertices (used outside the cycle).
    fn triangulate_region(&mut self, walk: Vec<VId>, restricted: bool) -> Result<(), AugmentError> {
        let mut stack = vec![walk];
        while let Some(w) = stack.pop() {
            if w.len() < 3 {
                return Err(AugmentError::Defect(format!("short walk {w:?}")));
            }
            if w.len() == 3 && is_simple_walk(&w) {
                continue;
            }
            if !is_simple_walk(&w) {
                let (a, b) = self.pick_repeat_split(&w, restricted)?;
                let chordable = w[a] != w[b]
                    && !self.has_edge(w[a], w[b])
                    && (!restricted || (!self.on_cycle(w[a]) && !self.on_cycle(w[b])));
                if chordable {
                    let (x, y) = self.split_chord(&w, a, b, Provenance::Triangulation);
                    stack.push(x);
                    stack.push(y);
                } else {
                    let (x, y, _) = self.split_helper2(&w, a, b, Provenance::FaceFill);
                    stack.push(x);
                    stack.push(y);
                }
                continue;
            }
            // Simple walk longer than a triangle.
            if restricted {
                if let Some(p) = w.iter().position(|&x| self.on_cycle(x)) {
                    // Shave the cycle corner with a helper vertex so no new
                    // edge touches the cycle.
                    let (rest, _) = self.split_helper3(&w, p, Provenance::FaceFill);
                    stack.push(rest);
                    continue;
                }
            }
            if let Some(p) = self.find_ear(&w, restricted) {
                let l = w.len();
                let rot = rotate_to(&w, (p + l - 1) % l);
                let (tri, rest) = self.split_chord(&rot, 0, 2, Provenance::Triangulation);
                debug_assert_eq!(tri.len(), 3);
                stack.push(rest);
                continue;
            }
            // No chordable ear: a star helper finishes the face.
            self.split_star(&w, Provenance::FaceFill);
        }
        Ok(())
    }

    // An ear corner p whose chord (w[p-1], w[p+1]) is addable.
    fn find_ear(&self, w: &[VId], restricted: bool) -> Option<usize> {
        let l = w.len();
        (0..l).find(|&p| {
            let a = w[(p + l - 1) % l];
            let b = w[(p + 1) % l];
            a != b
                && !self.has_edge(a, b)
                && (!restricted || (!self.on_cycle(a) && !self.on_cycle(b)))
        })
    }

    // A repeated-vertex split: occurrences i < j of the same vertex yield the
    // cut pair (successor_i, successor_j) or (predecessor_i, predecessor_j).
    fn pick_repeat_split(
        &self,
        w: &[VId],
        restricted: bool,
    ) -> Result<(usize, usize), AugmentError> {
        let l = w.len();
        let mut first: HashMap<VId, usize> = HashMap::new();
        let mut candidates: Vec<(usize, usize)> = Vec::new();
        for (t, &x) in w.iter().enumerate() {
            if let Some(&f) = first.get(&x) {
                candidates.push((f, t));
            } else {
                first.insert(x, t);
            }
        }
        // Prefer chordable pairs; helpers adjacent to two cycle vertices
        // would create a petal, so such pairs are rejected outright.
        let mut fallback = None;
        for &(i, j) in &candidates {
            for (mut a, mut b) in [((i + 1) % l, (j + 1) % l), ((i + l - 1) % l, (j + l - 1) % l)]
            {
                if a > b {
                    std::mem::swap(&mut a, &mut b);
                }
                let (x, y) = (w[a], w[b]);
                if x == y {
                    continue;
                }
                if restricted && self.on_cycle(x) && self.on_cycle(y) {
                    continue;
                }
                if !self.has_edge(x, y) && (!restricted || (!self.on_cycle(x) && !self.on_cycle(y)))
                {
                    return Ok((a, b));
                }
                fallback.get_or_insert((a, b));
            }
        }
        fallback.ok_or_else(|| AugmentError::Defect("unresolvable non-simple face".into()))
    }
}

fn is_simple_walk(w: &[VId]) -> bool {
    let set: HashSet<VId> = w.iter().copied().collect();
    set.len() == w.len()
}

/// Triangulate only the faces inside `c`, leaving everything else untouched.
/// Used when a region bounded by a cycle must become internally triangulated
/// before filling.
pub fn triangulate_inside(g: &PlaneGraph, c: &CycleRef) -> Result<Augmentation, AugmentError> {
    let sm = side_map(g, c).map_err(|e| AugmentError::Invalid(e.to_string()))?;
    let original_vertices = g.num_vertices();
    let mut b = Builder::new(g, c);
    let inside: Vec<Vec<VId>> = sm
        .faces
        .walks
        .iter()
        .enumerate()
        .filter(|&(f, _)| sm.face_side[f] == Side::Inside)
        .map(|(_, w)| w.clone())
        .collect();
    for w in inside {
        b.triangulate_region(w, false)?;
    }
    let g_prime = b.graph()?;
    Ok(Augmentation {
        g_prime,
        original_vertices,
        added_vertices: b.added_vertices,
        added_edges: b.added_edges,
    })
}

/// Complete `g` to a maximal plane graph in which `c` is strictly internal
/// and outerchordless; all new petals are trivial.
pub fn augment(g: &PlaneGraph, c: &CycleRef) -> Result<Augmentation, AugmentError> {
    let sm = side_map(g, c).map_err(|e| AugmentError::Invalid(e.to_string()))?;
    if !outer_chords(g, c, &sm).is_empty() {
        return Err(AugmentError::OuterChord);
    }
    let original_vertices = g.num_vertices();
    let mut b = Builder::new(g, c);

    // Pass 1: triangulate inside the cycle (chords may touch the cycle).
    {
        let inside: Vec<Vec<VId>> = sm
            .faces
            .walks
            .iter()
            .enumerate()
            .filter(|&(f, _)| sm.face_side[f] == Side::Inside)
            .map(|(_, w)| w.clone())
            .collect();
        for w in inside {
            b.triangulate_region(w, false)?;
        }
    }

    // Pass 2: a trivial petal on every cycle edge whose outside face is not
    // an inner triangle yet.
    {
        let cur = b.graph()?;
        let faces = cur.faces();
        let k = c.len();
        let mut by_face: HashMap<usize, Vec<(VId, VId)>> = HashMap::new();
        for t in 0..k {
            let (u, v) = (c.verts[t], c.verts[(t + 1) % k]);
            let f = faces.face_of_dart(u, v);
            if faces.walks[f].len() == 3 && f != faces.outer {
                continue;
            }
            by_face.entry(f).or_default().push((u, v));
        }
        let mut by_face: Vec<(usize, Vec<(VId, VId)>)> = by_face.into_iter().collect();
        by_face.sort_by_key(|&(f, _)| f);
        for (f, darts) in by_face {
            let mut walk = faces.walks[f].clone();
            let is_outer = f == faces.outer;
            for (u, v) in darts {
                let p = find_dart(&walk, u, v).ok_or_else(|| {
                    AugmentError::Defect("cycle dart lost during petal pass".into())
                })?;
                let rot = rotate_to(&walk, p);
                let (tri, rest, _) = b.split_helper2(&rot, 0, 1, Provenance::EdgePetal);
                debug_assert_eq!(tri.len(), 3);
                walk = rest;
            }
            if is_outer {
                b.outer = walk;
            } else {
                b.triangulate_region(walk, true)?;
            }
        }
    }

    // Pass 3: triangulate every remaining inner face, never touching the
    // cycle with a new edge.
    {
        let cur = b.graph()?;
        let faces = cur.faces();
        for (f, w) in faces.walks.iter().enumerate() {
            if f == faces.outer || (w.len() == 3 && is_simple_walk(w)) {
                continue;
            }
            b.triangulate_region(w.clone(), true)?;
        }
    }

    // Pass 4: shrink the outer face to a triangle free of cycle vertices.
    loop {
        let cur = b.graph()?;
        let faces = cur.faces();
        if faces.outer == usize::MAX {
            return Err(AugmentError::Defect("outer walk is not a face".into()));
        }
        let walk = faces.walks[faces.outer].clone();
        if walk.len() == 3 && is_simple_walk(&walk) {
            let on_c: Vec<usize> = (0..3).filter(|&t| b.on_cycle(walk[t])).collect();
            match on_c.len() {
                0 => break,
                1 => {
                    let s = b.split_star(&walk, Provenance::OuterGuard);
                    let t = (on_c[0] + 1) % 3;
                    b.outer = vec![walk[t], walk[(t + 1) % 3], s];
                    break;
                }
                _ => {
                    return Err(AugmentError::Defect(
                        "two cycle vertices on the final outer triangle".into(),
                    ))
                }
            }
        }
        if !is_simple_walk(&walk) {
            let (a, bq) = b.pick_repeat_split(&walk, true)?;
            let chordable = walk[a] != walk[bq]
                && !b.has_edge(walk[a], walk[bq])
                && !b.on_cycle(walk[a])
                && !b.on_cycle(walk[bq]);
            let (inner, rest) = if chordable {
                b.split_chord(&walk, a, bq, Provenance::Triangulation)
            } else {
                let (x, y, _) = b.split_helper2(&walk, a, bq, Provenance::FaceFill);
                (x, y)
            };
            // Keep as the outer face the part with fewer cycle vertices.
            let count = |w: &[VId]| w.iter().filter(|&&x| b.on_cycle(x)).count();
            let (keep, tri) =
                if count(&inner) <= count(&rest) { (inner, rest) } else { (rest, inner) };
            b.outer = keep;
            b.triangulate_region(tri, true)?;
            continue;
        }
        // Simple outer walk longer than a triangle: cut an ear avoiding the
        // cycle, with a helper-vertex fallback when the chord exists already.
        let l = walk.len();
        let ear = (0..l).find(|&p| {
            let a = walk[(p + l - 1) % l];
            let bb = walk[(p + 1) % l];
            a != bb && !b.has_edge(a, bb) && !b.on_cycle(a) && !b.on_cycle(bb)
        });
        if let Some(p) = ear {
            let rot = rotate_to(&walk, (p + l - 1) % l);
            let (tri, rest) = b.split_chord(&rot, 0, 2, Provenance::Triangulation);
            debug_assert_eq!(tri.len(), 3);
            b.outer = rest;
            continue;
        }
        let p = (0..l)
            .find(|&p| {
                let a = walk[(p + l - 1) % l];
                let bb = walk[(p + 1) % l];
                a != bb && !b.on_cycle(a) && !b.on_cycle(bb)
            })
            .ok_or_else(|| AugmentError::Defect("outer walk has no usable ear".into()))?;
        let rot = rotate_to(&walk, (p + l - 1) % l);
        let (inner, rest, _) = b.split_helper2(&rot, 0, 2, Provenance::FaceFill);
        b.outer = rest;
        b.triangulate_region(inner, true)?;
    }

    let g_prime = b.graph()?;
    let aug = Augmentation {
        g_prime,
        original_vertices,
        added_vertices: b.added_vertices,
        added_edges: b.added_edges,
    };
    verify_properties(g, c, &aug)?;
    Ok(aug)
}

/// Re-verify the construction properties programmatically.
fn verify_properties(g: &PlaneGraph, c: &CycleRef, a: &Augmentation) -> Result<(), AugmentError> {
    let gp = &a.g_prime;
    let cp = CycleRef::new(gp, c.verts.clone())
        .map_err(|e| AugmentError::Defect(format!("cycle lost: {e}")))?;
    if !is_maximal(gp) {
        return Err(AugmentError::Defect("result not maximal".into()));
    }
    let smp = side_map(gp, &cp).map_err(|e| AugmentError::Defect(e.to_string()))?;
    if !outer_chords(gp, &cp, &smp).is_empty() {
        return Err(AugmentError::Defect("outer chord created".into()));
    }
    if !is_strictly_internal(gp, &cp) {
        return Err(AugmentError::Defect("cycle not strictly internal".into()));
    }
    let sm = side_map(g, c).map_err(|e| AugmentError::Defect(e.to_string()))?;
    let before: PetalSet = enumerate(g, c, &sm).map_err(|e| AugmentError::Defect(e.to_string()))?;
    let after: PetalSet =
        enumerate(gp, &cp, &smp).map_err(|e| AugmentError::Defect(e.to_string()))?;
    let old: HashMap<VId, &crate::petals::Petal> =
        before.petals.iter().map(|p| (p.w, p)).collect();
    for p in &after.petals {
        if (p.w as usize) >= a.original_vertices {
            if !p.trivial {
                return Err(AugmentError::Defect(format!(
                    "added petal {} is not trivial",
                    gp.id(p.w)
                )));
            }
        } else if !p.trivial {
            match old.get(&p.w) {
                Some(q) if q.neighbors == p.neighbors => {}
                _ => {
                    return Err(AugmentError::Defect(format!(
                        "petal {} changed neighbors",
                        gp.id(p.w)
                    )))
                }
            }
        }
    }
    Ok(())
}

fn find_dart(walk: &[VId], u: VId, v: VId) -> Option<usize> {
    let l = walk.len();
    (0..l).find(|&t| walk[t] == u && walk[(t + 1) % l] == v)
}

fn rotate_to(walk: &[VId], p: usize) -> Vec<VId> {
    let l = walk.len();
    (0..l).map(|t| walk[(p + t) % l]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::octahedron;
    use crate::geometry::point::pt;
    use crate::plane_graph::plane_graph_from_drawing;

    fn c3_alone() -> (PlaneGraph, CycleRef) {
        let g = plane_graph_from_drawing(
            (0..3).map(|i| format!("v{i}")).collect(),
            &[(0, 1), (1, 2), (2, 0)],
            &[pt(0, 0), pt(4, 0), pt(2, 3)],
        )
        .unwrap();
        // clockwise: v0 (0,0) -> v2 (2,3) -> v1 (4,0)
        let c = CycleRef::new(&g, vec![0, 2, 1]).unwrap();
        (g, c)
    }

    #[test]
    fn c3_alone_augments_to_maximal() {
        let (g, c) = c3_alone();
        let a = augment(&g, &c).unwrap();
        let gp = &a.g_prime;
        let v = gp.num_vertices() as i64;
        assert_eq!(gp.num_edges() as i64, 3 * v - 6);
        assert_eq!(
            a.added_vertices
                .iter()
                .filter(|&&(_, p)| p == Provenance::EdgePetal)
                .count(),
            3
        );
    }

    #[test]
    fn octahedron_is_fixed_point() {
        let g = octahedron();
        let (a, b_, c) =
            (g.resolve("a").unwrap(), g.resolve("b").unwrap(), g.resolve("c").unwrap());
        let cyc = CycleRef::new(&g, vec![a, c, b_]).unwrap();
        let aug = augment(&g, &cyc).unwrap();
        assert!(aug.is_identity());
        assert_eq!(aug.g_prime.num_vertices(), 6);
    }

    #[test]
    fn c4_with_inner_chord() {
        let ids: Vec<String> = (0..4).map(|i| format!("v{i}")).collect();
        let coords = [pt(0, 2), pt(2, 2), pt(2, 0), pt(0, 0)];
        let g =
            plane_graph_from_drawing(ids, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)], &coords)
                .unwrap();
        let c = CycleRef::new(&g, vec![0, 1, 2, 3]).unwrap();
        let a = augment(&g, &c).unwrap();
        let gp = &a.g_prime;
        let v = gp.num_vertices() as i64;
        assert_eq!(gp.num_edges() as i64, 3 * v - 6);
        let cp = CycleRef::new(gp, c.verts.clone()).unwrap();
        assert!(is_strictly_internal(gp, &cp));
    }

    #[test]
    fn wheel_rim_augments() {
        let g = crate::fixtures::wheel(5);
        let rim: Vec<VId> = (0..5)
            .rev()
            .map(|i| g.resolve(&format!("r{i}")).unwrap())
            .collect();
        let c = CycleRef::new(&g, rim).unwrap();
        let a = augment(&g, &c).unwrap();
        assert!(is_maximal(&a.g_prime));
    }

    #[test]
    fn outer_chord_rejected() {
        let ids: Vec<String> = (0..4).map(|i| format!("v{i}")).collect();
        let coords = [pt(0, 0), pt(4, 0), pt(4, 4), pt(0, 4)];
        let g = plane_graph_from_drawing(
            ids.clone(),
            &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)],
            &coords,
        )
        .unwrap();
        let faces = g.faces();
        let tri = faces.face_of_dart(0, 2);
        let g2 =
            PlaneGraph::checked(ids, g.rotations().to_vec(), faces.walks[tri].clone()).unwrap();
        for verts in [vec![0, 1, 2, 3], vec![0, 3, 2, 1]] {
            let c = CycleRef::new(&g2, verts).unwrap();
            let sm = side_map(&g2, &c).unwrap();
            if crate::plane_graph::validate_cycle_clockwise(&g2, &c, &sm).is_ok() {
                assert!(matches!(augment(&g2, &c), Err(AugmentError::OuterChord)));
            }
        }
    }
}
