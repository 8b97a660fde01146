//! Deciding and constructing drawing extensions: the necessary-condition
//! check, the one-sided and general convex constructions, the free-outer-face
//! variant and the predrawn-subgraph reduction.

mod convex;
mod one_sided;
mod outer;

pub use convex::{extend_convex, CaseTag};
pub use one_sided::extend_one_sided;
pub use outer::{extend_free_outer, extend_subgraph};

use crate::augment::AugmentError;
use crate::geometry::feasibility::Feasibility;
use crate::geometry::line::HalfPlane;
use crate::geometry::point::Point;
use crate::geometry::polygon::{Polygon, PolygonError};
use crate::petals::{enumerate, is_realizable, realizable_oracle, PetalError};
use crate::plane_graph::{
    norm_edge, outer_chords, side_map, validate_cycle_clockwise, CycleRef, Faces, GraphError,
    PlaneGraph, SideMap, VId,
};
use crate::star_drawer::{draw_in_star_polygon, FillError, FillTask};
use crate::verify::{verify, Drawing, VerifyOptions};
use std::collections::{HashMap, HashSet, VecDeque};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ExtendError {
    #[error("invalid input: {0}")]
    Input(String),
    #[error("necessary conditions violated: {0} outer chord(s), {1} unrealizable petal(s)")]
    Conditions(usize, usize),
    #[error("internal defect: {0}")]
    Defect(String),
}

impl From<GraphError> for ExtendError {
    fn from(e: GraphError) -> Self {
        ExtendError::Input(e.to_string())
    }
}

impl From<AugmentError> for ExtendError {
    fn from(e: AugmentError) -> Self {
        match e {
            AugmentError::OuterChord | AugmentError::Invalid(_) => {
                ExtendError::Input(e.to_string())
            }
            other => ExtendError::Defect(other.to_string()),
        }
    }
}

impl From<PetalError> for ExtendError {
    fn from(e: PetalError) -> Self {
        ExtendError::Defect(e.to_string())
    }
}

impl From<FillError> for ExtendError {
    fn from(e: FillError) -> Self {
        ExtendError::Defect(e.to_string())
    }
}

/// A plane graph, a clockwise cycle reference, and an exact convex clockwise
/// polygon prescribing the cycle's drawing (`polygon.pts[t]` places
/// `c.verts[t]`).
pub struct Instance {
    pub g: PlaneGraph,
    pub c: CycleRef,
    pub polygon: Polygon,
}

impl Instance {
    pub fn new(g: PlaneGraph, c: CycleRef, polygon: Polygon) -> Result<Self, ExtendError> {
        let inst = Instance { g, c, polygon };
        inst.validate()?;
        Ok(inst)
    }

    pub fn validate(&self) -> Result<SideMap, ExtendError> {
        let rep = self.g.validate();
        if !rep.is_valid() {
            return Err(ExtendError::Input(rep.violations.join("; ")));
        }
        if self.polygon.len() != self.c.len() {
            return Err(ExtendError::Input("polygon size differs from cycle length".into()));
        }
        self.polygon.validate_convex_clockwise().map_err(|e| match e {
            PolygonError::FlatVertex(_) => ExtendError::Input("flat vertex unsupported".into()),
            other => ExtendError::Input(other.to_string()),
        })?;
        let sm = side_map(&self.g, &self.c)?;
        validate_cycle_clockwise(&self.g, &self.c, &sm)?;
        Ok(sm)
    }

    /// Prescribed coordinates: cycle vertex to polygon point.
    pub fn fixed_coords(&self) -> HashMap<VId, Point> {
        self.c
            .verts
            .iter()
            .enumerate()
            .map(|(t, &v)| (v, self.polygon.pts[t].clone()))
            .collect()
    }
}

/// An unrealizable petal with its infeasibility certificate: at most three
/// base edges whose open beyond half-planes have empty intersection.
#[derive(Clone, Debug)]
pub struct PetalViolation {
    pub w: String,
    /// Cycle positions of the base extremes.
    pub base: (usize, usize),
    /// Base edge offsets (from the base start) forming the certificate.
    pub certificate_edges: Vec<usize>,
    pub certificate: Vec<HalfPlane>,
}

#[derive(Debug, Default)]
pub struct ConditionReport {
    pub outer_chords: Vec<(String, String)>,
    pub unrealizable_petals: Vec<PetalViolation>,
}

impl ConditionReport {
    pub fn ok(&self) -> bool {
        self.outer_chords.is_empty() && self.unrealizable_petals.is_empty()
    }

    pub fn to_error(&self) -> ExtendError {
        ExtendError::Conditions(self.outer_chords.len(), self.unrealizable_petals.len())
    }
}

/// Test the two necessary conditions: no outer chords, every petal
/// realizable. Violations carry certificates.
pub fn check(inst: &Instance) -> Result<ConditionReport, ExtendError> {
    let sm = inst.validate()?;
    let mut report = ConditionReport::default();
    for (u, v) in outer_chords(&inst.g, &inst.c, &sm) {
        report.outer_chords.push((inst.g.id(u).to_string(), inst.g.id(v).to_string()));
    }
    let set = enumerate(&inst.g, &inst.c, &sm)?;
    for p in &set.petals {
        if is_realizable(&inst.polygon, p) {
            continue;
        }
        match realizable_oracle(&inst.polygon, p) {
            Feasibility::Witness(_) => {
                return Err(ExtendError::Defect(format!(
                    "realizability test and oracle disagree on petal {}",
                    inst.g.id(p.w)
                )))
            }
            Feasibility::Infeasible(cert) => {
                let hs = crate::petals::base_beyond_halfplanes(&inst.polygon, p);
                report.unrealizable_petals.push(PetalViolation {
                    w: inst.g.id(p.w).to_string(),
                    base: (p.i, p.j),
                    certificate: cert.iter().map(|&i| hs[i].clone()).collect(),
                    certificate_edges: cert,
                });
            }
        }
    }
    Ok(report)
}

// ---------------------------------------------------------------------------
// shared machinery for the constructions

/// The outer facial walk of the plane subgraph given by `sub_edges`, found by
/// flooding from the host's outer face and tracing the first subgraph dart on
/// the region boundary.
pub(crate) fn subgraph_outer_walk(
    g: &PlaneGraph,
    faces: &Faces,
    sub_edges: &HashSet<(VId, VId)>,
) -> Result<Vec<VId>, ExtendError> {
    let nf = faces.walks.len();
    let mut region = vec![false; nf];
    region[faces.outer] = true;
    let mut queue = VecDeque::from([faces.outer]);
    let mut boundary_dart: Option<(VId, VId)> = None;
    while let Some(f) = queue.pop_front() {
        let w = &faces.walks[f];
        for t in 0..w.len() {
            let (u, v) = (w[t], w[(t + 1) % w.len()]);
            if sub_edges.contains(&norm_edge(u, v)) {
                boundary_dart.get_or_insert((u, v));
                continue;
            }
            let f2 = faces.face_of_dart(v, u);
            if !region[f2] {
                region[f2] = true;
                queue.push_back(f2);
            }
        }
    }
    let (u0, v0) = boundary_dart
        .ok_or_else(|| ExtendError::Defect("subgraph does not bound the outer region".into()))?;
    // Trace the subgraph facial walk containing this dart.
    let mut walk = Vec::new();
    let (mut u, mut v) = (u0, v0);
    loop {
        walk.push(u);
        let rot = g.rotation(v);
        let deg = rot.len();
        let pu = rot
            .iter()
            .position(|&x| x == u)
            .ok_or_else(|| ExtendError::Defect("broken rotation during subgraph trace".into()))?;
        let mut next = None;
        for s in 1..=deg {
            let cand = rot[(pu + s) % deg];
            if sub_edges.contains(&norm_edge(v, cand)) {
                next = Some(cand);
                break;
            }
        }
        let w = next.ok_or_else(|| ExtendError::Defect("dangling subgraph vertex".into()))?;
        u = v;
        v = w;
        if (u, v) == (u0, v0) {
            break;
        }
        if walk.len() > 4 * g.num_edges() + 4 {
            return Err(ExtendError::Defect("subgraph walk does not close".into()));
        }
    }
    Ok(walk)
}

/// Edge set of the subgraph induced on a vertex set.
pub(crate) fn induced_edge_set(g: &PlaneGraph, verts: &HashSet<VId>) -> HashSet<(VId, VId)> {
    let mut out = HashSet::new();
    for &v in verts {
        for &x in g.rotation(v) {
            if verts.contains(&x) {
                out.insert(norm_edge(v, x));
            }
        }
    }
    out
}

/// Fill every inner face of the drawn scaffold subgraph with the content of
/// `g` lying inside it. `sub_map` translates scaffold indices to `g` indices;
/// `coords` must already cover every scaffold vertex.
pub(crate) fn fill_scaffold_faces(
    g: &PlaneGraph,
    sub: &PlaneGraph,
    sub_map: &[VId],
    coords: &mut [Option<Point>],
) -> Result<(), ExtendError> {
    let g_faces = g.faces();
    let sub_faces = sub.faces();
    if sub_faces.outer == usize::MAX {
        return Err(ExtendError::Defect("scaffold outer face is not facial".into()));
    }
    let to_g: &[VId] = sub_map;
    let mut to_sub: HashMap<VId, VId> = HashMap::with_capacity(to_g.len());
    for (s, &gv) in to_g.iter().enumerate() {
        to_sub.insert(gv, s as VId);
    }
    let sub_edges: HashSet<(VId, VId)> = sub
        .edges()
        .into_iter()
        .map(|(a, b)| norm_edge(to_g[a as usize], to_g[b as usize]))
        .collect();

    // Flood components of g-faces separated by scaffold edges.
    let nf = g_faces.walks.len();
    let mut comp = vec![usize::MAX; nf];
    let mut ncomp = 0usize;
    for f0 in 0..nf {
        if comp[f0] != usize::MAX {
            continue;
        }
        let id = ncomp;
        ncomp += 1;
        comp[f0] = id;
        let mut queue = VecDeque::from([f0]);
        while let Some(f) = queue.pop_front() {
            let w = &g_faces.walks[f];
            for t in 0..w.len() {
                let (u, v) = (w[t], w[(t + 1) % w.len()]);
                if sub_edges.contains(&norm_edge(u, v)) {
                    continue;
                }
                let f2 = g_faces.face_of_dart(v, u);
                if comp[f2] == usize::MAX {
                    comp[f2] = id;
                    queue.push_back(f2);
                }
            }
        }
    }

    // Assign each component to the scaffold face containing it.
    let mut comp_face: Vec<Option<usize>> = vec![None; ncomp];
    for f in 0..nf {
        let cid = comp[f];
        if comp_face[cid].is_some() {
            continue;
        }
        let w = &g_faces.walks[f];
        for t in 0..w.len() {
            let (u, v) = (w[t], w[(t + 1) % w.len()]);
            if sub_edges.contains(&norm_edge(u, v)) {
                let (su, sv) = (to_sub[&u], to_sub[&v]);
                comp_face[cid] = Some(sub_faces.face_of_dart(su, sv));
                break;
            }
        }
    }

    // Interior content and edge set per component.
    let mut comp_verts: Vec<Vec<VId>> = vec![Vec::new(); ncomp];
    let mut comp_edges: Vec<HashSet<(VId, VId)>> = vec![HashSet::new(); ncomp];
    let mut seen: HashSet<VId> = HashSet::new();
    for f in 0..nf {
        let w = &g_faces.walks[f];
        for t in 0..w.len() {
            comp_edges[comp[f]].insert(norm_edge(w[t], w[(t + 1) % w.len()]));
        }
        for &v in w {
            if to_sub.contains_key(&v) || !seen.insert(v) {
                continue;
            }
            comp_verts[comp[f]].push(v);
        }
    }

    for cid in 0..ncomp {
        if comp_verts[cid].is_empty() {
            continue;
        }
        let sface = comp_face[cid].ok_or_else(|| {
            ExtendError::Defect("content component touches no scaffold edge".into())
        })?;
        if sface == sub_faces.outer {
            return Err(ExtendError::Defect(
                "graph content outside the scaffold's outer face".into(),
            ));
        }
        // Inner scaffold walks run counterclockwise; the fill region's outer
        // face is their reverse.
        let walk_g: Vec<VId> = sub_faces.walks[sface]
            .iter()
            .rev()
            .map(|&s| to_g[s as usize])
            .collect();
        if !is_simple_seq(&walk_g) {
            return Err(ExtendError::Defect("scaffold face walk is not simple".into()));
        }
        let mut keep: Vec<VId> = walk_g.clone();
        keep.extend(comp_verts[cid].iter().copied());
        let (fill_g, map) = subgraph_from_edges(g, &keep, &walk_g, &comp_edges[cid])?;
        let polygon = Polygon::new(
            walk_g
                .iter()
                .map(|&v| {
                    coords[v as usize]
                        .clone()
                        .ok_or_else(|| ExtendError::Defect("scaffold vertex unplaced".into()))
                })
                .collect::<Result<Vec<_>, _>>()?,
        );
        let task = FillTask::new(fill_g, polygon)?;
        let drawing = draw_in_star_polygon(&task)?;
        for (local, &gv) in map.iter().enumerate() {
            if local < walk_g.len() {
                continue; // boundary, already placed
            }
            let p = drawing.get(local as VId).clone();
            if coords[gv as usize].replace(p).is_some() {
                return Err(ExtendError::Defect(format!("fill placed {} twice", g.id(gv))));
            }
        }
    }
    Ok(())
}

fn is_simple_seq(w: &[VId]) -> bool {
    let s: HashSet<VId> = w.iter().copied().collect();
    s.len() == w.len()
}

/// Subgraph on `keep` restricted to the given edge set, with the outer walk
/// as stored outer face.
pub(crate) fn subgraph_from_edges(
    g: &PlaneGraph,
    keep: &[VId],
    outer_walk: &[VId],
    edges: &HashSet<(VId, VId)>,
) -> Result<(PlaneGraph, Vec<VId>), ExtendError> {
    let mut old_to_new: HashMap<VId, VId> = HashMap::with_capacity(keep.len());
    for (i, &v) in keep.iter().enumerate() {
        if old_to_new.insert(v, i as VId).is_some() {
            return Err(ExtendError::Defect("duplicate vertex in fill region".into()));
        }
    }
    let ids: Vec<String> = keep.iter().map(|&v| g.id(v).to_string()).collect();
    let rotation: Vec<Vec<VId>> = keep
        .iter()
        .map(|&v| {
            g.rotation(v)
                .iter()
                .filter(|&&x| {
                    old_to_new.contains_key(&x) && edges.contains(&norm_edge(v, x))
                })
                .map(|x| old_to_new[x])
                .collect()
        })
        .collect();
    let outer: Vec<VId> = outer_walk.iter().map(|v| old_to_new[v]).collect();
    let sub = PlaneGraph::checked(ids, rotation, outer)
        .map_err(|e| ExtendError::Defect(format!("fill region graph invalid: {e}")))?;
    Ok((sub, keep.to_vec()))
}

/// Final assembly: collect coordinates, verify against the graph.
pub(crate) fn finish_drawing(
    g: &PlaneGraph,
    coords: Vec<Option<Point>>,
    fixed: &HashMap<VId, Point>,
) -> Result<Drawing, ExtendError> {
    let coords: Option<Vec<Point>> = coords.into_iter().collect();
    let coords = coords.ok_or_else(|| ExtendError::Defect("vertex left unplaced".into()))?;
    let d = Drawing::new(coords);
    let rep = verify(g, &d, fixed, VerifyOptions::default());
    if !rep.ok() {
        return Err(ExtendError::Defect(format!(
            "construction failed verification: {}",
            rep.first_violation.unwrap_or_else(|| "unknown".into())
        )));
    }
    Ok(d)
}

#[cfg(test)]
pub(crate) mod test_support {
    use super::*;
    use crate::fixtures::octahedron;

    pub fn octa_instance(polygon: Vec<Point>) -> Instance {
        let g = octahedron();
        let (a, b, c) =
            (g.resolve("a").unwrap(), g.resolve("c").unwrap(), g.resolve("b").unwrap());
        let cyc = CycleRef::new(&g, vec![a, b, c]).unwrap();
        Instance::new(g, cyc, Polygon::new(polygon)).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::test_support::octa_instance;
    use super::*;
    use crate::fixtures::octahedron_with_coords;
    use crate::geometry::point::pt;
    use crate::plane_graph::plane_graph_from_drawing;

    #[test]
    fn check_octahedron_ok() {
        let inst = octa_instance(vec![pt(0, 0), pt(2, 3), pt(4, 0)]);
        let rep = check(&inst).unwrap();
        assert!(rep.ok());
    }

    #[test]
    fn check_detects_outer_chord() {
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
        let square = vec![pt(0, 2), pt(2, 2), pt(2, 0), pt(0, 0)];
        let mut seen = false;
        for verts in [vec![0u32, 1, 2, 3], vec![0, 3, 2, 1]] {
            let cyc = CycleRef::new(&g2, verts).unwrap();
            if let Ok(inst) = Instance::new(g2.clone(), cyc, Polygon::new(square.clone())) {
                let rep = check(&inst).unwrap();
                assert_eq!(rep.outer_chords.len(), 1);
                assert!(!rep.ok());
                seen = true;
            }
        }
        assert!(seen, "one orientation must validate");
    }

    #[test]
    fn check_detects_unrealizable_petal() {
        // Hexagon cycle with an outside vertex whose base spans the whole
        // upper chain, turning by exactly pi. Such a petal cannot be drawn
        // with straight edges, so the embedding is built directly: the petal
        // edges sit in the outside fans beyond the top.
        let hexa = vec![pt(0, 0), pt(0, 2), pt(1, 3), pt(3, 3), pt(4, 2), pt(4, 0)];
        let ids: Vec<String> = (0..7).map(|i| format!("v{i}")).collect();
        let g = PlaneGraph::checked(
            ids,
            vec![
                vec![5, 6, 1], // v0
                vec![0, 2],
                vec![1, 3],
                vec![2, 4],
                vec![3, 5],
                vec![4, 6, 0], // v5
                vec![0, 5],    // the petal
            ],
            vec![6, 5, 0],
        )
        .unwrap();
        let cyc = CycleRef::new(&g, vec![0, 1, 2, 3, 4, 5]).unwrap();
        let inst = Instance::new(g, cyc, Polygon::new(hexa)).unwrap();
        let rep = check(&inst).unwrap();
        assert!(rep.outer_chords.is_empty());
        assert_eq!(rep.unrealizable_petals.len(), 1);
        assert_eq!(rep.unrealizable_petals[0].base, (0, 5));
        let v = &rep.unrealizable_petals[0];
        assert!(v.certificate.len() <= 3);
        assert!(crate::geometry::feasibility::feasible_point(&v.certificate).is_none());
    }

    #[test]
    fn flat_vertex_is_input_error() {
        let g = crate::fixtures::octahedron();
        let (a, b, c) =
            (g.resolve("a").unwrap(), g.resolve("c").unwrap(), g.resolve("b").unwrap());
        let cyc = CycleRef::new(&g, vec![a, b, c]).unwrap();
        let flat = Polygon::new(vec![pt(0, 0), pt(2, 2), pt(4, 4)]);
        match Instance::new(g, cyc, flat) {
            Err(ExtendError::Input(msg)) => {
                assert!(msg.contains("flat") || msg.contains("convex") || msg.contains("Coincident"))
            }
            other => panic!("expected input error, got ok={}", other.is_ok()),
        }
    }

    #[test]
    fn subgraph_outer_walk_finds_shell() {
        let (g, _) = octahedron_with_coords();
        let faces = g.faces();
        let verts: HashSet<VId> = ["A", "B", "C"].iter().map(|s| g.resolve(s).unwrap()).collect();
        let sub_edges = induced_edge_set(&g, &verts);
        let walk = subgraph_outer_walk(&g, &faces, &sub_edges).unwrap();
        assert_eq!(walk.len(), 3);
    }
}
pub fn one_sided_base_darts_pub(p: &crate::geometry::polygon::Polygon) -> Vec<usize> { one_sided::one_sided_base_darts(p) }
