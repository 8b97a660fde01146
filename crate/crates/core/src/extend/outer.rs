//! The free-outer-face extension of a one-sided polygon on a maximal graph,
//! and the reduction from a predrawn biconnected subgraph with convex faces.

use super::one_sided::{one_sided_base_darts, Frame};
use super::{
    check, fill_scaffold_faces, finish_drawing, subgraph_from_edges, ConditionReport,
    ExtendError, Instance,
};
use crate::augment::{restrict, triangulate_inside};
use crate::extend::extend_convex;
use crate::geometry::feasibility::feasible_point;
use crate::geometry::point::{snap_point_with, Point};
use crate::geometry::polygon::Polygon;
use crate::geometry::rat::{rat, Rat};
use crate::geometry::visibility::external_sees_vertex;
use crate::geometry::HalfPlane;
use crate::plane_graph::{
    induced_subgraph, is_maximal, norm_edge, outer_chords, side_map, CycleRef, PlaneGraph, Side,
    VId,
};
use crate::star_drawer::fill_convex_region;
use crate::verify::Drawing;
use num_traits::Zero;
use std::collections::{HashMap, HashSet, VecDeque};

/// Extension that is allowed to change the outer face: re-root at the face
/// outside the cycle incident to the base edge, place its third vertex far
/// enough to see the whole polygon, and fill the star-shaped faces.
///
/// Returns the drawing together with the re-rooted graph it verifies against.
pub fn extend_free_outer(inst: &Instance) -> Result<(Drawing, PlaneGraph), ExtendError> {
    let sm = inst.validate()?;
    if !is_maximal(&inst.g) {
        return Err(ExtendError::Input("graph is not maximal".into()));
    }
    let chords = outer_chords(&inst.g, &inst.c, &sm);
    if !chords.is_empty() {
        let mut rep = ConditionReport::default();
        for (u, v) in chords {
            rep.outer_chords.push((inst.g.id(u).to_string(), inst.g.id(v).to_string()));
        }
        return Err(rep.to_error());
    }
    let bases = one_sided_base_darts(&inst.polygon);
    let base = *bases
        .first()
        .ok_or_else(|| ExtendError::Input("polygon is not one-sided with strictly acute base angles".into()))?;
    let k = inst.c.len();

    // The face outside the cycle at the base edge becomes the outer face.
    let (ct, ct1) = (inst.c.verts[base], inst.c.verts[(base + 1) % k]);
    let fout = sm.faces.face_of_dart(ct, ct1);
    let fwalk = sm.faces.walks[fout].clone();
    if fwalk.len() != 3 {
        return Err(ExtendError::Defect("outside base face is not a triangle".into()));
    }
    let v = *fwalk
        .iter()
        .find(|&&x| x != ct && x != ct1)
        .ok_or_else(|| ExtendError::Defect("degenerate base face".into()))?;
    let g2 = PlaneGraph::checked(
        inst.g.ids().to_vec(),
        inst.g.rotations().to_vec(),
        fwalk.clone(),
    )
    .map_err(|e| ExtendError::Defect(format!("re-rooting failed: {e}")))?;

    // Place v far above the polygon: strictly beyond every non-base edge,
    // seeing each of its cycle neighbors.
    let frame = Frame::new(inst.polygon.vertex((base + 1) % k), inst.polygon.vertex(base));
    let fpts: Vec<Point> =
        (0..k).map(|m| frame.to_frame(inst.polygon.vertex((base + 1 + m) % k))).collect();
    let fpoly = Polygon::new(fpts.clone());
    let cpos: HashMap<VId, usize> = (0..k)
        .map(|m| (inst.c.verts[(base + 1 + m) % k], m))
        .collect();
    let beyond: Vec<HalfPlane> = (0..k - 1)
        .map(|m| HalfPlane::beyond_edge(&fpts[m], &fpts[m + 1]))
        .collect();
    let seed = feasible_point(&beyond)
        .ok_or_else(|| ExtendError::Defect("no region beyond the non-base edges".into()))?;
    let nbrs: Vec<usize> =
        g2.rotation(v).iter().filter_map(|x| cpos.get(x).copied()).collect();
    let mut vpos_frame = None;
    let mut probe = seed;
    for _ in 0..64 {
        let sees = nbrs
            .iter()
            .all(|&f| external_sees_vertex(&fpoly, &probe, f).unwrap_or(false));
        let beyond_all = beyond.iter().all(|h| h.contains(&probe));
        if sees && beyond_all {
            vpos_frame = Some(snap_point_with(&probe, |p| {
                beyond.iter().all(|h| h.contains(p))
                    && nbrs
                        .iter()
                        .all(|&f| external_sees_vertex(&fpoly, p, f).unwrap_or(false))
            }));
            break;
        }
        probe = Point::new(probe.x.clone(), &probe.y + (&probe.y.clone().max(Rat::zero()) + rat(1)));
    }
    let vpos_frame =
        vpos_frame.ok_or_else(|| ExtendError::Defect("apex placement not found".into()))?;
    let vpos = frame.from_frame(&vpos_frame);

    let mut coords: Vec<Option<Point>> = vec![None; g2.num_vertices()];
    for (m, &cv) in inst.c.verts.iter().enumerate() {
        coords[cv as usize] = Some(inst.polygon.vertex(m).clone());
    }
    coords[v as usize] = Some(vpos);

    // Scaffold: the cycle plus v; fill all its faces.
    let mut scaffold: Vec<VId> = inst.c.verts.clone();
    scaffold.push(v);
    let (sub, sub_map) = induced_subgraph(&g2, &scaffold, &fwalk)
        .map_err(|e| ExtendError::Defect(format!("scaffold extraction: {e}")))?;
    fill_scaffold_faces(&g2, &sub, &sub_map, &mut coords)?;
    let fixed = inst.fixed_coords();
    let d = finish_drawing(&g2, coords, &fixed)?;
    Ok((d, g2))
}

/// Extend a predrawn biconnected plane subgraph whose faces are convex: test
/// the outer cycle's conditions, fill the graph content inside each face of
/// the subgraph, and extend beyond its outer cycle.
pub fn extend_subgraph(
    g: &PlaneGraph,
    h: &PlaneGraph,
    gamma_h: &Drawing,
) -> Result<Drawing, ExtendError> {
    // h must be a plane subgraph of g: same ids, edges present, rotations
    // induced.
    let h_to_g: Vec<VId> = h
        .ids()
        .iter()
        .map(|id| g.resolve(id).map_err(|e| ExtendError::Input(e.to_string())))
        .collect::<Result<_, _>>()?;
    for (hv, &gv) in h_to_g.iter().enumerate() {
        for &hn in h.rotation(hv as VId) {
            if !g.has_edge(gv, h_to_g[hn as usize]) {
                return Err(ExtendError::Input(format!(
                    "subgraph edge {} - {} missing from the host graph",
                    h.id(hv as VId),
                    h.id(hn)
                )));
            }
        }
        // rotation must be the induced cyclic order
        let hset: HashSet<VId> =
            h.rotation(hv as VId).iter().map(|&x| h_to_g[x as usize]).collect();
        let induced: Vec<VId> = g
            .rotation(gv)
            .iter()
            .copied()
            .filter(|x| hset.contains(x))
            .collect();
        let stored: Vec<VId> =
            h.rotation(hv as VId).iter().map(|&x| h_to_g[x as usize]).collect();
        if !cyclic_eq(&induced, &stored) {
            return Err(ExtendError::Input(format!(
                "subgraph rotation at {} is not induced",
                h.id(hv as VId)
            )));
        }
    }
    // The predrawn part must itself verify, with convex inner faces.
    let rep = crate::verify::verify(
        h,
        gamma_h,
        &HashMap::new(),
        crate::verify::VerifyOptions::default(),
    );
    if !rep.ok() {
        return Err(ExtendError::Input(format!(
            "predrawn subgraph is not a valid drawing: {}",
            rep.first_violation.unwrap_or_default()
        )));
    }
    let h_faces = h.faces();
    for (f, w) in h_faces.walks.iter().enumerate() {
        if f == h_faces.outer {
            continue;
        }
        let mut poly: Vec<Point> = w.iter().map(|&x| gamma_h.get(x).clone()).collect();
        poly.reverse(); // inner walks run counterclockwise
        Polygon::new(poly)
            .validate_convex_clockwise()
            .map_err(|e| ExtendError::Input(format!("inner face not strictly convex: {e}")))?;
    }

    // Outer cycle of h in g, with its prescribed polygon.
    let ch_g: Vec<VId> = h.outer_face().iter().map(|&x| h_to_g[x as usize]).collect();
    let ch = CycleRef::new(g, ch_g.clone())?;
    let gamma_ch = Polygon::new(h.outer_face().iter().map(|&x| gamma_h.get(x).clone()).collect());
    let sm = side_map(g, &ch)?;
    crate::plane_graph::validate_cycle_clockwise(g, &ch, &sm)
        .map_err(|e| ExtendError::Input(format!("subgraph outer cycle orientation: {e}")))?;

    // Outside instance: the outer cycle plus everything beyond it.
    let mut out_verts: Vec<VId> = ch_g.clone();
    for v in g.vertices() {
        if sm.vertex_side[v as usize] == Side::Outside && !ch_g.contains(&v) {
            out_verts.push(v);
        }
    }
    let (ghat, ghat_map) = induced_subgraph(g, &out_verts, g.outer_face())
        .map_err(|e| ExtendError::Input(format!("outer region extraction: {e}")))?;
    let ghat_cycle: Vec<VId> = ch_g
        .iter()
        .map(|&v| out_verts.iter().position(|&x| x == v).unwrap() as VId)
        .collect();
    let inst_out = Instance::new(
        ghat.clone(),
        CycleRef::new(&ghat, ghat_cycle)?,
        gamma_ch.clone(),
    )?;
    let outside_report = check(&inst_out)?;
    if !outside_report.ok() {
        return Err(outside_report.to_error());
    }
    let (d_out, _tag) = extend_convex(&inst_out)?;

    let mut coords: Vec<Option<Point>> = vec![None; g.num_vertices()];
    for (hv, &gv) in h_to_g.iter().enumerate() {
        coords[gv as usize] = Some(gamma_h.get(hv as VId).clone());
    }
    for (local, &gv) in ghat_map.iter().enumerate() {
        let p = d_out.get(local as VId).clone();
        match &coords[gv as usize] {
            Some(q) if *q == p => {}
            Some(_) => return Err(ExtendError::Defect("outer extension moved a fixed vertex".into())),
            None => coords[gv as usize] = Some(p),
        }
    }

    // Content of g inside each inner face of h.
    let g_faces = g.faces();
    let h_edges: HashSet<(VId, VId)> = h
        .edges()
        .into_iter()
        .map(|(a, b)| norm_edge(h_to_g[a as usize], h_to_g[b as usize]))
        .collect();
    let nf = g_faces.walks.len();
    let mut comp = vec![usize::MAX; nf];
    let mut ncomp = 0;
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
                if h_edges.contains(&norm_edge(u, v)) {
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
    let g_to_h: HashMap<VId, VId> =
        h_to_g.iter().enumerate().map(|(hv, &gv)| (gv, hv as VId)).collect();
    let mut comp_face: Vec<Option<usize>> = vec![None; ncomp];
    let mut comp_verts: Vec<Vec<VId>> = vec![Vec::new(); ncomp];
    let mut comp_edges: Vec<HashSet<(VId, VId)>> = vec![HashSet::new(); ncomp];
    let mut seen: HashSet<VId> = HashSet::new();
    for f in 0..nf {
        let cid = comp[f];
        let w = &g_faces.walks[f];
        for t in 0..w.len() {
            let (u, v) = (w[t], w[(t + 1) % w.len()]);
            comp_edges[cid].insert(norm_edge(u, v));
            if h_edges.contains(&norm_edge(u, v)) && comp_face[cid].is_none() {
                comp_face[cid] = Some(h_faces.face_of_dart(g_to_h[&u], g_to_h[&v]));
            }
        }
        for &v in w {
            if g_to_h.contains_key(&v) || !seen.insert(v) {
                continue;
            }
            comp_verts[cid].push(v);
        }
    }
    for cid in 0..ncomp {
        if comp_verts[cid].is_empty() {
            continue;
        }
        let hface = comp_face[cid]
            .ok_or_else(|| ExtendError::Defect("content component off the subgraph".into()))?;
        if hface == h_faces.outer {
            continue; // outside content was handled by the outer extension
        }
        // Inner walks of h run counterclockwise; the region's outer face is
        // their reverse.
        let walk_g: Vec<VId> =
            h_faces.walks[hface].iter().rev().map(|&x| h_to_g[x as usize]).collect();
        let mut keep = walk_g.clone();
        keep.extend(comp_verts[cid].iter().copied());
        let (region, map) = subgraph_from_edges(g, &keep, &walk_g, &comp_edges[cid])?;
        let rcycle = CycleRef::new(&region, (0..walk_g.len() as VId).collect())
            .map_err(|e| ExtendError::Defect(e.to_string()))?;
        let tri = triangulate_inside(&region, &rcycle)?;
        let polygon = Polygon::new(
            walk_g
                .iter()
                .map(|&v| coords[v as usize].clone().unwrap())
                .collect(),
        );
        let filled = fill_convex_region(&tri.g_prime, &polygon)?;
        let restricted = restrict(&tri, &filled)?;
        for (rv, &gv) in map.iter().enumerate() {
            if rv < walk_g.len() {
                continue;
            }
            let p = restricted.get(rv as VId).clone();
            if coords[gv as usize].replace(p).is_some() {
                return Err(ExtendError::Defect("inner fill placed a vertex twice".into()));
            }
        }
    }

    let fixed: HashMap<VId, Point> = h_to_g
        .iter()
        .enumerate()
        .map(|(hv, &gv)| (gv, gamma_h.get(hv as VId).clone()))
        .collect();
    finish_drawing(g, coords, &fixed)
}

fn cyclic_eq(a: &[VId], b: &[VId]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    if a.is_empty() {
        return true;
    }
    match b.iter().position(|&x| x == a[0]) {
        None => false,
        Some(s) => (0..a.len()).all(|i| a[i] == b[(s + i) % b.len()]),
    }
}
