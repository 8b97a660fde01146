//! Extension of an arbitrary convex polygon. The outermost petals and
//! stamens are placed on a one-sided polygon inscribed in a flat convex arc
//! (standing in for a parabola: candidate ray crossings are computed in
//! floating point, snapped outward to rationals, and all consumed side
//! conditions are re-verified exactly), the skipped shell vertices go on
//! small convex arcs hugging the shell edges, the interior of the shell is
//! filled face by face, and the remaining graph outside the shell is handled
//! by the one-sided construction on the new polygon.

use super::one_sided::{extend_one_sided, one_sided_base_darts};
use super::{
    check, fill_scaffold_faces, finish_drawing, induced_edge_set, subgraph_outer_walk,
    ExtendError, Instance,
};
use crate::augment::{augment, restrict};
use crate::geometry::feasibility::Feasibility;
use crate::geometry::line::Line;
use crate::geometry::point::{pt, Point, Vec2};
use crate::geometry::polygon::Polygon;
use crate::geometry::rat::{rat, rat_to_f64, ratio, simplest_in_open, Rat};
use crate::petals::{
    apex_cone_petal, apex_cone_stamen, enumerate, is_realizable, petal_nesting,
    realizable_oracle, shell_structure, Cone, ConeRegion, Item, Petal,
};
use crate::plane_graph::{
    induced_subgraph, norm_edge, side_map, CycleRef, PlaneGraph, Side, VId,
};
use crate::verify::{verify, Drawing, VerifyOptions};
use num_traits::{One, Zero};
use std::collections::{HashMap, HashSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CaseTag {
    Case1,
    Case2a,
    Case2b,
    Case3,
}

impl CaseTag {
    pub fn as_str(&self) -> &'static str {
        match self {
            CaseTag::Case1 => "case1",
            CaseTag::Case2a => "case2a",
            CaseTag::Case2b => "case2b",
            CaseTag::Case3 => "case3",
        }
    }
}

/// Main entry: extend an arbitrary convex polygon instance, preserving the
/// embedding and outer face. Returns the drawing and the degenerate-case tag
/// the shell construction dispatched to.
pub fn extend_convex(inst: &Instance) -> Result<(Drawing, CaseTag), ExtendError> {
    let report = check(inst)?;
    if !report.ok() {
        return Err(report.to_error());
    }
    let aug = augment(&inst.g, &inst.c)?;
    let gp = &aug.g_prime;
    let cp =
        CycleRef::new(gp, inst.c.verts.clone()).map_err(|e| ExtendError::Defect(e.to_string()))?;
    let (d_gp, tag) = convex_on_augmented(gp, &cp, &inst.polygon)?;
    let d = restrict(&aug, &d_gp)?;
    let drawing =
        finish_drawing(&inst.g, d.coords.into_iter().map(Some).collect(), &inst.fixed_coords())?;
    Ok((drawing, tag))
}

pub(crate) fn convex_on_augmented(
    gp: &PlaneGraph,
    cp: &CycleRef,
    gamma: &Polygon,
) -> Result<(Drawing, CaseTag), ExtendError> {
    let shell = shell_structure(gp, cp)?;
    let gp_faces = gp.faces();

    // Cones of every shell-cycle item, against the prescribed polygon.
    let mut cones: HashMap<VId, Cone> = HashMap::new();
    let mut witness_dirs: HashMap<VId, Vec2> = HashMap::new();
    let mut is_petal: HashMap<VId, bool> = HashMap::new();
    let mut anchor_of: HashMap<VId, usize> = HashMap::new();
    for &it in &shell.outermost {
        let v = shell.item_vertex(it);
        match it {
            Item::Petal(pi) => {
                let p = &shell.set.petals[pi];
                let cone = apex_cone_petal(gamma, p)?;
                let w = match realizable_oracle(gamma, p) {
                    Feasibility::Witness(w) => w,
                    Feasibility::Infeasible(_) => {
                        return Err(ExtendError::Defect("outermost petal unrealizable".into()))
                    }
                };
                witness_dirs.insert(v, cone.apex.to(&w));
                cones.insert(v, cone);
                is_petal.insert(v, true);
            }
            Item::Stamen(si) => {
                let s = &shell.set.stamens[si];
                cones.insert(v, apex_cone_stamen(gamma, s));
                is_petal.insert(v, false);
                anchor_of.insert(v, s.anchor);
            }
        }
    }

    // The shell subgraph and its outer cycle.
    let mut shell_verts: Vec<VId> = cp.verts.clone();
    shell_verts.extend(shell.shell_cycle.iter().copied());
    let shell_vset: HashSet<VId> = shell_verts.iter().copied().collect();
    let shell_edges = induced_edge_set(gp, &shell_vset);
    let prime_walk = subgraph_outer_walk(gp, &gp_faces, &shell_edges)?;
    if prime_walk.iter().collect::<HashSet<_>>().len() != prime_walk.len() {
        return Err(ExtendError::Defect("shell outer walk is not simple".into()));
    }
    if prime_walk.iter().any(|v| cp.contains(*v)) {
        return Err(ExtendError::Defect("cycle vertex on the shell outer walk".into()));
    }
    let prime = CycleRef::new(gp, prime_walk.clone()).map_err(|e| ExtendError::Defect(e.to_string()))?;
    let prime_sm = side_map(gp, &prime)?;
    crate::plane_graph::validate_cycle_clockwise(gp, &prime, &prime_sm)
        .map_err(|e| ExtendError::Defect(format!("shell walk orientation: {e}")))?;

    // Petals of the shell cycle and their nesting, for the stretch edge rule.
    let prime_set = enumerate(gp, &prime, &prime_sm)?;
    let (prime_petal_parent, _) = petal_nesting(gp, &prime, &prime_sm, &prime_set)?;

    let kk = prime_walk.len();
    let prime_pos: HashMap<VId, usize> =
        prime_walk.iter().enumerate().map(|(i, &v)| (v, i)).collect();

    // Candidate stretch darts, in preference tiers.
    let outer_edges: HashSet<(VId, VId)> = {
        let of = gp.outer_face();
        (0..of.len()).map(|t| norm_edge(of[t], of[(t + 1) % of.len()])).collect()
    };
    let mut candidates: Vec<usize> = Vec::new();
    let mut tier1: Vec<usize> = (0..kk)
        .filter(|&t| outer_edges.contains(&norm_edge(prime_walk[t], prime_walk[(t + 1) % kk])))
        .collect();
    let id_key = |t: &usize| {
        let (u, v) = (prime_walk[*t], prime_walk[(*t + 1) % kk]);
        (gp.id(u.min(v)).to_string(), gp.id(u.max(v)).to_string())
    };
    tier1.sort_by_key(id_key);
    candidates.extend(tier1);
    let mut tier2: Vec<usize> = Vec::new();
    for (pi, parent) in prime_petal_parent.iter().enumerate() {
        if parent.is_some() {
            continue;
        }
        let p = &prime_set.petals[pi];
        for pos in [p.i, p.j] {
            for t in [pos, (pos + kk - 1) % kk] {
                tier2.push(t);
            }
        }
    }
    tier2.sort_by_key(id_key);
    candidates.extend(tier2);
    let mut tier3: Vec<usize> = (0..kk).collect();
    tier3.sort_by_key(id_key);
    candidates.extend(tier3);
    candidates.dedup();

    // Viability: every shell-cycle petal whose base spans the stretched edge
    // must end exactly at the new left base endpoint, at least two steps in.
    let viable = |t: usize| -> bool {
        let relabel = |pos: usize| (pos + kk - (t + 1) % kk) % kk;
        prime_set.petals.iter().all(|p| {
            let (s, e) = (relabel(p.i), relabel(p.j));
            if s <= e {
                return true; // does not span the stretched edge
            }
            e == 0 && s >= 2
        })
    };
    let stretch = candidates
        .into_iter()
        .find(|&t| viable(t))
        .ok_or_else(|| ExtendError::Defect("no viable stretch edge".into()))?;

    // Case classification.
    let n_petals = shell
        .outermost
        .iter()
        .filter(|it| matches!(it, Item::Petal(_)))
        .filter(|&&it| prime_pos.contains_key(&shell.item_vertex(it)))
        .count();
    let anchors: HashSet<usize> = prime_walk
        .iter()
        .filter_map(|v| anchor_of.get(v).copied())
        .collect();
    let tag = match (n_petals, anchors.len()) {
        (0, 1) => CaseTag::Case3,
        (0, 2) => CaseTag::Case2b,
        (1, 1) => CaseTag::Case2a,
        _ => CaseTag::Case1,
    };

    // Protected points: polygon, apexes, fan anchors; the guard circle must
    // contain them all.
    let center = {
        let mut x = Rat::zero();
        let mut y = Rat::zero();
        for p in &gamma.pts {
            x += &p.x;
            y += &p.y;
        }
        let n = rat(gamma.len() as i64);
        Point::new(x / &n, y / &n)
    };
    let mut protected: Vec<Point> = gamma.pts.clone();
    for cone in cones.values() {
        protected.push(cone.apex.clone());
    }
    let r2 = protected
        .iter()
        .map(|p| center.dist2(p))
        .max()
        .unwrap_or_else(|| rat(1))
        * rat(4)
        + rat(1);

    // Fan rays per shell-cycle vertex, in walk order starting after the
    // stretched dart (so index 0 is the new left base endpoint).
    let order: Vec<VId> = (0..kk).map(|m| prime_walk[(stretch + 1 + m) % kk]).collect();

    let mut result = None;
    for attempt in 0..12u32 {
        match build_prime_polygon(
            gp, gamma, &order, &cones, &witness_dirs, &is_petal, &anchor_of, &center, &r2,
            &prime_set, &prime_pos, stretch, kk, tag, attempt,
        ) {
            Ok(pi_prime) => {
                result = Some(pi_prime);
                break;
            }
            Err(_) if attempt + 1 < 12 => continue,
            Err(e) => return Err(e),
        }
    }
    let pi_prime = result.ok_or_else(|| ExtendError::Defect("shell polygon attempts failed".into()))?;

    // Place the shell cycle.
    let mut coords: Vec<Option<Point>> = vec![None; gp.num_vertices()];
    for (m, &v) in cp.verts.iter().enumerate() {
        coords[v as usize] = Some(gamma.vertex(m).clone());
    }
    for (m, &v) in order.iter().enumerate() {
        coords[v as usize] = Some(pi_prime.pts[m].clone());
    }

    // Skipped shell items go on flat convex arcs hugging the shell edges.
    place_skipped(gp, &shell, &prime_walk, &cones, &mut coords)?;

    // Verify the shell scaffold, then fill all its faces.
    let (sub, sub_map) = induced_subgraph(gp, &shell_verts, &prime_walk)
        .map_err(|e| ExtendError::Defect(format!("shell subgraph: {e}")))?;
    let sub_drawing = Drawing::new(
        sub_map.iter().map(|&v| coords[v as usize].clone().unwrap()).collect(),
    );
    let rep = verify(&sub, &sub_drawing, &HashMap::new(), VerifyOptions { check_outer: false, force_pairwise: false });
    if !rep.ok() {
        return Err(ExtendError::Defect(format!(
            "shell drawing invalid: {}",
            rep.first_violation.unwrap_or_default()
        )));
    }
    fill_scaffold_faces(gp, &sub, &sub_map, &mut coords)?;

    // The rest of the graph lies outside the shell cycle: recurse with the
    // one-sided construction on the new polygon.
    let mut outside_verts: Vec<VId> = prime_walk.clone();
    for v in gp.vertices() {
        if prime_sm.vertex_side[v as usize] == Side::Outside && !prime_pos.contains_key(&v) {
            outside_verts.push(v);
        }
    }
    let (ghat, ghat_map) = induced_subgraph(gp, &outside_verts, gp.outer_face())
        .map_err(|e| ExtendError::Defect(format!("outside subgraph: {e}")))?;
    // The recursion's cycle must pair with the polygon in fan order.
    let ghat_prime: Vec<VId> = order
        .iter()
        .map(|&v| outside_verts.iter().position(|&x| x == v).unwrap() as VId)
        .collect();
    let ghat_cycle =
        CycleRef::new(&ghat, ghat_prime).map_err(|e| ExtendError::Defect(e.to_string()))?;
    let ghat_inst = Instance::new(ghat.clone(), ghat_cycle, pi_prime.clone())
        .map_err(|e| ExtendError::Defect(format!("outside instance invalid: {e}")))?;
    let d_out = extend_one_sided(&ghat_inst)
        .map_err(|e| ExtendError::Defect(format!("one-sided recursion failed: {e}")))?;
    for (local, &gv) in ghat_map.iter().enumerate() {
        let p = d_out.get(local as VId).clone();
        match &coords[gv as usize] {
            Some(q) if *q == p => {}
            Some(_) => {
                return Err(ExtendError::Defect("recursion moved a shell vertex".into()))
            }
            None => coords[gv as usize] = Some(p),
        }
    }

    let fixed: HashMap<VId, Point> = cp
        .verts
        .iter()
        .enumerate()
        .map(|(m, &v)| (v, gamma.vertex(m).clone()))
        .collect();
    let d = finish_drawing(gp, coords, &fixed)?;
    Ok((d, tag))
}

#[allow(clippy::too_many_arguments)]
fn build_prime_polygon(
    gp: &PlaneGraph,
    gamma: &Polygon,
    order: &[VId],
    cones: &HashMap<VId, Cone>,
    witness_dirs: &HashMap<VId, Vec2>,
    is_petal: &HashMap<VId, bool>,
    anchor_of: &HashMap<VId, usize>,
    center: &Point,
    r2: &Rat,
    prime_set: &crate::petals::PetalSet,
    prime_pos: &HashMap<VId, usize>,
    stretch: usize,
    kk: usize,
    tag: CaseTag,
    attempt: u32,
) -> Result<Polygon, ExtendError> {
    let defect = |m: &str| ExtendError::Defect(format!("shell polygon: {m}"));
    let delta = ratio(1, 8 << attempt.min(20));

    // Assemble rays in fan order.
    let mut rays: Vec<(Point, Vec2)> = Vec::with_capacity(kk);
    match tag {
        CaseTag::Case1 => {
            // Fan center: centroid of the distinct apex/anchor points.
            let mut pts: Vec<Point> = Vec::new();
            for &v in order {
                let p = cones[&v].apex.clone();
                if !pts.contains(&p) {
                    pts.push(p);
                }
            }
            if pts.len() < 3 {
                return Err(defect("degenerate apex hull in the general case"));
            }
            let p = {
                let mut x = Rat::zero();
                let mut y = Rat::zero();
                for q in &pts {
                    x += &q.x;
                    y += &q.y;
                }
                let n = rat(pts.len() as i64);
                Point::new(x / &n, y / &n)
            };
            // Perturb runs of stamens sharing an anchor.
            let mut m = 0usize;
            while m < kk {
                let v = order[m];
                if *is_petal.get(&v).unwrap_or(&false) {
                    let d = p.to(&cones[&v].apex);
                    if d.is_zero() {
                        return Err(defect("fan center hits an apex"));
                    }
                    rays.push((p.clone(), d));
                    m += 1;
                    continue;
                }
                let anchor = anchor_of[&v];
                let mut run = 0usize;
                while m + run < kk
                    && !*is_petal.get(&order[m + run]).unwrap_or(&true)
                    && anchor_of[&order[m + run]] == anchor
                {
                    run += 1;
                }
                let base = p.to(&gamma.vertex(anchor).clone());
                let cw = Vec2::new(base.y.clone(), -base.x.clone());
                for q in 0..run {
                    let off = &delta * (rat(2 * q as i64) - rat(run as i64 - 1));
                    rays.push((p.clone(), base.plus(&cw.scaled(&off))));
                }
                m += run;
            }
        }
        _ => {
            // Degenerate fans: rays leave the anchors outward and the petal
            // apexes along their realizability witnesses.
            for &v in order {
                if *is_petal.get(&v).unwrap_or(&false) {
                    rays.push((cones[&v].apex.clone(), witness_dirs[&v].clone()));
                } else {
                    let anchor = gamma.vertex(anchor_of[&v]).clone();
                    let base = center.to(&anchor);
                    rays.push((anchor, base));
                }
            }
            // Spread runs sharing an anchor point.
            let mut m = 0usize;
            while m < kk {
                let mut run = 1usize;
                while m + run < kk && rays[m + run].0 == rays[m].0 && !is_petal[&order[m + run]]
                {
                    if is_petal[&order[m]] {
                        break;
                    }
                    run += 1;
                }
                if run > 1 {
                    let base = rays[m].1.clone();
                    let cw = Vec2::new(base.y.clone(), -base.x.clone());
                    for q in 0..run {
                        let off = &delta * (rat(2 * q as i64) - rat(run as i64 - 1));
                        rays[m + q].1 = base.plus(&cw.scaled(&off));
                    }
                }
                m += run;
            }
        }
    }

    // Axis bisecting the wrap gap (from the last ray back to the first).
    let dir_f = |v: &Vec2| -> (f64, f64) {
        let x = rat_to_f64(&v.x);
        let y = rat_to_f64(&v.y);
        let n = (x * x + y * y).sqrt().max(1e-300);
        (x / n, y / n)
    };
    let (x0, y0) = dir_f(&rays[0].1);
    let (x1, y1) = dir_f(&rays[kk - 1].1);
    let a0 = y0.atan2(x0);
    let a1 = y1.atan2(x1);
    // The fan advances clockwise from index 0 to index kk-1; the wrap gap
    // from the last ray back to the first hosts the base edge, and the arc
    // must open toward it.
    let mut gap = a1 - a0;
    while gap < 0.0 {
        gap += 2.0 * std::f64::consts::PI;
    }
    let axis_angle = a1 - gap / 2.0;
    let ax = axis_angle.cos();
    let ay = axis_angle.sin();

    // Flat parabola crossing, focus at the guard-circle center.
    let fx = rat_to_f64(&center.x);
    let fy = rat_to_f64(&center.y);
    let r = rat_to_f64(r2).sqrt();
    let latus = r * 4.0 * f64::powi(2.0, attempt.min(16) as i32);
    let pull1 = rat(1) + ratio(attempt.min(16) as i64, 2);

    let mut pts: Vec<Point> = Vec::with_capacity(kk);
    for (m, (o, d)) in rays.iter().enumerate() {
        let (ux, uy) = dir_f(d);
        let bx = rat_to_f64(&o.x) - fx;
        let by = rat_to_f64(&o.y) - fy;
        let ua = ux * ax + uy * ay;
        let ba = bx * ax + by * ay;
        let aa = 1.0 - ua * ua;
        let bb = 2.0 * (bx * ux + by * uy - ba * ua - latus * ua);
        let cc = bx * bx + by * by - ba * ba - 2.0 * latus * ba - latus * latus;
        let t = if aa.abs() < 1e-12 {
            -cc / bb
        } else {
            let disc = (bb * bb - 4.0 * aa * cc).max(0.0).sqrt();
            ((-bb + disc) / (2.0 * aa)).max((-bb - disc) / (2.0 * aa))
        };
        if !(t.is_finite() && t > 0.0) {
            return Err(defect("ray misses the arc"));
        }
        // Snap the parameter outward to a rational; scale by the direction
        // norm so the snap is geometric.
        let dn = rat_to_f64(&d.norm2()).sqrt().max(1e-300);
        let t_geo = t * dn;
        let snapped_geo = (t_geo * 16.0).ceil() / 16.0 + 1.0 / 16.0;
        let mut t_rat = crate::geometry::rat::rat_from_f64_dyadic(snapped_geo / dn, 24);
        if m == 1 {
            t_rat *= &pull1;
        }
        if t_rat <= Rat::zero() {
            return Err(defect("snapped parameter not positive"));
        }
        pts.push(o.add_scaled(d, &t_rat));
    }

    let pi_prime = Polygon::new(pts);
    pi_prime
        .validate_convex_clockwise()
        .map_err(|e| ExtendError::Defect(format!("shell polygon not convex: {e}")))?;
    // One-sided with base between the last and first fan vertices, strictly
    // acute base angles.
    let bases = one_sided_base_darts(&pi_prime);
    if !bases.contains(&(kk - 1)) {
        return Err(defect("stretched edge is not a one-sided base"));
    }
    // The guard circle stays strictly inside.
    if !pi_prime.convex_contains_strict(center) {
        return Err(defect("center escaped the shell polygon"));
    }
    for (a, b) in pi_prime.edges() {
        let line = Line::through(a, b);
        let e = line.eval(center);
        let n2 = &line.a * &line.a + &line.b * &line.b;
        if &e * &e <= r2 * &n2 {
            return Err(defect("guard circle touches the shell polygon"));
        }
    }
    // Every vertex sits in its own cone.
    for (m, &v) in order.iter().enumerate() {
        if !cones[&v].contains(&pi_prime.pts[m]) {
            return Err(defect("vertex left its cone"));
        }
    }
    // Every petal of the shell cycle must be realizable on the new polygon.
    let relabel = |pos: usize| (pos + kk - (stretch + 1) % kk) % kk;
    for p in &prime_set.petals {
        let (s, e) = (relabel(p.i), relabel(p.j));
        let probe = Petal {
            w: p.w,
            i: s,
            j: e,
            neighbors: vec![],
            neighbor_positions: vec![],
            trivial: (e + kk - s) % kk == 1,
        };
        if !is_realizable(&pi_prime, &probe) {
            return Err(defect("shell-cycle petal unrealizable on the new polygon"));
        }
    }
    let _ = (gp, prime_pos, pt(0, 0));
    Ok(pi_prime)
}

/// Place the shell-cycle items skipped by its outer walk on flat convex arcs
/// just inside the corresponding walk edges, each inside its own cone.
fn place_skipped(
    gp: &PlaneGraph,
    shell: &crate::petals::ShellStructure,
    prime_walk: &[VId],
    cones: &HashMap<VId, Cone>,
    coords: &mut [Option<Point>],
) -> Result<(), ExtendError> {
    let cycle = &shell.shell_cycle;
    let n = cycle.len();
    let on_prime: HashSet<VId> = prime_walk.iter().copied().collect();
    if n == prime_walk.len() {
        return Ok(()); // nothing skipped
    }
    // The walk must traverse the shell cycle in one of the two directions.
    let pos_of: HashMap<VId, usize> = cycle.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let locate = |v: VId| -> Result<usize, ExtendError> {
        pos_of
            .get(&v)
            .copied()
            .ok_or_else(|| ExtendError::Defect("walk vertex missing from shell cycle".into()))
    };
    let step_of = |dir: i64| {
        move |i: usize| -> usize { ((i as i64 + dir).rem_euclid(n as i64)) as usize }
    };
    // Determine direction from the first walk pair.
    let a0 = locate(prime_walk[0])?;
    let a1 = locate(prime_walk[1 % prime_walk.len()])?;
    let fwd = step_of(1);
    let bwd = step_of(-1);
    let forward = {
        let mut i = fwd(a0);
        loop {
            if i == a1 {
                break true;
            }
            if on_prime.contains(&cycle[i]) {
                break false;
            }
            i = fwd(i);
        }
    };
    let step: Box<dyn Fn(usize) -> usize> = if forward { Box::new(fwd) } else { Box::new(bwd) };

    for t in 0..prime_walk.len() {
        let x = prime_walk[t];
        let y = prime_walk[(t + 1) % prime_walk.len()];
        let mut run: Vec<VId> = Vec::new();
        let mut i = step(locate(x)?);
        while cycle[i] != y {
            if on_prime.contains(&cycle[i]) {
                return Err(ExtendError::Defect("shell walk order mismatch".into()));
            }
            run.push(cycle[i]);
            i = step(i);
        }
        if run.is_empty() {
            continue;
        }
        let px = coords[x as usize].clone().unwrap();
        let py = coords[y as usize].clone().unwrap();
        let seg = px.to(&py);
        let inward = {
            // Interior of the shell polygon is right of the walk dart.
            let line = Line::through(&px, &py);
            Vec2::new(line.a.clone(), line.b.clone())
        };
        // Clip each item's cone against the open segment to order them.
        let mut cursor = Rat::zero();
        let mut sigmas: Vec<Rat> = Vec::new();
        for &w in &run {
            let cone = cones
                .get(&w)
                .ok_or_else(|| ExtendError::Defect("skipped item has no cone".into()))?;
            let interval = clip_cone(&px, &seg, cone, &cursor)?;
            let (lo, hi) = interval
                .ok_or_else(|| ExtendError::Defect("cone misses its shell edge".into()))?;
            let sigma = simplest_in_open(&lo, &hi);
            sigmas.push(sigma.clone());
            cursor = sigma;
        }
        // Offset onto a flat convex arc, shrinking until every point stays
        // in its cone.
        let mut dscale = ratio(1, 16);
        let mut placed = false;
        'search: for _ in 0..80 {
            let mut pts: Vec<Point> = Vec::new();
            for (idx, &w) in run.iter().enumerate() {
                let s = &sigmas[idx];
                let bulge = &dscale * s * (Rat::one() - s);
                let p = px.add_scaled(&seg, s).add_scaled(&inward, &bulge);
                if !cones[&w].contains(&p) {
                    dscale /= rat(2);
                    continue 'search;
                }
                pts.push(p);
            }
            for (idx, &w) in run.iter().enumerate() {
                coords[w as usize] = Some(pts[idx].clone());
            }
            placed = true;
            break;
        }
        if !placed {
            return Err(ExtendError::Defect("arc offset search exhausted".into()));
        }
    }
    let _ = gp;
    Ok(())
}

// Clip `origin + sigma * dir` for sigma in (cursor, 1) against a cone.
fn clip_cone(
    origin: &Point,
    dir: &Vec2,
    cone: &Cone,
    cursor: &Rat,
) -> Result<Option<(Rat, Rat)>, ExtendError> {
    let clip_half = |h: &crate::geometry::line::HalfPlane, lo: &mut Rat, hi: &mut Rat| {
        let at0 = h.line.eval(origin);
        let slope = &h.line.a * &dir.x + &h.line.b * &dir.y;
        let (v0, sl) = match h.sense {
            crate::geometry::line::Sense::Greater => (at0, slope),
            crate::geometry::line::Sense::Less => (-at0, -slope),
        };
        if sl.is_zero() {
            if v0 <= Rat::zero() {
                *lo = Rat::one();
                *hi = Rat::zero();
            }
            return;
        }
        let bound = -v0 / &sl;
        if sl > Rat::zero() {
            if bound > *lo {
                *lo = bound;
            }
        } else if bound < *hi {
            *hi = bound;
        }
    };
    let interval = |hs: &[&crate::geometry::line::HalfPlane]| -> Option<(Rat, Rat)> {
        let mut lo = cursor.clone();
        let mut hi = Rat::one();
        for h in hs {
            clip_half(h, &mut lo, &mut hi);
        }
        (lo < hi).then_some((lo, hi))
    };
    Ok(match &cone.region {
        ConeRegion::Wedge(a, b) => interval(&[a, b]),
        ConeRegion::Half(a) => interval(&[a]),
        ConeRegion::Union(a, b) => interval(&[a]).or_else(|| interval(&[b])),
    })
}
