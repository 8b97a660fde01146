//! Extension of a one-sided polygon that preserves the outer face.
//!
//! Two anchor paths leave the base-edge endpoints toward the outer face; one
//! is drawn on a slightly dipped leftward ray below the base and then jumps
//! to a carrier line passing above the polygon, the other descends a line
//! through the split vertex on the right. The third outer vertex is placed
//! above the resulting x-monotone chain by explicit feasibility, and every
//! face of the scaffold is star-shaped and filled recursively. All "slightly"
//! and "far enough" choices are exact rational parameters validated by
//! predicates and retried with geometric growth if a check fails.

use super::{
    check, fill_scaffold_faces, finish_drawing, ExtendError, Instance,
};
use crate::augment::{augment, restrict};
use crate::geometry::line::{HalfPlane, Line, Sense};
use crate::geometry::point::{snap_point_with, Point, Vec2};
use crate::geometry::polygon::Polygon;
use crate::geometry::rat::{rat, simplest_in_open, Rat};
use crate::geometry::feasibility::feasible_point;
use crate::geometry::visibility::external_sees_vertex;
use crate::petals::{anchor_paths, enumerate};
use crate::plane_graph::{induced_subgraph, side_map, CycleRef, PlaneGraph, VId};
use crate::verify::{verify, Drawing, VerifyOptions};
use num_traits::{One, Zero};
use std::collections::{HashMap, HashSet};

/// Exact similarity mapping the base edge to the horizontal axis with the
/// polygon above.
pub(crate) struct Frame {
    origin: Point,
    ex: Vec2,
    ey: Vec2,
    scale2: Rat,
}

impl Frame {
    pub(crate) fn new(left: &Point, right: &Point) -> Frame {
        let ex = left.to(right);
        let ey = ex.perp_ccw();
        let scale2 = ex.norm2();
        Frame { origin: left.clone(), ex, ey, scale2 }
    }

    pub(crate) fn to_frame(&self, p: &Point) -> Point {
        let v = self.origin.to(p);
        Point::new(v.dot(&self.ex), v.dot(&self.ey))
    }

    pub(crate) fn from_frame(&self, q: &Point) -> Point {
        let vx = self.ex.scaled(&q.x);
        let vy = self.ey.scaled(&q.y);
        self.origin.add(&vx.plus(&vy).scaled(&self.scale2.recip()))
    }
}

/// Base-edge candidates: darts `(c[t], c[t+1])` whose supporting segment
/// receives the orthogonal projections of all vertices, with strictly acute
/// base angles. The polygon lies above the dart reversed: `v_k = c[t]`,
/// `v_1 = c[t+1]`.
pub(crate) fn one_sided_base_darts(poly: &Polygon) -> Vec<usize> {
    let k = poly.len();
    let mut out = Vec::new();
    for t in 0..k {
        let right = poly.vertex(t); // v_k
        let left = poly.vertex(t + 1); // v_1
        let d = left.to(right);
        let len2 = d.norm2();
        // strictly acute base angles
        let at_left = left.to(poly.vertex(t + 2));
        let at_right = right.to(poly.vertex((t + k - 1) % k));
        if at_left.dot(&d) <= Rat::zero() || at_right.dot(&d.neg()) <= Rat::zero() {
            continue;
        }
        let ok = (0..k).all(|m| {
            if m == t || m == (t + 1) % k {
                return true;
            }
            let proj = left.to(poly.vertex(m)).dot(&d);
            proj >= Rat::zero() && proj <= len2
        });
        if ok {
            out.push(t);
        }
    }
    out
}

/// Extension for instances whose polygon is one-sided; preserves the outer
/// face and the prescribed coordinates bit-exactly.
pub fn extend_one_sided(inst: &Instance) -> Result<Drawing, ExtendError> {
    let report = check(inst)?;
    if !report.ok() {
        return Err(report.to_error());
    }
    let bases = one_sided_base_darts(&inst.polygon);
    let base = *bases
        .first()
        .ok_or_else(|| ExtendError::Input("polygon is not one-sided with strictly acute base angles".into()))?;
    let aug = augment(&inst.g, &inst.c)?;
    let gp = &aug.g_prime;
    let cp = CycleRef::new(gp, inst.c.verts.clone()).map_err(|e| ExtendError::Defect(e.to_string()))?;
    let d_gp = one_sided_on_augmented(gp, &cp, &inst.polygon, base)?;
    let d = restrict(&aug, &d_gp)?;
    finish_drawing(&inst.g, d.coords.into_iter().map(Some).collect(), &inst.fixed_coords())
}

/// The construction on an already maximal graph with a strictly internal
/// outerchordless cycle. `base` is the cycle dart index of the base edge.
pub(crate) fn one_sided_on_augmented(
    gp: &PlaneGraph,
    cp: &CycleRef,
    poly: &Polygon,
    base: usize,
) -> Result<Drawing, ExtendError> {
    let k = cp.len();
    // Relabel: vs[0] = v_1 ... vs[k-1] = v_k.
    let vs: Vec<VId> = (0..k).map(|m| cp.verts[(base + 1 + m) % k]).collect();
    let pts: Vec<Point> = (0..k).map(|m| poly.vertex((base + 1 + m) % k).clone()).collect();

    let sm = side_map(gp, cp)?;
    let set = enumerate(gp, cp, &sm)?;
    let ap = anchor_paths(gp, cp, vs[0], vs[k - 1], &set)?;

    // Frame coordinates: base horizontal, polygon above.
    let frame = Frame::new(&pts[0], &pts[k - 1]);
    let fpts: Vec<Point> = pts.iter().map(|p| frame.to_frame(p)).collect();
    for (m, q) in fpts.iter().enumerate() {
        if m != 0 && m != k - 1 && q.y <= Rat::zero() {
            return Err(ExtendError::Defect("polygon vertex below the base in frame".into()));
        }
    }
    let j0 = vs
        .iter()
        .position(|&x| x == ap.w)
        .ok_or_else(|| ExtendError::Defect("anchor vertex missing from cycle".into()))?;

    // Topmost vertex (or two).
    let max_y = fpts.iter().map(|p| p.y.clone()).max().unwrap();
    let tops: Vec<usize> = (0..k).filter(|&m| fpts[m].y == max_y).collect();
    if tops.len() > 2 || (tops.len() == 2 && tops[1] != tops[0] + 1) {
        return Err(ExtendError::Defect("more than two topmost vertices".into()));
    }
    let (t1, t2) = (tops[0], *tops.last().unwrap());

    let l2 = fpts[k - 1].x.clone();
    let (mirrored, vs, fpts, path_a, path_c, j0) = if j0 >= t2 {
        (false, vs, fpts, ap.path_u.clone(), ap.path_v.clone(), j0)
    } else if j0 <= t1 {
        let vs2: Vec<VId> = vs.iter().rev().copied().collect();
        let fpts2: Vec<Point> = fpts
            .iter()
            .rev()
            .map(|p| Point::new(&l2 - &p.x, p.y.clone()))
            .collect();
        (true, vs2, fpts2, ap.path_v.clone(), ap.path_u.clone(), k - 1 - j0)
    } else {
        return Err(ExtendError::Defect("anchor vertex strictly between the two tops".into()));
    };

    let fpoly = Polygon::new(fpts.clone());
    fpoly
        .validate_convex_clockwise()
        .map_err(|e| ExtendError::Defect(format!("frame polygon invalid: {e}")))?;

    let mut placements: Option<Vec<(VId, Point)>> = None;
    for attempt in 0..10 {
        match scaffold_attempt(gp, &vs, &fpts, &fpoly, &path_a, &path_c, j0, attempt) {
            Ok(p) => {
                placements = Some(p);
                break;
            }
            Err(_) if attempt + 1 < 10 => continue,
            Err(e) => return Err(e),
        }
    }
    let placements =
        placements.ok_or_else(|| ExtendError::Defect("scaffold attempts exhausted".into()))?;

    // Back to world coordinates.
    let unmirror = |q: &Point| -> Point {
        if mirrored {
            frame.from_frame(&Point::new(&l2 - &q.x, q.y.clone()))
        } else {
            frame.from_frame(q)
        }
    };
    let mut coords: Vec<Option<Point>> = vec![None; gp.num_vertices()];
    for (m, &v) in cp.verts.iter().enumerate() {
        coords[v as usize] = Some(poly.vertex(m).clone());
    }
    for (v, q) in &placements {
        let p = unmirror(q);
        if coords[*v as usize].replace(p).is_some() {
            return Err(ExtendError::Defect("scaffold placed a vertex twice".into()));
        }
    }

    // Scaffold subgraph: cycle, both drawn paths, and the apex vertex.
    let mut scaffold_verts: Vec<VId> = cp.verts.clone();
    for (v, _) in &placements {
        scaffold_verts.push(*v);
    }
    let (sub, sub_map) = induced_subgraph(gp, &scaffold_verts, gp.outer_face())
        .map_err(|e| ExtendError::Defect(format!("scaffold extraction failed: {e}")))?;
    let sub_drawing = Drawing::new(
        sub_map
            .iter()
            .map(|&v| coords[v as usize].clone().unwrap())
            .collect(),
    );
    let rep = verify(&sub, &sub_drawing, &HashMap::new(), VerifyOptions::default());
    if !rep.ok() {
        return Err(ExtendError::Defect(format!(
            "scaffold drawing invalid: {}",
            rep.first_violation.unwrap_or_default()
        )));
    }

    fill_scaffold_faces(gp, &sub, &sub_map, &mut coords)?;
    let fixed: HashMap<VId, Point> = cp
        .verts
        .iter()
        .enumerate()
        .map(|(m, &v)| (v, poly.vertex(m).clone()))
        .collect();
    finish_drawing(gp, coords, &fixed)
}

#[allow(clippy::too_many_arguments)]
fn scaffold_attempt(
    gp: &PlaneGraph,
    vs: &[VId],
    fpts: &[Point],
    fpoly: &Polygon,
    path_a: &[VId],
    path_c: &[VId],
    j0: usize,
    attempt: u32,
) -> Result<Vec<(VId, Point)>, ExtendError> {
    let k = vs.len();
    let defect = |m: &str| ExtendError::Defect(format!("one-sided scaffold: {m}"));
    let cpos: HashMap<VId, usize> = vs.iter().enumerate().map(|(m, &v)| (v, m)).collect();
    let nbr_positions = |x: VId| -> Vec<usize> {
        gp.rotation(x).iter().filter_map(|n| cpos.get(n).copied()).collect()
    };
    let max_y = fpts.iter().map(|p| p.y.clone()).max().unwrap();
    let tops: Vec<usize> = (0..k).filter(|&m| fpts[m].y == max_y).collect();
    let (t1, t2) = (tops[0], *tops.last().unwrap());
    let l2 = fpts[k - 1].x.clone();

    // Line through the first top with the slope of its incoming edge.
    let din = fpts[t1 - 1].to(&fpts[t1]);
    if din.x <= Rat::zero() || din.y <= Rat::zero() {
        return Err(defect("edge into the top does not rise rightward"));
    }
    let s_i = &din.y / &din.x;
    let eps = &s_i / rat(1 << (attempt + 2).min(30));

    // Dipped leftward ray from an interior base point right of where the top
    // line meets the base.
    let xi0 = &fpts[t1].x - &fpts[t1].y * (&din.x / &din.y);
    let lo = if xi0 > Rat::zero() { xi0.clone() } else { Rat::zero() };
    if lo >= l2 {
        return Err(defect("no room for the ray origin on the base"));
    }
    let beta = simplest_in_open(&lo, &l2);
    let ray_origin = Point::new(beta, Rat::zero());
    let ray_dir = Vec2::new(rat(-1), -eps.clone());
    let line_i = Line::through(&fpts[t1 - 1], &fpts[t1]);
    let ray = crate::geometry::line::Ray::new(ray_origin.clone(), ray_dir.clone());
    let t_q = ray
        .param_at_line(&line_i)
        .filter(|t| *t > Rat::zero())
        .ok_or_else(|| defect("dipped ray misses the top line"))?;

    // Split the first anchor path into the low part (left chain and v_k
    // neighbors) and the high part (neighbors past the top).
    let tail = &path_a[1..];
    let is_high = |x: VId| nbr_positions(x).iter().any(|&f| f >= t2 && f <= j0 && f > 0);
    let split = tail.iter().position(|&x| is_high(x)).unwrap_or(tail.len());
    let (lows, highs) = tail.split_at(split);
    for &x in lows {
        if nbr_positions(x).iter().any(|&f| f > t1 && f < k - 1) {
            return Err(defect("low path vertex adjacent past the top"));
        }
    }
    for &x in highs {
        if nbr_positions(x).contains(&(k - 1)) {
            return Err(defect("high path vertex adjacent to the base end"));
        }
    }

    let sees_all = |p: &Point, x: VId| -> bool {
        nbr_positions(x)
            .iter()
            .all(|&f| external_sees_vertex(fpoly, p, f).unwrap_or(false))
    };

    let mut placements: Vec<(VId, Point)> = Vec::new();
    let grow = rat(2);
    let mut t = &t_q * rat(1 << (attempt + 1).min(30));
    for &x in lows {
        let mut placed = false;
        for _ in 0..48 {
            t = &t * &grow;
            let p = ray.at(&t);
            if sees_all(&p, x) {
                placements.push((x, p));
                placed = true;
                break;
            }
        }
        if !placed {
            return Err(defect("low placement found no visible position"));
        }
    }
    t = &t * &grow;
    let p_pt = ray.at(&t);

    // Three slopes strictly between the edge slopes at the split vertex, all
    // negative so that the upper carrier runs up-left and the lower carrier
    // down-right.
    let dout = fpts[j0].to(&fpts[(j0 + 1) % k]);
    if dout.x <= Rat::zero() || dout.y >= Rat::zero() {
        return Err(defect("edge out of the split vertex does not descend rightward"));
    }
    let s_w = &dout.y / &dout.x;
    let din_j = fpts[j0 - 1].to(&fpts[j0]);
    if din_j.x <= Rat::zero() {
        return Err(defect("edge into the split vertex is not rightward"));
    }
    let s_u = &din_j.y / &din_j.x;
    let upper = if s_u < Rat::zero() { s_u.clone() } else { Rat::zero() };
    let frac = |num: i64, den: i64| rat(num) / rat(den);
    let s_a = &upper + (&s_w - &upper) * frac(1, 4);
    let s_l = &upper + (&s_w - &upper) * frac(1, 2);
    let s_c = &upper + (&s_w - &upper) * frac(3, 4);

    let line_at = |slope: &Rat, through: &Point| -> Line {
        Line::through(through, &through.add(&Vec2::new(Rat::one(), slope.clone())))
    };
    let l_a = line_at(&s_a, &fpts[j0]);
    let l_c_line = line_at(&s_c, &fpts[j0]);
    let l_a2 = line_at(&s_l, &p_pt);
    let p_a = l_a2.intersection(&l_a).ok_or_else(|| defect("upper carriers parallel"))?;
    if p_a.y <= max_y {
        return Err(defect("upper meeting point not above the polygon"));
    }
    let p_c = l_a2.intersection(&l_c_line).ok_or_else(|| defect("lower carriers parallel"))?;
    if p_c.y >= Rat::zero() {
        return Err(defect("lower meeting point not below the base"));
    }

    // High placements walk the upper carrier beyond p_a, keeping the chain
    // x-monotone and above the polygon.
    let dir_up = p_pt.to(&p_a);
    let mut last_x = placements.last().map(|(_, p)| p.x.clone()).unwrap_or_else(|| rat(0));
    let mut tu = Rat::one();
    for &x in highs {
        let mut placed = false;
        for _ in 0..48 {
            tu = &tu * &grow;
            let p = p_pt.add_scaled(&dir_up, &tu);
            if p.y > max_y && p.x < last_x && sees_all(&p, x) {
                last_x = p.x.clone();
                placements.push((x, p));
                placed = true;
                break;
            }
        }
        if !placed {
            return Err(defect("high placement found no visible position"));
        }
    }

    // The second path descends the lower carrier beyond p_c, strictly below
    // the upper carrier line.
    let below_l_a2 = {
        let probe = Point::new(p_pt.x.clone(), &p_pt.y - rat(1));
        let side = l_a2.eval(&probe);
        let sense = if side > Rat::zero() { Sense::Greater } else { Sense::Less };
        HalfPlane::new(l_a2.clone(), sense)
    };
    let dir_c = Vec2::new(Rat::one(), s_c.clone());
    let mut tc = (&p_c.x - &fpts[j0].x).max(Rat::one());
    let mut last_cx = l2.clone();
    let mut cpath_pts: Vec<(VId, Point)> = Vec::new();
    for &x in &path_c[1..] {
        let mut placed = false;
        for _ in 0..48 {
            tc = &tc * &grow;
            let p = fpts[j0].add_scaled(&dir_c, &tc);
            if p.y < Rat::zero()
                && p.x > last_cx
                && below_l_a2.contains(&p)
                && sees_all(&p, x)
            {
                last_cx = p.x.clone();
                cpath_pts.push((x, p));
                placed = true;
                break;
            }
        }
        if !placed {
            return Err(defect("lower placement found no visible position"));
        }
    }

    placements.extend(cpath_pts);

    // The outer chain of the drawn scaffold minus the apex: compute it
    // combinatorially (it may run over polygon tops, not through the base),
    // then place the apex above all of its edge lines.
    let outer: HashSet<VId> = gp.outer_face().iter().copied().collect();
    let a_v = *path_a.last().unwrap();
    let c_v = *path_c.last().unwrap();
    let b_v = *outer
        .iter()
        .find(|&&v| v != a_v && v != c_v)
        .ok_or_else(|| defect("apex outer vertex missing"))?;
    let mut prime_verts: HashSet<VId> = vs.iter().copied().collect();
    prime_verts.extend(path_a.iter().copied());
    prime_verts.extend(path_c.iter().copied());
    let prime_edges = super::induced_edge_set(gp, &prime_verts);
    let walk = super::subgraph_outer_walk(gp, &gp.faces(), &prime_edges)?;
    // Rotate so the walk starts at a_v and ends at c_v (dropping the closing
    // a-c edge), or the reverse.
    let pa = walk
        .iter()
        .position(|&v| v == a_v)
        .ok_or_else(|| defect("first path end missing from the outer chain"))?;
    let rotated: Vec<VId> = (0..walk.len()).map(|i| walk[(pa + i) % walk.len()]).collect();
    let chain_verts: Vec<VId> = if *rotated.last().unwrap() == c_v {
        rotated
    } else if rotated.get(1) == Some(&c_v) {
        let mut r: Vec<VId> = rotated;
        r.rotate_left(1);
        r.reverse();
        r
    } else {
        return Err(defect("outer chain does not end at the second path"));
    };
    let frame_pt = |v: VId| -> Result<Point, ExtendError> {
        if let Some(m) = vs.iter().position(|&x| x == v) {
            return Ok(fpts[m].clone());
        }
        placements
            .iter()
            .find(|(x, _)| *x == v)
            .map(|(_, p)| p.clone())
            .ok_or_else(|| defect("chain vertex unplaced"))
    };
    let chain: Vec<Point> =
        chain_verts.iter().map(|&v| frame_pt(v)).collect::<Result<_, _>>()?;
    for w in chain.windows(2) {
        if w[1].x <= w[0].x {
            return Err(defect("chain is not x-monotone"));
        }
    }

    let above = |p: &Point, q: &Point| -> HalfPlane {
        let line = Line::through(p, q);
        let sense = if line.b > Rat::zero() { Sense::Greater } else { Sense::Less };
        HalfPlane::new(line, sense)
    };
    let mut constraints: Vec<HalfPlane> = chain.windows(2).map(|w| above(&w[0], &w[1])).collect();
    constraints.push(above(chain.first().unwrap(), chain.last().unwrap()));
    let b_raw = feasible_point(&constraints).ok_or_else(|| defect("no region above the chain"))?;
    let b_pt = snap_point_with(&b_raw, |p| constraints.iter().all(|h| h.contains(p)));
    placements.push((b_v, b_pt));
    Ok(placements)
}
