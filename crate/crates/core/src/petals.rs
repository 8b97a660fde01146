//! Petals and stamens of a cycle: enumeration from the embedding,
//! realizability on a prescribed convex polygon, apex/cone construction,
//! the shell structure of outermost petals and stamens, and disjoint
//! chordless anchor paths to the outer face.

use crate::geometry::feasibility::{strict_halfplane_witness, Feasibility};
use crate::geometry::line::HalfPlane;
use crate::geometry::point::Point;
use crate::geometry::polygon::Polygon;
use crate::geometry::rat::Rat;
use crate::plane_graph::{
    is_maximal, is_strictly_internal, norm_edge, outer_chords, side_map, CycleRef, PlaneGraph,
    Side, SideMap, VId,
};
use num_traits::Zero;
use std::collections::{HashMap, HashSet, VecDeque};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum PetalError {
    #[error("flat vertex unsupported")]
    FlatVertex,
    #[error("petal is not realizable")]
    Unrealizable,
    #[error("shell structure precondition failed: {0}")]
    Precondition(String),
    #[error("anchor path hypothesis violated: {0} and {1} are internal to a common petal")]
    CommonPetal(String, String),
    #[error("internal connectivity failure")]
    ConnectivityFailure,
    #[error("internal structure error: {0}")]
    Structure(String),
}

/// A vertex outside the cycle with at least two cycle neighbors.
#[derive(Clone, Debug)]
pub struct Petal {
    pub w: VId,
    /// Position on the cycle of the first extreme neighbor (clockwise).
    pub i: usize,
    /// Position of the last extreme neighbor.
    pub j: usize,
    /// Cycle neighbors of `w`, ordered clockwise along the base.
    pub neighbors: Vec<VId>,
    pub neighbor_positions: Vec<usize>,
    pub trivial: bool,
}

impl Petal {
    /// Base length in edges, in `1..k`.
    pub fn base_len(&self, k: usize) -> usize {
        (self.j + k - self.i) % k
    }

    /// Is cycle position `t` strictly inside the base arc?
    pub fn position_internal(&self, t: usize, k: usize) -> bool {
        let off = (t + k - self.i) % k;
        off > 0 && off < self.base_len(k)
    }
}

/// A vertex outside the cycle with exactly one cycle neighbor.
#[derive(Clone, Debug)]
pub struct Stamen {
    pub w: VId,
    /// Position on the cycle of the single neighbor.
    pub anchor: usize,
}

#[derive(Clone, Debug, Default)]
pub struct PetalSet {
    pub petals: Vec<Petal>,
    pub stamens: Vec<Stamen>,
}

impl PetalSet {
    pub fn petal_of(&self, w: VId) -> Option<&Petal> {
        self.petals.iter().find(|p| p.w == w)
    }
}

/// Enumerate all petals and stamens of `c` in `g`.
///
/// The base extremes of a petal are read off the boundary of the plane
/// subgraph induced by the cycle plus the petal; the wedge of the petal
/// facing the outer region is located by a dual search from the outer face
/// that crosses neither cycle edges nor the petal's own star.
pub fn enumerate(g: &PlaneGraph, c: &CycleRef, sm: &SideMap) -> Result<PetalSet, PetalError> {
    let k = c.len();
    let cpos: HashMap<VId, usize> = c.verts.iter().enumerate().map(|(t, &v)| (v, t)).collect();
    let cycle_edges = c.edge_set();
    let mut petals = Vec::new();
    let mut stamens = Vec::new();
    for w in g.vertices() {
        if sm.vertex_side[w as usize] != Side::Outside {
            continue;
        }
        let cnbrs: Vec<VId> =
            g.rotation(w).iter().copied().filter(|x| cpos.contains_key(x)).collect();
        match cnbrs.len() {
            0 => {}
            1 => stamens.push(Stamen { w, anchor: cpos[&cnbrs[0]] }),
            _ => {
                let (vi, vj) = petal_extremes(g, sm, &cycle_edges, w, &cnbrs)?;
                let i = cpos[&vi];
                let j = cpos[&vj];
                let len = (j + k - i) % k;
                if len == 0 {
                    return Err(PetalError::Structure(format!(
                        "degenerate base for petal {}",
                        g.id(w)
                    )));
                }
                let mut nbrs: Vec<(usize, VId)> = cnbrs
                    .iter()
                    .map(|&x| ((cpos[&x] + k - i) % k, x))
                    .collect();
                nbrs.sort_unstable();
                if nbrs.iter().any(|&(off, _)| off > len) {
                    return Err(PetalError::Structure(format!(
                        "petal {} has a neighbor outside its base",
                        g.id(w)
                    )));
                }
                let neighbor_positions: Vec<usize> =
                    nbrs.iter().map(|&(off, _)| (i + off) % k).collect();
                let neighbors: Vec<VId> = nbrs.into_iter().map(|(_, x)| x).collect();
                petals.push(Petal { w, i, j, neighbors, neighbor_positions, trivial: len == 1 });
            }
        }
    }
    Ok(PetalSet { petals, stamens })
}

fn petal_extremes(
    g: &PlaneGraph,
    sm: &SideMap,
    cycle_edges: &HashSet<(VId, VId)>,
    w: VId,
    cnbrs: &[VId],
) -> Result<(VId, VId), PetalError> {
    let faces = &sm.faces;
    let star: HashSet<(VId, VId)> = cnbrs.iter().map(|&x| norm_edge(w, x)).collect();
    let mut seen = vec![false; faces.walks.len()];
    let mut queue = VecDeque::from([faces.outer]);
    seen[faces.outer] = true;
    let mut hit = None;
    while let Some(f) = queue.pop_front() {
        let walk = &faces.walks[f];
        if walk.contains(&w) {
            hit = Some(f);
            break;
        }
        for t in 0..walk.len() {
            let (u, v) = (walk[t], walk[(t + 1) % walk.len()]);
            let key = norm_edge(u, v);
            if cycle_edges.contains(&key) || star.contains(&key) {
                continue;
            }
            let f2 = faces.face_of_dart(v, u);
            if !seen[f2] {
                seen[f2] = true;
                queue.push_back(f2);
            }
        }
    }
    let f = hit.ok_or_else(|| {
        PetalError::Structure(format!("no outer wedge found for petal {}", g.id(w)))
    })?;
    // Darts (x -> w), (w -> y) locate the outer wedge in w's rotation.
    let walk = &faces.walks[f];
    let t = walk.iter().position(|&v| v == w).unwrap();
    let x = walk[(t + walk.len() - 1) % walk.len()];
    let y = walk[(t + 1) % walk.len()];
    let rot = g.rotation(w);
    let deg = rot.len();
    let cset: HashSet<VId> = cnbrs.iter().copied().collect();
    let py = rot.iter().position(|&z| z == y).unwrap();
    let px = rot.iter().position(|&z| z == x).unwrap();
    // v_j: first cycle neighbor clockwise from y (inclusive);
    // v_i: first cycle neighbor counterclockwise from x (inclusive).
    let vj = (0..deg).map(|s| rot[(py + s) % deg]).find(|z| cset.contains(z)).unwrap();
    let vi = (0..deg).map(|s| rot[(px + deg - s) % deg]).find(|z| cset.contains(z)).unwrap();
    Ok((vi, vj))
}

/// Closed-form realizability of a petal on a convex clockwise polygon: a
/// point strictly beyond every base edge exists iff the base turns by less
/// than pi, decided by the first and last base edge directions.
pub fn is_realizable(gamma: &Polygon, p: &Petal) -> bool {
    if p.trivial {
        return true;
    }
    let k = gamma.len();
    let d_first = gamma.vertex(p.i).to(gamma.vertex(p.i + 1));
    let d_last = gamma.vertex((p.j + k - 1) % k).to(gamma.vertex(p.j));
    d_first.cross(&d_last) < Rat::zero()
}

/// Beyond half-planes of every base edge of a petal.
pub fn base_beyond_halfplanes(gamma: &Polygon, p: &Petal) -> Vec<HalfPlane> {
    let k = gamma.len();
    (0..p.base_len(k))
        .map(|s| {
            HalfPlane::beyond_edge(gamma.vertex((p.i + s) % k), gamma.vertex((p.i + s + 1) % k))
        })
        .collect()
}

/// Independent realizability oracle: exact feasibility of the open wedge
/// beyond all base edges, with an infeasibility certificate of at most three
/// base edges when empty.
pub fn realizable_oracle(gamma: &Polygon, p: &Petal) -> Feasibility {
    strict_halfplane_witness(&base_beyond_halfplanes(gamma, p))
}

#[derive(Clone, Debug)]
pub enum ConeRegion {
    /// Open intersection of the two extreme beyond half-planes.
    Wedge(HalfPlane, HalfPlane),
    /// Single beyond half-plane (trivial petal).
    Half(HalfPlane),
    /// Open union of the beyond half-planes at a stamen anchor.
    Union(HalfPlane, HalfPlane),
}

#[derive(Clone, Debug)]
pub struct Cone {
    pub apex: Point,
    pub region: ConeRegion,
}

impl Cone {
    pub fn contains(&self, p: &Point) -> bool {
        match &self.region {
            ConeRegion::Wedge(a, b) => a.contains(p) && b.contains(p),
            ConeRegion::Half(a) => a.contains(p),
            ConeRegion::Union(a, b) => a.contains(p) || b.contains(p),
        }
    }
}

/// Apex and cone of a petal. Errors on unrealizable petals.
pub fn apex_cone_petal(gamma: &Polygon, p: &Petal) -> Result<Cone, PetalError> {
    let k = gamma.len();
    if p.trivial {
        let a = gamma.vertex(p.i);
        let b = gamma.vertex(p.j);
        return Ok(Cone {
            apex: a.midpoint(b),
            region: ConeRegion::Half(HalfPlane::beyond_edge(a, b)),
        });
    }
    if !is_realizable(gamma, p) {
        return Err(PetalError::Unrealizable);
    }
    let first = HalfPlane::beyond_edge(gamma.vertex(p.i), gamma.vertex(p.i + 1));
    let last = HalfPlane::beyond_edge(gamma.vertex((p.j + k - 1) % k), gamma.vertex(p.j));
    let apex = first.line.intersection(&last.line).ok_or(PetalError::Unrealizable)?;
    Ok(Cone { apex, region: ConeRegion::Wedge(first, last) })
}

/// Apex and cone of a stamen: the anchor vertex and the union of the beyond
/// half-planes of its two incident cycle edges.
pub fn apex_cone_stamen(gamma: &Polygon, s: &Stamen) -> Cone {
    let k = gamma.len();
    let prev = gamma.vertex((s.anchor + k - 1) % k);
    let here = gamma.vertex(s.anchor);
    let next = gamma.vertex(s.anchor + 1);
    Cone {
        apex: here.clone(),
        region: ConeRegion::Union(
            HalfPlane::beyond_edge(prev, here),
            HalfPlane::beyond_edge(here, next),
        ),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Item {
    Petal(usize),
    Stamen(usize),
}

/// Outermost petals and stamens, the shell cycle through exactly them, and
/// the nesting forest.
pub struct ShellStructure {
    pub set: PetalSet,
    /// Outermost items in shell-cycle order.
    pub outermost: Vec<Item>,
    /// Vertices of the outermost items, cyclically ordered.
    pub shell_cycle: Vec<VId>,
    /// Nesting parents (petal index) per petal / stamen.
    pub petal_parent: Vec<Option<usize>>,
    pub stamen_parent: Vec<Option<usize>>,
}

impl ShellStructure {
    pub fn item_vertex(&self, it: Item) -> VId {
        match it {
            Item::Petal(i) => self.set.petals[i].w,
            Item::Stamen(i) => self.set.stamens[i].w,
        }
    }
}

/// Outside fan at cycle position `t`: neighbors of `c[t]` strictly between
/// the predecessor and successor cycle edges, read clockwise from the
/// predecessor side. Every fan edge is embedded outside the cycle.
pub fn outside_fan(
    g: &PlaneGraph,
    c: &CycleRef,
    sm: &SideMap,
    t: usize,
) -> Result<Vec<VId>, PetalError> {
    let k = c.len();
    let u = c.verts[t];
    let p = c.verts[(t + k - 1) % k];
    let s = c.verts[(t + 1) % k];
    let rot = g.rotation(u);
    let deg = rot.len();
    let pp = rot
        .iter()
        .position(|&z| z == p)
        .ok_or_else(|| PetalError::Structure("cycle predecessor missing in rotation".into()))?;
    let mut fan = Vec::new();
    let mut idx = (pp + 1) % deg;
    while rot[idx] != s {
        fan.push(rot[idx]);
        idx = (idx + 1) % deg;
        if fan.len() > deg {
            return Err(PetalError::Structure("rotation scan did not terminate".into()));
        }
    }
    for &x in &fan {
        let outside = if c.contains(x) {
            sm.edge_side(u, x) == Side::Outside
        } else {
            sm.vertex_side[x as usize] == Side::Outside
        };
        if !outside {
            return Err(PetalError::Structure(format!(
                "outside fan of {} contains non-outside member {}",
                g.id(u),
                g.id(x)
            )));
        }
    }
    Ok(fan)
}

/// Compute the shell structure of a maximal plane graph with `c` strictly
/// internal and outerchordless.
pub fn shell_structure(g: &PlaneGraph, c: &CycleRef) -> Result<ShellStructure, PetalError> {
    let sm = side_map(g, c).map_err(|e| PetalError::Precondition(e.to_string()))?;
    if !is_maximal(g) {
        return Err(PetalError::Precondition("graph is not maximal".into()));
    }
    if !is_strictly_internal(g, c) {
        return Err(PetalError::Precondition("cycle is not strictly internal".into()));
    }
    if !outer_chords(g, c, &sm).is_empty() {
        return Err(PetalError::Precondition("cycle has outer chords".into()));
    }
    let set = enumerate(g, c, &sm)?;
    shell_from_set(g, c, &sm, set)
}

/// Nesting parents of all petals and stamens: interval containment with fan
/// tie-breaks at shared base endpoints.
pub fn petal_nesting(
    g: &PlaneGraph,
    c: &CycleRef,
    sm: &SideMap,
    set: &PetalSet,
) -> Result<(Vec<Option<usize>>, Vec<Option<usize>>), PetalError> {
    let k = c.len();
    let mut fan_pos: Vec<HashMap<VId, usize>> = Vec::with_capacity(k);
    for t in 0..k {
        let fan = outside_fan(g, c, sm, t)?;
        fan_pos.push(fan.iter().enumerate().map(|(p, &x)| (x, p)).collect());
    }

    let interval = |it: Item| -> (usize, usize) {
        match it {
            Item::Petal(p) => (set.petals[p].i, set.petals[p].base_len(k)),
            Item::Stamen(s) => (set.stamens[s].anchor, 0),
        }
    };
    let vertex_of = |it: Item| -> VId {
        match it {
            Item::Petal(p) => set.petals[p].w,
            Item::Stamen(s) => set.stamens[s].w,
        }
    };
    // u nested in petal w: u's interval inside w's base; ties at a shared
    // base start (resp. end) resolve by fan order there: nested items come
    // after (resp. before) w.
    let nested_in = |u: Item, wp: usize| -> bool {
        let w = &set.petals[wp];
        if vertex_of(u) == w.w {
            return false;
        }
        let wlen = w.base_len(k);
        let (ui, ulen) = interval(u);
        let off = (ui + k - w.i) % k;
        if off > wlen || off + ulen > wlen {
            return false;
        }
        if off == 0 {
            match (fan_pos[w.i].get(&vertex_of(u)), fan_pos[w.i].get(&w.w)) {
                (Some(&a), Some(&b)) if a > b => {}
                _ => return false,
            }
        }
        if off + ulen == wlen {
            match (fan_pos[w.j].get(&vertex_of(u)), fan_pos[w.j].get(&w.w)) {
                (Some(&a), Some(&b)) if a < b => {}
                _ => return false,
            }
        }
        true
    };

    let items: Vec<Item> = (0..set.petals.len())
        .map(Item::Petal)
        .chain((0..set.stamens.len()).map(Item::Stamen))
        .collect();

    let mut petal_parent = vec![None; set.petals.len()];
    let mut stamen_parent = vec![None; set.stamens.len()];
    for &it in &items {
        let mut best: Option<usize> = None;
        for wp in 0..set.petals.len() {
            if !nested_in(it, wp) {
                continue;
            }
            best = Some(match best {
                None => wp,
                Some(cur) => {
                    let (lc, lw) = (set.petals[cur].base_len(k), set.petals[wp].base_len(k));
                    if lw < lc || (lw == lc && nested_in(Item::Petal(wp), cur)) {
                        wp
                    } else {
                        cur
                    }
                }
            });
        }
        match it {
            Item::Petal(p) => petal_parent[p] = best,
            Item::Stamen(s) => stamen_parent[s] = best,
        }
    }
    Ok((petal_parent, stamen_parent))
}

pub(crate) fn shell_from_set(
    g: &PlaneGraph,
    c: &CycleRef,
    sm: &SideMap,
    set: PetalSet,
) -> Result<ShellStructure, PetalError> {
    let k = c.len();
    let (petal_parent, stamen_parent) = petal_nesting(g, c, sm, &set)?;
    let mut fan_pos: Vec<HashMap<VId, usize>> = Vec::with_capacity(k);
    for t in 0..k {
        let fan = outside_fan(g, c, sm, t)?;
        fan_pos.push(fan.iter().enumerate().map(|(p, &x)| (x, p)).collect());
    }
    let interval = |it: Item| -> (usize, usize) {
        match it {
            Item::Petal(p) => (set.petals[p].i, set.petals[p].base_len(k)),
            Item::Stamen(s) => (set.stamens[s].anchor, 0),
        }
    };
    let vertex_of = |it: Item| -> VId {
        match it {
            Item::Petal(p) => set.petals[p].w,
            Item::Stamen(s) => set.stamens[s].w,
        }
    };
    let items: Vec<Item> = (0..set.petals.len())
        .map(Item::Petal)
        .chain((0..set.stamens.len()).map(Item::Stamen))
        .collect();

    let mut outer: Vec<Item> = items
        .iter()
        .copied()
        .filter(|&it| match it {
            Item::Petal(p) => petal_parent[p].is_none(),
            Item::Stamen(s) => stamen_parent[s].is_none(),
        })
        .collect();
    outer.sort_by_key(|&it| {
        let (i, _) = interval(it);
        let f = fan_pos[i].get(&vertex_of(it)).copied().unwrap_or(usize::MAX);
        (i, f)
    });
    let shell_cycle: Vec<VId> = outer.iter().map(|&it| vertex_of(it)).collect();

    if shell_cycle.len() < 3 {
        return Err(PetalError::Structure(format!(
            "shell cycle too short: {} items",
            shell_cycle.len()
        )));
    }
    let distinct: HashSet<VId> = shell_cycle.iter().copied().collect();
    if distinct.len() != shell_cycle.len() {
        return Err(PetalError::Structure("shell cycle repeats a vertex".into()));
    }
    for t in 0..shell_cycle.len() {
        let u = shell_cycle[t];
        let v = shell_cycle[(t + 1) % shell_cycle.len()];
        if !g.has_edge(u, v) {
            return Err(PetalError::Structure(format!(
                "outermost items {} and {} not adjacent",
                g.id(u),
                g.id(v)
            )));
        }
    }
    Ok(ShellStructure { set, outermost: outer, shell_cycle, petal_parent, stamen_parent })
}

/// Three vertex-disjoint chordless paths from `u`, `v` and a third cycle
/// vertex to the three outer-face vertices, meeting the cycle only at their
/// first vertices.
pub struct AnchorPaths {
    pub w: VId,
    pub path_u: Vec<VId>,
    pub path_v: Vec<VId>,
    pub path_w: Vec<VId>,
}

pub fn anchor_paths(
    g: &PlaneGraph,
    c: &CycleRef,
    u: VId,
    v: VId,
    set: &PetalSet,
) -> Result<AnchorPaths, PetalError> {
    let k = c.len();
    let pu = c.position(u).ok_or_else(|| PetalError::Precondition("u not on cycle".into()))?;
    let pv = c.position(v).ok_or_else(|| PetalError::Precondition("v not on cycle".into()))?;
    for p in &set.petals {
        if p.position_internal(pu, k) && p.position_internal(pv, k) {
            return Err(PetalError::CommonPetal(g.id(u).into(), g.id(v).into()));
        }
    }

    let mut net = FlowNet::new(g, c);
    net.open_source(u);
    net.open_source(v);
    if !net.augment() || !net.augment() {
        return Err(PetalError::ConnectivityFailure);
    }
    for &w in &c.verts {
        if w != u && w != v {
            net.open_source(w);
        }
    }
    if !net.augment() {
        return Err(PetalError::ConnectivityFailure);
    }
    let mut paths = net.extract_paths();
    let mut take = |s: VId| -> Result<Vec<VId>, PetalError> {
        let idx = paths
            .iter()
            .position(|p: &Vec<VId>| p[0] == s)
            .ok_or_else(|| PetalError::Structure("missing flow path".into()))?;
        Ok(paths.swap_remove(idx))
    };
    let mut path_u = take(u)?;
    let mut path_v = take(v)?;
    let mut path_w = paths
        .pop()
        .ok_or_else(|| PetalError::Structure("missing third flow path".into()))?;
    let w = path_w[0];
    for p in [&mut path_u, &mut path_v, &mut path_w] {
        shortcut_chordless(g, p);
    }
    Ok(AnchorPaths { w, path_u, path_v, path_w })
}

/// Shortcut a path along chords until it is induced.
pub fn shortcut_chordless(g: &PlaneGraph, path: &mut Vec<VId>) {
    'again: loop {
        for a in 0..path.len() {
            for b in (a + 2..path.len()).rev() {
                if g.has_edge(path[a], path[b]) {
                    path.drain(a + 1..b);
                    continue 'again;
                }
            }
        }
        return;
    }
}

/// Unit-capacity node-split flow network: cycle vertices inject flow (sources
/// only, no transit), outside vertices carry at most one path, outer-face
/// vertices absorb one path each.
struct FlowNet {
    // arcs: (to, cap, twin_index); adjacency per node
    adj: Vec<Vec<usize>>,
    arcs: Vec<(usize, i32)>,
    arc_twin: Vec<usize>,
    s: usize,
    t: usize,
    n: usize,
    sources_open: Vec<VId>,
}

impl FlowNet {
    // node ids: in(v) = 2v, out(v) = 2v + 1, S = 2n, T = 2n + 1
    fn new(g: &PlaneGraph, c: &CycleRef) -> Self {
        let n = g.num_vertices();
        let mut net = FlowNet {
            adj: vec![Vec::new(); 2 * n + 2],
            arcs: Vec::new(),
            arc_twin: Vec::new(),
            s: 2 * n,
            t: 2 * n + 1,
            n,
            sources_open: Vec::new(),
        };
        let cyc = c.vertex_set();
        let outer: HashSet<VId> = g.outer_face().iter().copied().collect();
        for x in g.vertices() {
            if cyc.contains(&x) {
                continue;
            }
            net.add_arc(2 * x as usize, 2 * x as usize + 1, 1);
            if outer.contains(&x) {
                net.add_arc(2 * x as usize + 1, net.t, 1);
            }
        }
        for (x, y) in g.edges() {
            let (cx, cy) = (cyc.contains(&x), cyc.contains(&y));
            match (cx, cy) {
                (true, true) => {}
                (true, false) => net.add_arc(2 * x as usize + 1, 2 * y as usize, 1),
                (false, true) => net.add_arc(2 * y as usize + 1, 2 * x as usize, 1),
                (false, false) => {
                    net.add_arc(2 * x as usize + 1, 2 * y as usize, 1);
                    net.add_arc(2 * y as usize + 1, 2 * x as usize, 1);
                }
            }
        }
        net
    }

    fn add_arc(&mut self, from: usize, to: usize, cap: i32) {
        let a = self.arcs.len();
        self.arcs.push((to, cap));
        self.arc_twin.push(a + 1);
        self.adj[from].push(a);
        self.arcs.push((from, 0));
        self.arc_twin.push(a);
        self.adj[to].push(a + 1);
    }

    fn open_source(&mut self, v: VId) {
        self.sources_open.push(v);
        // Cycle vertices have no in-node in use; inject at out(v).
        let (s, t) = (self.s, 2 * v as usize + 1);
        self.add_arc(s, t, 1);
    }

    fn augment(&mut self) -> bool {
        let mut pred: Vec<Option<usize>> = vec![None; self.adj.len()];
        let mut seen = vec![false; self.adj.len()];
        seen[self.s] = true;
        let mut queue = VecDeque::from([self.s]);
        while let Some(x) = queue.pop_front() {
            if x == self.t {
                break;
            }
            for &a in &self.adj[x] {
                let (to, cap) = self.arcs[a];
                if cap > 0 && !seen[to] {
                    seen[to] = true;
                    pred[to] = Some(a);
                    queue.push_back(to);
                }
            }
        }
        if !seen[self.t] {
            return false;
        }
        let mut cur = self.t;
        while cur != self.s {
            let a = pred[cur].unwrap();
            self.arcs[a].1 -= 1;
            let tw = self.arc_twin[a];
            self.arcs[tw].1 += 1;
            cur = self.arcs[tw].0;
        }
        true
    }

    /// Decompose the (at most 3 units of) flow into vertex paths. Unit
    /// vertex capacities make each node's saturated forward arc unique.
    fn extract_paths(&self) -> Vec<Vec<VId>> {
        let mut out = Vec::new();
        for &a in &self.adj[self.s] {
            if self.arcs[self.arc_twin[a]].1 == 0 {
                continue; // source arc carries no flow
            }
            let mut path = Vec::new();
            let mut node = self.arcs[a].0;
            while node != self.t {
                if node < 2 * self.n && node % 2 == 1 {
                    path.push((node / 2) as VId);
                }
                // Forward arcs sit at even indices; a saturated one has
                // residual capacity on its twin.
                let next = self.adj[node]
                    .iter()
                    .copied()
                    .find(|&b| b % 2 == 0 && self.arcs[self.arc_twin[b]].1 > 0);
                match next {
                    Some(b) => node = self.arcs[b].0,
                    None => break,
                }
            }
            out.push(path);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::octahedron;
    use crate::geometry::point::pt;
    use crate::geometry::visibility::external_sees_vertex;
    use crate::plane_graph::plane_graph_from_drawing;

    fn square() -> Polygon {
        Polygon::new(vec![pt(0, 2), pt(2, 2), pt(2, 0), pt(0, 0)])
    }

    fn hexagon() -> Polygon {
        Polygon::new(vec![pt(0, 0), pt(0, 2), pt(1, 3), pt(3, 3), pt(4, 2), pt(4, 0)])
    }

    fn heptagon() -> Polygon {
        Polygon::new(vec![
            pt(0, 0),
            pt(0, 2),
            pt(1, 3),
            pt(3, 3),
            pt(4, 2),
            pt(4, 0),
            pt(3, -1),
        ])
    }

    pub(crate) fn petal_span(i: usize, j: usize, k: usize) -> Petal {
        Petal {
            w: 999,
            i,
            j,
            neighbors: vec![],
            neighbor_positions: vec![i, j],
            trivial: (j + k - i) % k == 1,
        }
    }

    #[test]
    fn octahedron_three_trivial_petals() {
        let g = octahedron();
        let (a, b, c) =
            (g.resolve("a").unwrap(), g.resolve("b").unwrap(), g.resolve("c").unwrap());
        let cyc = CycleRef::new(&g, vec![a, c, b]).unwrap();
        let sm = side_map(&g, &cyc).unwrap();
        let set = enumerate(&g, &cyc, &sm).unwrap();
        assert_eq!(set.petals.len(), 3);
        assert_eq!(set.stamens.len(), 0);
        assert!(set.petals.iter().all(|p| p.trivial));
        // A is drawn lower-left; it faces the edge (a, c).
        let pa = set.petal_of(g.resolve("A").unwrap()).unwrap();
        assert_eq!((cyc.verts[pa.i], cyc.verts[pa.j]), (a, c));
    }

    #[test]
    fn c4_with_pendant_petal_and_stamen() {
        let ids: Vec<String> = (0..5).map(|i| format!("v{i}")).collect();
        let coords = [pt(0, 2), pt(2, 2), pt(2, 0), pt(0, 0), pt(1, 4)];
        let g = plane_graph_from_drawing(
            ids.clone(),
            &[(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 1)],
            &coords,
        )
        .unwrap();
        let cyc = CycleRef::new(&g, vec![0, 1, 2, 3]).unwrap();
        let sm = side_map(&g, &cyc).unwrap();
        let set = enumerate(&g, &cyc, &sm).unwrap();
        assert_eq!(set.petals.len(), 1);
        assert!(set.petals[0].trivial);
        assert_eq!((set.petals[0].i, set.petals[0].j), (0, 1));
        assert!(set.stamens.is_empty());

        let g2 =
            plane_graph_from_drawing(ids, &[(0, 1), (1, 2), (2, 3), (3, 0), (4, 0)], &coords)
                .unwrap();
        let cyc2 = CycleRef::new(&g2, vec![0, 1, 2, 3]).unwrap();
        let sm2 = side_map(&g2, &cyc2).unwrap();
        let set2 = enumerate(&g2, &cyc2, &sm2).unwrap();
        assert!(set2.petals.is_empty());
        assert_eq!(set2.stamens.len(), 1);
        assert_eq!(set2.stamens[0].anchor, 0);
    }

    #[test]
    fn realizability_examples() {
        let s = square();
        assert!(is_realizable(&s, &petal_span(0, 2, 4)));
        let h = hexagon();
        assert!(!is_realizable(&h, &petal_span(0, 5, 6))); // turn exactly pi
        let p7 = heptagon();
        assert!(!is_realizable(&p7, &petal_span(0, 6, 7))); // turn > pi
        for i in 0..7 {
            assert!(is_realizable(&p7, &petal_span(i, (i + 1) % 7, 7)));
        }
    }

    #[test]
    fn oracle_matches_and_witnesses_see_base() {
        let s = square();
        match realizable_oracle(&s, &petal_span(0, 2, 4)) {
            Feasibility::Witness(w) => {
                assert!(w.x > crate::geometry::rat::rat(2));
                assert!(w.y > crate::geometry::rat::rat(2));
                for idx in [0, 1, 2] {
                    assert!(external_sees_vertex(&s, &w, idx).unwrap());
                }
            }
            Feasibility::Infeasible(_) => panic!("should be realizable"),
        }
        match realizable_oracle(&hexagon(), &petal_span(0, 5, 6)) {
            Feasibility::Infeasible(cert) => assert!(cert.len() <= 3),
            Feasibility::Witness(_) => panic!("should be unrealizable"),
        }
    }

    #[test]
    fn apex_cone_examples() {
        let s = square();
        let cone = apex_cone_petal(&s, &petal_span(0, 2, 4)).unwrap();
        assert_eq!(cone.apex, pt(2, 2));
        assert!(cone.contains(&pt(3, 3)));
        assert!(!cone.contains(&pt(3, 1)));
        assert!(!cone.contains(&pt(1, 3)));

        let trivial = apex_cone_petal(&s, &petal_span(0, 1, 4)).unwrap();
        assert_eq!(trivial.apex, pt(1, 2));
        assert!(trivial.contains(&pt(0, 3)));
        assert!(!trivial.contains(&pt(0, 1)));

        let st = apex_cone_stamen(&s, &Stamen { w: 999, anchor: 0 });
        assert_eq!(st.apex, pt(0, 2));
        assert!(st.contains(&pt(-1, 0)));
        assert!(st.contains(&pt(1, 3)));
        assert!(!st.contains(&pt(1, 1)));

        assert!(matches!(
            apex_cone_petal(&hexagon(), &petal_span(0, 5, 6)),
            Err(PetalError::Unrealizable)
        ));
    }

    #[test]
    fn octahedron_shell() {
        let g = octahedron();
        let (a, b, c) =
            (g.resolve("a").unwrap(), g.resolve("b").unwrap(), g.resolve("c").unwrap());
        let cyc = CycleRef::new(&g, vec![a, c, b]).unwrap();
        let shell = shell_structure(&g, &cyc).unwrap();
        assert_eq!(shell.outermost.len(), 3);
        assert_eq!(shell.shell_cycle.len(), 3);
        assert!(shell.petal_parent.iter().all(|p| p.is_none()));
    }

    #[test]
    fn octahedron_anchor_paths() {
        let g = octahedron();
        let (a, b, c) =
            (g.resolve("a").unwrap(), g.resolve("b").unwrap(), g.resolve("c").unwrap());
        let cyc = CycleRef::new(&g, vec![a, c, b]).unwrap();
        let sm = side_map(&g, &cyc).unwrap();
        let set = enumerate(&g, &cyc, &sm).unwrap();
        let ap = anchor_paths(&g, &cyc, a, c, &set).unwrap();
        assert_eq!(ap.w, b);
        for p in [&ap.path_u, &ap.path_v, &ap.path_w] {
            assert_eq!(p.len(), 2, "paths should be single edges, got {p:?}");
        }
        let all: Vec<VId> = [&ap.path_u, &ap.path_v, &ap.path_w]
            .iter()
            .flat_map(|p| p.iter().copied())
            .collect();
        let distinct: HashSet<VId> = all.iter().copied().collect();
        assert_eq!(all.len(), distinct.len());
    }

    #[test]
    fn shortcut_removes_chords() {
        let g = octahedron();
        let (pa, pb, pc) =
            (g.resolve("A").unwrap(), g.resolve("B").unwrap(), g.resolve("C").unwrap());
        let mut path = vec![pa, pb, pc];
        shortcut_chordless(&g, &mut path);
        assert_eq!(path, vec![pa, pc]);
    }
}
