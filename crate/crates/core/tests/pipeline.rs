//! End-to-end construction tests on small named instances.

use drawext::extend::{
    check, extend_convex, extend_free_outer, extend_one_sided, extend_subgraph, Instance,
};
use drawext::fixtures::{octahedron, wheel};
use drawext::geometry::point::{pt, Point};
use drawext::geometry::polygon::Polygon;
use drawext::plane_graph::{plane_graph_from_drawing, CycleRef, PlaneGraph, VId};
use drawext::verify::{verify, Drawing, VerifyOptions};
use std::collections::HashMap;

fn octa_instance(points: [Point; 3]) -> Instance {
    let g = octahedron();
    let (a, c, b) =
        (g.resolve("a").unwrap(), g.resolve("c").unwrap(), g.resolve("b").unwrap());
    let cyc = CycleRef::new(&g, vec![a, c, b]).unwrap();
    Instance::new(g, cyc, Polygon::new(points.to_vec())).unwrap()
}

#[test]
fn octahedron_one_sided_extension() {
    let inst = octa_instance([pt(0, 0), pt(1, 2), pt(3, 0)]);
    let d = extend_one_sided(&inst).unwrap();
    let rep = verify(&inst.g, &d, &inst.fixed_coords(), VerifyOptions::default());
    assert!(rep.ok(), "{rep:?}");
}

#[test]
fn octahedron_convex_extension() {
    let inst = octa_instance([pt(0, 0), pt(2, 4), pt(4, 1)]);
    let (d, _tag) = extend_convex(&inst).unwrap();
    let rep = verify(&inst.g, &d, &inst.fixed_coords(), VerifyOptions::default());
    assert!(rep.ok(), "{rep:?}");
}

#[test]
fn c4_only_trapezoid_one_sided() {
    // Just the cycle: everything added by the completion is removed again,
    // so the drawing equals the polygon.
    let ids: Vec<String> = (0..4).map(|i| format!("v{i}")).collect();
    let coords = [pt(0, 0), pt(1, 2), pt(5, 2), pt(7, 0)];
    let g = plane_graph_from_drawing(ids.clone(), &[(0, 1), (1, 2), (2, 3), (3, 0)], &coords);
    let g = g.unwrap();
    let cyc = CycleRef::new(&g, vec![0, 1, 2, 3]).unwrap();
    let poly = Polygon::new(vec![pt(0, 0), pt(1, 2), pt(5, 2), pt(7, 0)]);
    let inst = Instance::new(g, cyc, poly).unwrap();
    let d = extend_one_sided(&inst).unwrap();
    for (t, &v) in inst.c.verts.iter().enumerate() {
        assert_eq!(d.get(v), inst.polygon.vertex(t));
    }
}

#[test]
fn square_with_wide_petal_convex() {
    // Square cycle with an extra vertex adjacent to v0, v1, v2 outside: a
    // petal spanning two edges, realizable (apex at the corner).
    let ids: Vec<String> = (0..5).map(|i| format!("v{i}")).collect();
    let coords = [pt(0, 2), pt(2, 2), pt(2, 0), pt(0, 0), pt(5, 5)];
    let g = plane_graph_from_drawing(
        ids,
        &[(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 1), (4, 2)],
        &coords,
    )
    .unwrap();
    let cyc = CycleRef::new(&g, vec![0, 1, 2, 3]).unwrap();
    let poly = Polygon::new(vec![pt(0, 2), pt(2, 2), pt(2, 0), pt(0, 0)]);
    let inst = Instance::new(g, cyc, poly).unwrap();
    let rep = check(&inst).unwrap();
    assert!(rep.ok());
    let (d, _tag) = extend_convex(&inst).unwrap();
    let w = inst.g.resolve("v4").unwrap();
    // The petal spans edges (v0,v1) and (v1,v2): its wedge is x > 2, y > 2.
    let p = d.get(w);
    assert!(p.x > drawext::geometry::rat::rat(2) && p.y > drawext::geometry::rat::rat(2));
}

#[test]
fn wheel_free_outer() {
    // W4: rim as the cycle on a one-sided quadrilateral; the graph is
    // maximal, so the free-outer variant applies directly.
    let g = wheel(4);
    let rim: Vec<VId> =
        (0..4).rev().map(|i| g.resolve(&format!("r{i}")).unwrap()).collect();
    let cyc = CycleRef::new(&g, rim).unwrap();
    let poly = Polygon::new(vec![pt(0, 0), pt(1, 2), pt(5, 2), pt(7, 0)]);
    let inst = Instance::new(g, cyc, poly).unwrap();
    let (d, g2) = extend_free_outer(&inst).unwrap();
    let rep = verify(&g2, &d, &inst.fixed_coords(), VerifyOptions::default());
    assert!(rep.ok(), "{rep:?}");
    // hub strictly inside the polygon
    let hub = g2.resolve("h").unwrap();
    assert!(inst.polygon.convex_contains_strict(d.get(hub)));
}

#[test]
fn extend_subgraph_square_with_chord() {
    // g: square + inside chord + inside vertex in one half + an outside
    // trivial petal; h: the square with the chord, drawn convexly.
    let ids: Vec<String> =
        ["v0", "v1", "v2", "v3", "in", "out"].iter().map(|s| s.to_string()).collect();
    let coords = [pt(0, 4), pt(4, 4), pt(4, 0), pt(0, 0), pt(1, 3), pt(6, 5)];
    let g = plane_graph_from_drawing(
        ids,
        &[
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 0),
            (1, 3), // chord
            (4, 0),
            (4, 1),
            (4, 3),
            (5, 1),
            (5, 2),
        ],
        &coords,
    )
    .unwrap();
    let h_ids: Vec<String> = ["v0", "v1", "v2", "v3"].iter().map(|s| s.to_string()).collect();
    let h_coords = [pt(0, 4), pt(4, 4), pt(4, 0), pt(0, 0)];
    let h = plane_graph_from_drawing(
        h_ids,
        &[(0, 1), (1, 2), (2, 3), (3, 0), (1, 3)],
        &h_coords,
    )
    .unwrap();
    let gamma_h = Drawing::new(h_coords.to_vec());
    let d = extend_subgraph(&g, &h, &gamma_h).unwrap();
    let mut fixed: HashMap<VId, Point> = HashMap::new();
    for (hv, id) in ["v0", "v1", "v2", "v3"].iter().enumerate() {
        fixed.insert(g.resolve(id).unwrap(), h_coords[hv].clone());
    }
    let rep = verify(&g, &d, &fixed, VerifyOptions::default());
    assert!(rep.ok(), "{rep:?}");
}

#[test]
fn unrealizable_instance_rejected_by_extend() {
    let hexa = vec![pt(0, 0), pt(0, 2), pt(1, 3), pt(3, 3), pt(4, 2), pt(4, 0)];
    let ids: Vec<String> = (0..7).map(|i| format!("v{i}")).collect();
    let g = PlaneGraph::checked(
        ids,
        vec![
            vec![5, 6, 1],
            vec![0, 2],
            vec![1, 3],
            vec![2, 4],
            vec![3, 5],
            vec![4, 6, 0],
            vec![0, 5],
        ],
        vec![6, 5, 0],
    )
    .unwrap();
    let cyc = CycleRef::new(&g, vec![0, 1, 2, 3, 4, 5]).unwrap();
    let inst = Instance::new(g, cyc, Polygon::new(hexa)).unwrap();
    assert!(extend_convex(&inst).is_err());
    assert!(extend_one_sided(&inst).is_err());
}
