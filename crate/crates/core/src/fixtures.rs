//! Small named plane graphs used by tests, examples and docs.

use crate::geometry::point::{pt, Point};
use crate::plane_graph::{plane_graph_from_drawing, PlaneGraph};

pub fn k3() -> PlaneGraph {
    plane_graph_from_drawing(
        vec!["a".into(), "b".into(), "c".into()],
        &[(0, 1), (1, 2), (2, 0)],
        &[pt(0, 0), pt(2, 0), pt(1, 2)],
    )
    .unwrap()
}

pub fn k4() -> PlaneGraph {
    plane_graph_from_drawing(
        vec!["a".into(), "b".into(), "c".into(), "d".into()],
        &[(0, 1), (1, 2), (2, 0), (0, 3), (1, 3), (2, 3)],
        &[pt(0, 0), pt(4, 0), pt(2, 3), pt(2, 1)],
    )
    .unwrap()
}

/// Octahedron with outer triangle `A, B, C` and inner triangle `a, b, c`.
/// The inner triangle traversed `a, c, b` is clockwise.
pub fn octahedron() -> PlaneGraph {
    let (g, _) = octahedron_with_coords();
    g
}

pub fn octahedron_with_coords() -> (PlaneGraph, Vec<Point>) {
    let ids = vec!["A".into(), "B".into(), "C".into(), "a".into(), "b".into(), "c".into()];
    let coords = vec![pt(0, 0), pt(12, 0), pt(6, 10), pt(4, 2), pt(8, 2), pt(6, 5)];
    let adj = [
        (0, 1),
        (1, 2),
        (2, 0),
        (3, 4),
        (4, 5),
        (5, 3),
        (0, 3),
        (1, 3),
        (1, 4),
        (2, 4),
        (2, 5),
        (0, 5),
    ];
    let g = plane_graph_from_drawing(ids, &adj, &coords).unwrap();
    (g, coords)
}

/// Wheel: rim `r0..r{k-1}` plus hub `h` adjacent to every rim vertex.
pub fn wheel(k: usize) -> PlaneGraph {
    assert!(k >= 3);
    let ids: Vec<String> = (0..k).map(|i| format!("r{i}")).chain(["h".to_string()]).collect();
    // Rim on a coarse circle, hub at the centroid.
    let mut coords: Vec<Point> = Vec::new();
    let r = 1000i64;
    for i in 0..k {
        let ang = 2.0 * std::f64::consts::PI * (i as f64) / (k as f64);
        coords.push(pt((r as f64 * ang.cos()) as i64, (r as f64 * ang.sin()) as i64));
    }
    coords.push(pt(0, 0));
    let mut adj = vec![];
    for i in 0..k {
        adj.push((i, (i + 1) % k));
        adj.push((i, k));
    }
    plane_graph_from_drawing(ids, &adj, &coords).unwrap()
}
