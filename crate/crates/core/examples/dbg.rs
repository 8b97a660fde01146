use drawext::augment::augment;
use drawext::fixtures::octahedron;
use drawext::geometry::point::pt;
use drawext::geometry::polygon::Polygon;
use drawext::petals::{anchor_paths, enumerate};
use drawext::plane_graph::{side_map, CycleRef};

fn main() {
    let g = octahedron();
    let (a, c, b) =
        (g.resolve("a").unwrap(), g.resolve("c").unwrap(), g.resolve("b").unwrap());
    let cyc = CycleRef::new(&g, vec![a, c, b]).unwrap();
    let poly = Polygon::new(vec![pt(0, 0), pt(1, 2), pt(3, 0)]);
    let aug = augment(&g, &cyc).unwrap();
    println!("augment identity: {}", aug.is_identity());
    let gp = &aug.g_prime;
    let cp = CycleRef::new(gp, cyc.verts.clone()).unwrap();
    // base dart: find
    let bases = drawext::extend::one_sided_base_darts_pub(&poly);
    println!("bases: {bases:?}");
    let base = bases[0];
    let k = 3;
    let vs: Vec<_> = (0..k).map(|m| cp.verts[(base + 1 + m) % k]).collect();
    println!("vs = {:?}", vs.iter().map(|&v| gp.id(v)).collect::<Vec<_>>());
    let sm = side_map(gp, &cp).unwrap();
    let set = enumerate(gp, &cp, &sm).unwrap();
    let ap = anchor_paths(gp, &cp, vs[0], vs[k-1], &set).unwrap();
    println!("w = {}", gp.id(ap.w));
    println!("path_u = {:?}", ap.path_u.iter().map(|&v| gp.id(v)).collect::<Vec<_>>());
    println!("path_v = {:?}", ap.path_v.iter().map(|&v| gp.id(v)).collect::<Vec<_>>());
    println!("path_w = {:?}", ap.path_w.iter().map(|&v| gp.id(v)).collect::<Vec<_>>());
    match drawext::extend::extend_one_sided(&drawext::extend::Instance::new(g.clone(), cyc, poly).unwrap()) {
        Ok(d) => {
            for v in g.vertices() {
                println!("{} -> {:?}", g.id(v), d.get(v));
            }
        }
        Err(e) => println!("extend failed: {e}"),
    }
}
