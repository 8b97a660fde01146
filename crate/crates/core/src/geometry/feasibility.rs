//! Exact feasibility of systems of open half-planes.
//!
//! Fourier–Motzkin elimination over rationals. The elimination variable is
//! chosen to minimize the number of derived pairs, which makes the common
//! one-sided systems (all constraints bounding the same direction) linear.
//! Infeasible systems come with a certificate of at most three constraints
//! whose open intersection is already empty (Helly in the plane).

use super::line::HalfPlane;
use super::point::Point;
use super::rat::{simplest_in_open, Rat};
use num_traits::{One, Zero};

#[derive(Clone, Debug)]
pub enum Feasibility {
    /// A point satisfying every constraint strictly.
    Witness(Point),
    /// Indices into the input slice; the referenced open half-planes have
    /// empty intersection. At most 3 entries.
    Infeasible(Vec<usize>),
}

impl Feasibility {
    pub fn witness(&self) -> Option<&Point> {
        match self {
            Feasibility::Witness(p) => Some(p),
            Feasibility::Infeasible(_) => None,
        }
    }
}

/// Decide whether the open intersection of `hs` is nonempty.
pub fn strict_halfplane_witness(hs: &[HalfPlane]) -> Feasibility {
    assert!(!hs.is_empty(), "empty constraint list");
    match solve(hs) {
        Ok(p) => {
            debug_assert!(hs.iter().all(|h| h.contains(&p)), "witness violates a constraint");
            Feasibility::Witness(p)
        }
        Err(cert) => {
            let cert = minimize_certificate(hs, cert);
            debug_assert!(cert.len() <= 3);
            Feasibility::Infeasible(cert)
        }
    }
}

/// Convenience: witness point or None.
pub fn feasible_point(hs: &[HalfPlane]) -> Option<Point> {
    match strict_halfplane_witness(hs) {
        Feasibility::Witness(p) => Some(p),
        Feasibility::Infeasible(_) => None,
    }
}

// One normalized constraint a·x + b·y < c remembering its origin.
struct Norm {
    a: Rat,
    b: Rat,
    c: Rat,
    tags: Vec<usize>,
}

fn solve(hs: &[HalfPlane]) -> Result<Point, Vec<usize>> {
    let cons: Vec<Norm> = hs
        .iter()
        .enumerate()
        .map(|(i, h)| {
            let (a, b, c) = h.as_less_than();
            Norm { a, b, c, tags: vec![i] }
        })
        .collect();

    // Count sign classes of each variable's coefficient to pick the cheaper
    // elimination.
    let (mut px, mut nx, mut py, mut ny) = (0usize, 0usize, 0usize, 0usize);
    for k in &cons {
        if k.a > Rat::zero() {
            px += 1;
        } else if k.a < Rat::zero() {
            nx += 1;
        }
        if k.b > Rat::zero() {
            py += 1;
        } else if k.b < Rat::zero() {
            ny += 1;
        }
    }
    let eliminate_x = px * nx <= py * ny;
    let cons = if eliminate_x {
        cons
    } else {
        cons.into_iter()
            .map(|k| Norm { a: k.b, b: k.a, c: k.c, tags: k.tags })
            .collect()
    };

    // Eliminate the first variable; derive constraints on the second.
    let mut derived: Vec<Norm> = Vec::new();
    let mut uppers: Vec<&Norm> = Vec::new(); // a > 0: x < (c - b y)/a
    let mut lowers: Vec<&Norm> = Vec::new(); // a < 0: x > (c - b y)/a
    for k in &cons {
        if k.a > Rat::zero() {
            uppers.push(k);
        } else if k.a < Rat::zero() {
            lowers.push(k);
        } else {
            derived.push(Norm { a: Rat::zero(), b: k.b.clone(), c: k.c.clone(), tags: k.tags.clone() });
        }
    }
    for i in &uppers {
        for j in &lowers {
            // (c_j - b_j y)/a_j < (c_i - b_i y)/a_i with a_i > 0 > a_j
            // <=> (a_j b_i - a_i b_j) y > a_j c_i - a_i c_j
            let s = &j.a * &i.b - &i.a * &j.b;
            let t = &j.a * &i.c - &i.a * &j.c;
            let mut tags = i.tags.clone();
            tags.extend_from_slice(&j.tags);
            derived.push(Norm { a: Rat::zero(), b: -s, c: -t, tags });
        }
    }

    // 1D problem in y: b·y < c.
    let mut lo: Option<(Rat, &Vec<usize>)> = None;
    let mut hi: Option<(Rat, &Vec<usize>)> = None;
    for k in &derived {
        if k.b.is_zero() {
            if k.c <= Rat::zero() {
                return Err(k.tags.clone());
            }
        } else {
            let bound = &k.c / &k.b;
            if k.b > Rat::zero() {
                if hi.as_ref().map_or(true, |(h, _)| bound < *h) {
                    hi = Some((bound, &k.tags));
                }
            } else if lo.as_ref().map_or(true, |(l, _)| bound > *l) {
                lo = Some((bound, &k.tags));
            }
        }
    }
    if let (Some((l, lt)), Some((h, ht))) = (&lo, &hi) {
        if l >= h {
            let mut tags = (*lt).clone();
            tags.extend_from_slice(ht);
            return Err(tags);
        }
    }
    let y = pick_in_interval(lo.as_ref().map(|(v, _)| v), hi.as_ref().map(|(v, _)| v));

    // Back-substitute to bound x at this y.
    let mut xlo: Option<Rat> = None;
    let mut xhi: Option<Rat> = None;
    for k in uppers.iter() {
        let bound = (&k.c - &k.b * &y) / &k.a;
        if xhi.as_ref().map_or(true, |h| bound < *h) {
            xhi = Some(bound);
        }
    }
    for k in lowers.iter() {
        let bound = (&k.c - &k.b * &y) / &k.a;
        if xlo.as_ref().map_or(true, |l| bound > *l) {
            xlo = Some(bound);
        }
    }
    debug_assert!(
        match (&xlo, &xhi) {
            (Some(l), Some(h)) => l < h,
            _ => true,
        },
        "x interval empty after feasible elimination"
    );
    let x = pick_in_interval(xlo.as_ref(), xhi.as_ref());

    Ok(if eliminate_x { Point::new(x, y) } else { Point::new(y, x) })
}

fn pick_in_interval(lo: Option<&Rat>, hi: Option<&Rat>) -> Rat {
    match (lo, hi) {
        (None, None) => Rat::zero(),
        (Some(l), None) => l.floor() + Rat::one(),
        (None, Some(h)) => h.ceil() - Rat::one(),
        (Some(l), Some(h)) => simplest_in_open(l, h),
    }
}

// The traced tag set has at most 4 members; Helly's theorem guarantees an
// infeasible subset of size <= 3. Prefer the smallest.
fn minimize_certificate(hs: &[HalfPlane], mut tags: Vec<usize>) -> Vec<usize> {
    tags.sort_unstable();
    tags.dedup();
    if tags.len() <= 1 {
        // A single open half-plane is never empty; this cannot happen.
        return tags;
    }
    for size in 2..=3usize.min(tags.len()) {
        if let Some(sub) = subsets(&tags, size).into_iter().find(|sub| {
            let subset: Vec<HalfPlane> = sub.iter().map(|&i| hs[i].clone()).collect();
            solve(&subset).is_err()
        }) {
            return sub;
        }
    }
    debug_assert!(tags.len() <= 3, "Helly reduction failed");
    tags
}

fn subsets(items: &[usize], size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let n = items.len();
    if size > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..size).collect();
    loop {
        out.push(idx.iter().map(|&i| items[i]).collect());
        // advance combination
        let mut i = size;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + n - size {
                idx[i] += 1;
                for j in i + 1..size {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::line::{Line, Sense};
    use crate::geometry::rat::rat;

    fn hp(a: i64, b: i64, c: i64, sense: Sense) -> HalfPlane {
        HalfPlane::new(Line::new(rat(a), rat(b), rat(c)), sense)
    }

    #[test]
    fn open_quadrant_has_witness() {
        // y > 2, x > 2
        let hs = [hp(0, 1, 2, Sense::Greater), hp(1, 0, 2, Sense::Greater)];
        let w = feasible_point(&hs).expect("feasible");
        assert!(w.x > rat(2) && w.y > rat(2));
    }

    #[test]
    fn contradictory_parallel_constraints() {
        // x < 0, x > 4
        let hs = [hp(1, 0, 0, Sense::Less), hp(1, 0, 4, Sense::Greater)];
        match strict_halfplane_witness(&hs) {
            Feasibility::Infeasible(cert) => assert_eq!(cert, vec![0, 1]),
            Feasibility::Witness(_) => panic!("should be infeasible"),
        }
    }

    #[test]
    fn boundary_is_excluded() {
        // x > 0, x < 0 is empty; so is x > 0, -x > 0.
        let hs = [hp(1, 0, 0, Sense::Greater), hp(1, 0, 0, Sense::Less)];
        assert!(feasible_point(&hs).is_none());
    }

    #[test]
    fn triangle_certificate() {
        // x > 0, y > 0, x + y < 0: pairwise feasible, jointly empty.
        let hs = [
            hp(1, 0, 0, Sense::Greater),
            hp(0, 1, 0, Sense::Greater),
            hp(1, 1, 0, Sense::Less),
        ];
        match strict_halfplane_witness(&hs) {
            Feasibility::Infeasible(cert) => {
                assert_eq!(cert.len(), 3);
                let sub: Vec<HalfPlane> = cert.iter().map(|&i| hs[i].clone()).collect();
                assert!(feasible_point(&sub).is_none());
            }
            Feasibility::Witness(_) => panic!("should be infeasible"),
        }
    }

    #[test]
    fn thin_wedge_witness_is_exact() {
        // y > 1000000 x, y < 1000000 x + 1/1000000, x > 5
        let hs = [
            HalfPlane::new(Line::new(rat(-1_000_000), rat(1), rat(0)), Sense::Greater),
            HalfPlane::new(
                Line::new(rat(-1_000_000_000_000), rat(1_000_000), rat(1)),
                Sense::Less,
            ),
            hp(1, 0, 5, Sense::Greater),
        ];
        let w = feasible_point(&hs).expect("nonempty open wedge");
        for h in &hs {
            assert!(h.contains(&w));
        }
    }
}
