//! Minkowski sum of a straight-line plane tree with a convex octagon.
//!
//! The boundary is traced along an Euler tour that keeps the tree on its left,
//! so the result is counterclockwise. At each visited vertex the walk either
//! wraps around the octagon (left turns and leaf caps), jumps to the meeting
//! point of the two offset lines (right turns), or continues straight.

use std::cmp::Ordering;

use num_traits::{Signed, Zero};

use crate::geometry::{q_frac, Point, Polygon, Q};

/// Vertices of a convex octagon around the origin, counterclockwise, all
/// within the unit disk.
pub(crate) type Shape = [Point; 8];

fn pt(x: Q, y: Q) -> Point {
    Point::new(x, y)
}

/// Axis-aligned octagon used for partition 0.
pub(crate) fn octagon_axis() -> Shape {
    let a = q_frac(7, 10);
    let one = q_frac(1, 1);
    let z = Q::zero();
    [
        pt(one.clone(), z.clone()),
        pt(a.clone(), a.clone()),
        pt(z.clone(), one.clone()),
        pt(-a.clone(), a.clone()),
        pt(-one.clone(), z.clone()),
        pt(-a.clone(), -a.clone()),
        pt(z, -one),
        pt(a.clone(), -a),
    ]
}

/// Octagon rotated against [`octagon_axis`], used for partition 1 so that
/// boundary edges of the two partitions are rarely parallel.
pub(crate) fn octagon_skew() -> Shape {
    let (b, s) = (q_frac(12, 13), q_frac(5, 13));
    [
        pt(b.clone(), s.clone()),
        pt(s.clone(), b.clone()),
        pt(-s.clone(), b.clone()),
        pt(-b.clone(), s.clone()),
        pt(-b.clone(), -s.clone()),
        pt(-s.clone(), -b.clone()),
        pt(s.clone(), -b.clone()),
        pt(b, -s),
    ]
}

/// Upper half-plane first, then by cross product: counterclockwise order from
/// the positive x-axis.
pub(crate) fn angle_cmp(a: &Point, b: &Point) -> Ordering {
    let half = |p: &Point| {
        if p.y.is_positive() || (p.y.is_zero() && p.x.is_positive()) {
            0
        } else {
            1
        }
    };
    half(a).cmp(&half(b)).then_with(|| Q::zero().cmp(&a.cross(b)))
}

/// Index of the shape vertex furthest along `normal`; ties go to the later
/// vertex along `dir` when `prefer_ahead`, else to the earlier one.
fn extreme(shape: &Shape, normal: &Point, dir: &Point, prefer_ahead: bool) -> usize {
    let mut best = 0;
    for i in 1..8 {
        let c = shape[i].dot(normal).cmp(&shape[best].dot(normal));
        let along = shape[i].dot(dir).cmp(&shape[best].dot(dir));
        let better = match c {
            Ordering::Greater => true,
            Ordering::Equal => (along == Ordering::Greater) == prefer_ahead && along != Ordering::Equal,
            Ordering::Less => false,
        };
        if better {
            best = i;
        }
    }
    best
}

fn right_normal(d: &Point) -> Point {
    Point::new(d.y.clone(), -d.x.clone())
}

fn offset(v: &Point, shape: &Shape, i: usize, r: &Q) -> Point {
    v.add(&shape[i].scale(r))
}

/// Buffers the tree with `nodes` and `edges` (a single node when `edges` is
/// empty) by `shape` scaled with `r`.
pub(crate) fn buffer_tree(nodes: &[Point], edges: &[(usize, usize)], shape: &Shape, r: &Q) -> Polygon {
    if edges.is_empty() {
        assert_eq!(nodes.len(), 1, "an edgeless tree has one node");
        return Polygon::new((0..8).map(|i| offset(&nodes[0], shape, i, r)).collect());
    }
    let n = nodes.len();
    let mut around: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(a, b) in edges {
        around[a].push(b);
        around[b].push(a);
    }
    for (v, list) in around.iter_mut().enumerate() {
        list.sort_by(|&a, &b| angle_cmp(&nodes[a].sub(&nodes[v]), &nodes[b].sub(&nodes[v])));
    }
    let ccw_next = |v: usize, u: usize| {
        let list = &around[v];
        let i = list.iter().position(|&x| x == u).unwrap();
        list[(i + 1) % list.len()]
    };

    let (s, t) = (edges[0].0, edges[0].1);
    let mut out = Vec::new();
    let (mut u, mut v) = (s, t);
    loop {
        let w = ccw_next(v, u);
        let d1 = nodes[v].sub(&nodes[u]);
        let d2 = nodes[w].sub(&nodes[v]);
        let ia = extreme(shape, &right_normal(&d1), &d1, true);
        let id = extreme(shape, &right_normal(&d2), &d2, false);
        let turn = d1.cross(&d2);
        let base = &nodes[v];
        if turn.is_positive() || (turn.is_zero() && d1.dot(&d2).is_negative()) {
            let mut i = ia;
            loop {
                out.push(offset(base, shape, i, r));
                if i == id {
                    break;
                }
                i = (i + 1) % 8;
            }
        } else if turn.is_negative() {
            let a = offset(base, shape, ia, r);
            let b = offset(base, shape, id, r);
            let t = b.sub(&a).cross(&d2) / d1.cross(&d2);
            out.push(a.add(&d1.scale(&t)));
        }
        (u, v) = (v, w);
        if (u, v) == (s, t) {
            break;
        }
    }
    Polygon::new(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{q, Location};

    fn p(x: i64, y: i64) -> Point {
        Point::from_ints(x, y)
    }

    #[test]
    fn shapes_are_convex_and_counterclockwise() {
        for shape in [octagon_axis(), octagon_skew()] {
            for i in 0..8 {
                let (a, b, c) = (&shape[i], &shape[(i + 1) % 8], &shape[(i + 2) % 8]);
                assert_eq!(crate::geometry::orient(a, b, c), Ordering::Greater);
                assert!(a.dot(a) <= q(1));
            }
        }
    }

    #[test]
    fn single_node_is_an_octagon() {
        let poly = buffer_tree(&[p(3, 4)], &[], &octagon_axis(), &q(1));
        assert_eq!(poly.len(), 8);
        assert_eq!(poly.locate(&p(3, 4)), Location::Inside);
    }

    #[test]
    fn star_buffer_is_simple_and_contains_nodes() {
        let nodes = [p(0, 0), p(10, 0), p(0, 10), p(-7, -3), p(5, -9)];
        let edges = [(0, 1), (0, 2), (0, 3), (0, 4)];
        for shape in [octagon_axis(), octagon_skew()] {
            let poly = buffer_tree(&nodes, &edges, &shape, &q_frac(1, 2));
            assert!(poly.self_intersection().is_none());
            assert!(poly.double_area().is_positive());
            for n in &nodes {
                assert_eq!(poly.locate(n), Location::Inside);
            }
            assert_eq!(poly.locate(&p(5, 5)), Location::Outside);
        }
    }

    #[test]
    fn path_with_turns_and_straight_runs() {
        let nodes = [p(0, 0), p(4, 0), p(8, 0), p(8, 4), p(4, 8)];
        let edges = [(0, 1), (1, 2), (2, 3), (3, 4)];
        let poly = buffer_tree(&nodes, &edges, &octagon_axis(), &q(1));
        assert!(poly.self_intersection().is_none());
        assert!(poly.double_area().is_positive());
        assert_eq!(poly.locate(&p(4, 4)), Location::Outside);
    }
}
