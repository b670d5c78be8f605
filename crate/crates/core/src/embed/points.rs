//! Point sets in general position and straight-line trees on fixed points.

use num_traits::Zero;

use crate::geometry::{collinear_triple, Point, Q};
use crate::graph::SimpleGraph;

use super::EmbedError;

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// `n` integer points `(i, i² mod p)` with `p` the smallest prime `≥ n`.
/// Points on a parabola over a prime field never have three on a line, and
/// the x-coordinates are distinct.
pub fn auto_points(n: usize) -> Vec<Point> {
    let mut p = (n as u64).max(2);
    while !is_prime(p) {
        p += 1;
    }
    (0..n as u64)
        .map(|i| Point::from_ints(i as i64, ((i * i) % p) as i64))
        .collect()
}

/// Rejects repeated points and collinear triples.
pub fn check_general_position(points: &[Point]) -> Result<(), EmbedError> {
    let mut sorted: Vec<(usize, &Point)> = points.iter().enumerate().collect();
    sorted.sort_by(|a, b| a.1.cmp(b.1));
    for w in sorted.windows(2) {
        if w[0].1 == w[1].1 {
            return Err(EmbedError::DuplicatePoint(w[0].0.min(w[1].0), w[0].0.max(w[1].0)));
        }
    }
    match collinear_triple(points) {
        Some((i, j, k)) => Err(EmbedError::CollinearPoints(i, j, k)),
        None => Ok(()),
    }
}

/// Places a tree on a point set so that no two straight-line edges cross.
///
/// Returns the point assigned to each vertex. The root goes to the
/// lexicographically smallest point; the remaining points are sorted by angle
/// around it and cut into consecutive wedges sized like the child subtrees.
pub fn tree_on_points(tree: &SimpleGraph, points: &[Point]) -> Result<Vec<Point>, EmbedError> {
    if points.len() != tree.vertex_count() {
        return Err(EmbedError::SizeMismatch {
            expected: tree.vertex_count(),
            found: points.len(),
        });
    }
    check_general_position(points)?;
    let slots = place_tree(tree, points)?;
    Ok(slots.into_iter().map(|i| points[i].clone()).collect())
}

/// Index-returning core of [`tree_on_points`]; assumes general position.
pub(crate) fn place_tree(tree: &SimpleGraph, points: &[Point]) -> Result<Vec<usize>, EmbedError> {
    let n = tree.vertex_count();
    if n == 0 {
        return Ok(Vec::new());
    }
    let (_, comps) = tree.components();
    if comps != 1 || tree.edge_count() + 1 != n {
        return Err(EmbedError::NotATree);
    }

    // Parent pointers and subtree sizes with vertex 0 as root.
    let mut parent = vec![usize::MAX; n];
    let mut order = vec![0];
    parent[0] = 0;
    let mut i = 0;
    while i < order.len() {
        let v = order[i];
        for &w in tree.neighbors(v) {
            if parent[w] == usize::MAX {
                parent[w] = v;
                order.push(w);
            }
        }
        i += 1;
    }
    let mut size = vec![1usize; n];
    for &v in order.iter().skip(1).rev() {
        size[parent[v]] += size[v];
    }

    let mut slot = vec![usize::MAX; n];
    let all: Vec<usize> = (0..points.len()).collect();
    let root_pt = *all.iter().min_by(|&&a, &&b| points[a].cmp(&points[b])).unwrap();
    let rest: Vec<usize> = all.into_iter().filter(|&i| i != root_pt).collect();
    let mut work = vec![(0usize, root_pt, rest)];
    while let Some((v, at, mut rest)) = work.pop() {
        slot[v] = at;
        // All of `rest` lies in an open half-plane seen from `at`, so the
        // cross product is a strict angular order.
        let origin = &points[at];
        rest.sort_by(|&a, &b| {
            let c = points[a].sub(origin).cross(&points[b].sub(origin));
            Q::zero().cmp(&c)
        });
        let mut start = 0;
        for &w in tree.neighbors(v) {
            if w == parent[v] {
                continue;
            }
            let group = &rest[start..start + size[w]];
            work.push((w, group[0], group[1..].to_vec()));
            start += size[w];
        }
    }
    Ok(slot)
}
