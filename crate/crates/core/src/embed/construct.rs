//! Weak, strong and full constructions.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::decide::decide_full;
use crate::geometry::{q, q_frac, Point, Polygon, Q};
use crate::graph::{is_support, reduce_to_tree_based, GraphError, SimpleGraph, SupportCheck, SupportGraph};
use crate::pair::{BlockRef, PartitionPair, Side};
use crate::planarity::{draw_planar, is_planar};

use super::buffer::{buffer_tree, octagon_axis, octagon_skew, Shape};
use super::points::{auto_points, check_general_position, place_tree};
use super::validate::validate_embedding;
use super::{EmbedError, EmbeddingArtifact, Level};

const ATTEMPTS: usize = 16;

/// Partition-1 radius relative to partition 0, varied across retries so that
/// a degenerate contact does not repeat at the same relative scale.
const RATIOS: [(i64, i64); 4] = [(1, 2), (3, 7), (5, 11), (4, 9)];

/// Radius scale for attempt `k`: the base radius halves every other attempt.
fn attempt_scale(k: usize) -> (Q, Q) {
    let (n, d) = RATIOS[k % RATIOS.len()];
    let halving = Q::from_integer(BigInt::one() << (k / 2));
    (Q::one() / halving, q_frac(n, d))
}

/// A straight-line tree drawn on shared nodes.
struct Tree {
    block: BlockRef,
    nodes: Vec<usize>,
    edges: Vec<(usize, usize)>,
}

/// Smallest distance between a node and another node or a segment not
/// incident to it. Only used to pick a radius; validation is exact.
fn feature_distance(nodes: &[Point], segments: &[(usize, usize)]) -> f64 {
    let pts: Vec<(f64, f64)> = nodes.iter().map(Point::to_f64).collect();
    let mut best = f64::INFINITY;
    for i in 0..pts.len() {
        for j in (i + 1)..pts.len() {
            best = best.min(((pts[i].0 - pts[j].0).powi(2) + (pts[i].1 - pts[j].1).powi(2)).sqrt());
        }
    }
    for &(a, b) in segments {
        let (ax, ay) = pts[a];
        let (dx, dy) = (pts[b].0 - ax, pts[b].1 - ay);
        let len2 = dx * dx + dy * dy;
        for (i, &(px, py)) in pts.iter().enumerate() {
            if i == a || i == b {
                continue;
            }
            let t = (((px - ax) * dx + (py - ay) * dy) / len2).clamp(0.0, 1.0);
            let (cx, cy) = (ax + t * dx - px, ay + t * dy - py);
            best = best.min((cx * cx + cy * cy).sqrt());
        }
    }
    best
}

/// Largest power of two not above a quarter of `delta`.
fn radius_for(delta: f64) -> Q {
    if !delta.is_finite() {
        return Q::one();
    }
    let e = (delta / 4.0).log2().floor() as i32;
    if e >= 0 {
        Q::from_integer(BigInt::one() << e as u32)
    } else {
        Q::one() / Q::from_integer(BigInt::one() << (-e) as u32)
    }
}

fn buffer(nodes: &[Point], tree: &Tree, shape: &Shape, r: &Q) -> Polygon {
    let local: Vec<Point> = tree.nodes.iter().map(|&v| nodes[v].clone()).collect();
    let index: BTreeMap<usize, usize> = tree.nodes.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let edges: Vec<(usize, usize)> = tree.edges.iter().map(|(a, b)| (index[a], index[b])).collect();
    buffer_tree(&local, &edges, shape, r)
}

fn shape_for(side: Side) -> Shape {
    match side {
        Side::P0 => octagon_axis(),
        Side::P1 => octagon_skew(),
    }
}

fn assemble(pair: &PartitionPair, level: Level, points: &[Point], mut regions: Vec<(BlockRef, Polygon)>) -> EmbeddingArtifact {
    regions.sort_by_key(|(b, _)| pair.global_block_index(*b));
    EmbeddingArtifact {
        level,
        points: pair.elements().iter().cloned().zip(points.iter().cloned()).collect(),
        regions: regions.into_iter().map(|(b, p)| (pair.block_id(b), p)).collect(),
    }
}

/// Runs `build` with shrinking radii until the artifact validates at `level`.
fn with_retries(pair: &PartitionPair, level: Level, mut build: impl FnMut(&Q, &Q) -> EmbeddingArtifact) -> Result<EmbeddingArtifact, EmbedError> {
    for k in 0..ATTEMPTS {
        let (scale, ratio) = attempt_scale(k);
        let artifact = build(&scale, &ratio);
        if let Ok(report) = validate_embedding(&artifact, pair, level) {
            if report.passed() {
                return Ok(artifact);
            }
        }
    }
    Err(EmbedError::ConstructionFailed(level))
}

/// Builds a weak embedding on the given point set (one point per element) or
/// on [`auto_points`]. The construction chooses which element occupies which
/// point; the artifact uses exactly the given points.
///
/// Partition 0 blocks become paths on consecutive chunks of the points in
/// lexicographic order, so their convex hulls are disjoint. Partition 1
/// blocks become x-monotone polylines stacked in block order; at every column
/// the curves pass the column's point above or below it by a multiple of a
/// small step, so they never cross each other.
pub fn weak_embedding(pair: &PartitionPair, points: Option<&[Point]>) -> Result<EmbeddingArtifact, EmbedError> {
    let n = pair.len();
    let pts = match points {
        Some(p) => {
            if p.len() != n {
                return Err(EmbedError::SizeMismatch { expected: n, found: p.len() });
            }
            check_general_position(p)?;
            p.to_vec()
        }
        None => auto_points(n),
    };

    // Partition 0: paths on lexicographic chunks, larger blocks first.
    let mut by_lex: Vec<usize> = (0..n).collect();
    by_lex.sort_by(|&a, &b| pts[a].cmp(&pts[b]));
    let p0 = pair.partition(Side::P0).blocks();
    let mut order: Vec<usize> = (0..p0.len()).collect();
    order.sort_by_key(|&b| (std::cmp::Reverse(p0[b].len()), b));
    let mut p0_trees = Vec::new();
    let mut placed = vec![Point::from_ints(0, 0); n];
    let mut start = 0;
    for b in order {
        let members = p0[b].members();
        let chunk: Vec<usize> = by_lex[start..start + members.len()].to_vec();
        start += members.len();
        let k = members.len();
        let path = SimpleGraph::from_edges(k, &(1..k).map(|i| (i - 1, i)).collect::<Vec<_>>())?;
        let chunk_pts: Vec<Point> = chunk.iter().map(|&i| pts[i].clone()).collect();
        let slot = place_tree(&path, &chunk_pts)?;
        for (i, &u) in members.iter().enumerate() {
            placed[u] = chunk_pts[slot[i]].clone();
        }
        p0_trees.push(Tree {
            block: BlockRef { side: Side::P0, index: b },
            nodes: members.to_vec(),
            edges: (1..k).map(|i| (members[i - 1], members[i])).collect(),
        });
    }
    let p0_segments: Vec<(usize, usize)> = p0_trees.iter().flat_map(|t| t.edges.iter().copied()).collect();
    let r0 = radius_for(feature_distance(&placed, &p0_segments));

    // Partition 1: shear so that x-coordinates are distinct, stack polylines,
    // and shear back after buffering.
    let lambda = shear_factor(&placed);
    let sheared: Vec<Point> = placed.iter().map(|p| Point::new(&p.x + &lambda * &p.y, p.y.clone())).collect();
    let mut columns: Vec<usize> = (0..n).collect();
    columns.sort_by(|&a, &b| sheared[a].x.cmp(&sheared[b].x));
    let mut column_of = vec![0; n];
    for (c, &u) in columns.iter().enumerate() {
        column_of[u] = c;
    }
    let p1 = pair.partition(Side::P1).blocks();
    let eps = level_step(&placed, p1.len());
    let mut nodes1 = sheared.clone();
    let mut p1_trees = Vec::new();
    for (j, block) in p1.iter().enumerate() {
        let mut cols: Vec<usize> = block.members().iter().map(|&u| column_of[u]).collect();
        cols.sort_unstable();
        let mut chain = vec![columns[cols[0]]];
        for w in cols.windows(2) {
            for c in (w[0] + 1)..w[1] {
                let owner = pair.block_of(columns[c], Side::P1).index as i64;
                let lift = &eps * q(j as i64 - owner);
                nodes1.push(Point::new(sheared[columns[c]].x.clone(), &sheared[columns[c]].y + lift));
                chain.push(nodes1.len() - 1);
            }
            chain.push(columns[w[1]]);
        }
        p1_trees.push(Tree {
            block: BlockRef { side: Side::P1, index: j },
            edges: chain.windows(2).map(|w| (w[0], w[1])).collect(),
            nodes: chain,
        });
    }
    let p1_segments: Vec<(usize, usize)> = p1_trees.iter().flat_map(|t| t.edges.iter().copied()).collect();
    let r1 = radius_for(feature_distance(&nodes1, &p1_segments));

    with_retries(pair, Level::Weak, |scale, ratio| {
        let ra = &r0 * scale;
        let rb = &r1 * scale * ratio * q(2);
        let mut regions: Vec<(BlockRef, Polygon)> =
            p0_trees.iter().map(|t| (t.block, buffer(&placed, t, &octagon_axis(), &ra))).collect();
        for t in &p1_trees {
            let poly = buffer(&nodes1, t, &octagon_skew(), &rb);
            let back = poly.vertices.iter().map(|p| Point::new(&p.x - &lambda * &p.y, p.y.clone())).collect();
            regions.push((t.block, Polygon::new(back)));
        }
        assemble(pair, Level::Weak, &placed, regions)
    })
}

/// Zero when all x-coordinates differ; otherwise a slope small enough that
/// `x + λy` keeps distinct x-coordinates ordered and separates equal ones.
fn shear_factor(points: &[Point]) -> Q {
    let mut xs: Vec<&Q> = points.iter().map(|p| &p.x).collect();
    xs.sort();
    if xs.windows(2).all(|w| w[0] != w[1]) {
        return Q::zero();
    }
    let gap = xs.windows(2).map(|w| w[1] - w[0]).filter(|d| d.is_positive()).min();
    let ys = points.iter().map(|p| &p.y);
    let span = ys.clone().max().unwrap() - ys.min().unwrap();
    match gap {
        Some(g) => g / (q(2) * span + q(1)),
        None => Q::one(),
    }
}

/// Vertical step between stacked curves: below half the smallest nonzero
/// y-gap even after `blocks` steps.
fn level_step(points: &[Point], blocks: usize) -> Q {
    let mut ys: Vec<&Q> = points.iter().map(|p| &p.y).collect();
    ys.sort();
    let gap = ys.windows(2).map(|w| w[1] - w[0]).filter(|d| d.is_positive()).min().unwrap_or_else(Q::one);
    gap / q(2 * blocks as i64 + 2)
}

/// Builds a strong embedding by buffering the block trees of the tree-based
/// reduction of `support`, drawn on the integer grid.
pub fn strong_embedding(pair: &PartitionPair, support: &SupportGraph) -> Result<EmbeddingArtifact, EmbedError> {
    if let SupportCheck::Disconnected(b) = is_support(support.graph(), pair)? {
        return Err(GraphError::NotASupport(b).into());
    }
    if !is_planar(support.graph()) {
        return Err(EmbedError::NotPlanar);
    }
    let reduced = reduce_to_tree_based(support, pair);
    let n = pair.len();
    let mut kept = SimpleGraph::with_labels(pair.elements().iter().map(|e| e.0.clone()).collect());
    for (u, v) in reduced.graph().edges() {
        let same = |s| pair.block_of(u, s) == pair.block_of(v, s);
        if same(Side::P0) || same(Side::P1) {
            kept.add_edge(u, v)?;
        }
    }
    let drawing = draw_planar(&kept).map_err(|_| EmbedError::NotPlanar)?;
    let nodes: Vec<Point> = drawing.positions.iter().map(|&(x, y)| Point::from_ints(x, y)).collect();
    let segments: Vec<(usize, usize)> = kept.edges().collect();
    let r = radius_for(feature_distance(&nodes, &segments));
    debug_assert_eq!(nodes.len(), n);

    let trees: Vec<Tree> = pair
        .block_refs()
        .map(|b| {
            let members = pair.block(b).members().to_vec();
            let edges = segments
                .iter()
                .copied()
                .filter(|&(u, v)| pair.block_of(u, b.side) == b && pair.block_of(v, b.side) == b)
                .collect();
            Tree { block: b, nodes: members, edges }
        })
        .collect();
    with_retries(pair, Level::Strong, |scale, ratio| {
        let regions = trees
            .iter()
            .map(|t| {
                let radius = match t.block.side {
                    Side::P0 => &r * scale,
                    Side::P1 => &r * scale * ratio,
                };
                (t.block, buffer(&nodes, t, &shape_for(t.block.side), &radius))
            })
            .collect();
        assemble(pair, Level::Strong, &nodes, regions)
    })
}

/// Builds a full embedding from a planar drawing of the bipartite map with one
/// representative element per intersecting block pair.
///
/// Each block becomes a buffered star from its center to the representatives
/// of its intersections; further shared elements sit next to their
/// representative. A block meeting only one other block is nested: it becomes
/// a small octagon around the representative, inside its partner.
pub fn full_embedding(pair: &PartitionPair) -> Result<EmbeddingArtifact, EmbedError> {
    if !decide_full(pair) {
        return Err(EmbedError::NotFullyEmbeddable);
    }
    let m = pair.block_count();
    let refs: Vec<BlockRef> = (0..m).map(|g| pair.block_from_global(g)).collect();

    // Intersecting pairs (P0 global index, P1 global index) with shared elements.
    let mut meets: Vec<(usize, usize, Vec<usize>)> = Vec::new();
    for a in 0..m {
        for b in 0..m {
            if refs[a].side == Side::P0 && refs[b].side == Side::P1 {
                let shared = pair.shared_elements(refs[a], refs[b]);
                if !shared.is_empty() {
                    meets.push((a, b, shared));
                }
            }
        }
    }
    let mut degree = vec![0usize; m];
    for &(a, b, _) in &meets {
        degree[a] += 1;
        degree[b] += 1;
    }
    // Block g is nested in its only partner unless that partner is nested in it.
    let nested = |g: usize, partner: usize| degree[g] == 1 && (degree[partner] > 1 || refs[g].side == Side::P1);

    // Graph H: block centers 0..m, then one vertex per intersecting pair.
    let mut h = SimpleGraph::new(m);
    let mut rep_vertex = Vec::with_capacity(meets.len());
    for &(a, b, _) in &meets {
        let x = h.add_vertex(format!("r{}", h.vertex_count()));
        rep_vertex.push(x);
        if !nested(a, b) {
            h.add_edge(a, x)?;
        }
        if !nested(b, a) {
            h.add_edge(x, b)?;
        }
    }
    let drawing = draw_planar(&h).map_err(|_| EmbedError::NotFullyEmbeddable)?;
    let nodes: Vec<Point> = drawing.positions.iter().map(|&(x, y)| Point::from_ints(x, y)).collect();
    let segments: Vec<(usize, usize)> = h.edges().collect();
    let r = radius_for(feature_distance(&nodes, &segments));

    let stars: Vec<Tree> = (0..m)
        .filter(|&g| h.degree(g) > 0)
        .map(|g| {
            let mut ends: Vec<usize> = h.neighbors(g).to_vec();
            ends.sort_unstable();
            Tree {
                block: refs[g],
                nodes: std::iter::once(g).chain(ends.iter().copied()).collect(),
                edges: ends.iter().map(|&x| (g, x)).collect(),
            }
        })
        .collect();

    with_retries(pair, Level::Full, |scale, ratio| {
        let radius = |g: usize| match refs[g].side {
            Side::P0 => &r * scale,
            Side::P1 => &r * scale * ratio,
        };
        let mut regions: Vec<(BlockRef, Polygon)> = stars
            .iter()
            .map(|t| {
                let g = pair.global_block_index(t.block);
                (t.block, buffer(&nodes, t, &shape_for(t.block.side), &radius(g)))
            })
            .collect();
        let mut points = vec![Point::from_ints(0, 0); pair.len()];
        for (i, (a, b, shared)) in meets.iter().enumerate() {
            let at = &nodes[rep_vertex[i]];
            // Spread of the extra elements: inside the smaller region around `at`.
            let spread = if nested(*a, *b) || nested(*b, *a) {
                let (inner, outer) = if nested(*a, *b) { (*a, *b) } else { (*b, *a) };
                let small = radius(outer) / q(4);
                let octagon = buffer_tree(std::slice::from_ref(at), &[], &shape_for(refs[inner].side), &small);
                regions.push((refs[inner], octagon));
                small / q(2)
            } else {
                radius(*b) / q(4)
            };
            let k = shared.len() as i64;
            for (j, &u) in shared.iter().enumerate() {
                let t = &spread * q_frac(j as i64, k);
                points[u] = Point::new(&at.x + t, at.y.clone());
            }
        }
        assemble(pair, Level::Full, &points, regions)
    })
}
