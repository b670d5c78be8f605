//! Planarity testing, rotation systems, faces and straight-line drawings.
//!
//! [`is_planar`] and [`planar_embedding`] run the linear-time left-right
//! test. [`is_planar_bruteforce`] is an unrelated exhaustive Kuratowski
//! search used to cross-check it on small graphs.

mod drawing;
mod halfedge;
mod kuratowski;
mod lr;

use thiserror::Error;

use crate::graph::SimpleGraph;
use halfedge::HalfEdges;

pub use kuratowski::{find_kuratowski_subdivision, verify_subdivision, KuratowskiKind, KuratowskiSubdivision};

/// Vertex limit of the brute-force oracle.
pub const BRUTEFORCE_LIMIT: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PlanarityError {
    #[error("graph is not planar")]
    NotPlanar,
    #[error("graph has {vertices} vertices, brute force is limited to {limit}")]
    TooLarge { vertices: usize, limit: usize },
    #[error("rotation at vertex {0} is not a permutation of its neighbors")]
    BadRotation(usize),
}

pub fn is_planar(g: &SimpleGraph) -> bool {
    lr::lr_planarity(g).is_some()
}

/// A rotation system together with its face boundary walks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CombinatorialEmbedding {
    graph: SimpleGraph,
    rotation: Vec<Vec<usize>>,
    faces: Vec<Vec<(usize, usize)>>,
}

impl CombinatorialEmbedding {
    fn from_half_edges(graph: SimpleGraph, he: &HalfEdges) -> Self {
        let n = graph.vertex_count();
        let rotation: Vec<Vec<usize>> = (0..n).map(|v| he.neighbors_cw(v)).collect();
        let mut seen = std::collections::HashSet::new();
        let mut faces = Vec::new();
        for v in 0..n {
            for &w in &rotation[v] {
                if seen.contains(&(v, w)) {
                    continue;
                }
                let face = he.traverse_face(v, w);
                seen.extend(face.iter().copied());
                faces.push(face);
            }
        }
        CombinatorialEmbedding {
            graph,
            rotation,
            faces,
        }
    }

    /// Builds an embedding from explicit clockwise neighbor orders.
    pub fn from_rotation(graph: SimpleGraph, rotation: Vec<Vec<usize>>) -> Result<Self, PlanarityError> {
        let n = graph.vertex_count();
        if rotation.len() != n {
            return Err(PlanarityError::BadRotation(rotation.len().min(n)));
        }
        let mut he = HalfEdges::new(n);
        for (v, order) in rotation.iter().enumerate() {
            let mut sorted = order.clone();
            sorted.sort();
            let mut nb = graph.neighbors(v).to_vec();
            nb.sort();
            if sorted != nb {
                return Err(PlanarityError::BadRotation(v));
            }
            let mut prev = None;
            for &w in order {
                he.add_cw(v, w, prev);
                prev = Some(w);
            }
        }
        Ok(Self::from_half_edges(graph, &he))
    }

    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    /// Neighbors of `v` in clockwise order.
    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    /// Boundary walks as directed edge cycles, one per face per component.
    pub fn face_walks(&self) -> &[Vec<(usize, usize)>] {
        &self.faces
    }

    /// Faces of the plane drawing: outer faces of all components coincide and
    /// an isolated vertex contributes its surrounding face.
    pub fn face_count(&self) -> usize {
        let (_, comps) = self.graph.components();
        let isolated = (0..self.graph.vertex_count()).filter(|&v| self.graph.degree(v) == 0).count();
        if self.graph.vertex_count() == 0 {
            return 1;
        }
        self.faces.len() + isolated + 1 - comps
    }

    /// Whether each component satisfies Euler's formula for the sphere.
    pub fn satisfies_euler(&self) -> bool {
        let (comp, count) = self.graph.components();
        let mut v = vec![0i64; count];
        let mut e = vec![0i64; count];
        let mut f = vec![0i64; count];
        for x in 0..self.graph.vertex_count() {
            v[comp[x]] += 1;
        }
        for (a, _) in self.graph.edges() {
            e[comp[a]] += 1;
        }
        for face in &self.faces {
            f[comp[face[0].0]] += 1;
        }
        (0..count).all(|c| v[c] - e[c] + f[c].max(1) == 2)
    }

    fn half_edges(&self) -> HalfEdges {
        let mut he = HalfEdges::new(self.graph.vertex_count());
        for (v, order) in self.rotation.iter().enumerate() {
            let mut prev = None;
            for &w in order {
                he.add_cw(v, w, prev);
                prev = Some(w);
            }
        }
        he
    }
}

pub fn planar_embedding(g: &SimpleGraph) -> Result<CombinatorialEmbedding, PlanarityError> {
    let he = lr::lr_planarity(g).ok_or(PlanarityError::NotPlanar)?;
    Ok(CombinatorialEmbedding::from_half_edges(g.clone(), &he))
}

/// Integer positions realizing an embedding without crossings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanarDrawing {
    pub positions: Vec<(i64, i64)>,
    pub embedding: CombinatorialEmbedding,
}

impl PlanarDrawing {
    /// Edge pairs whose segments meet anywhere except at a shared endpoint.
    pub fn crossing_pairs(&self) -> Vec<((usize, usize), (usize, usize))> {
        let edges: Vec<(usize, usize)> = self.embedding.graph.edges().collect();
        let p = &self.positions;
        let mut out = Vec::new();
        for (i, &(a, b)) in edges.iter().enumerate() {
            for &(c, d) in &edges[i + 1..] {
                if segments_conflict(p, (a, b), (c, d)) {
                    out.push(((a, b), (c, d)));
                }
            }
        }
        out
    }

    /// Width and height of the bounding box.
    pub fn extent(&self) -> (i64, i64) {
        let xs = self.positions.iter().map(|p| p.0);
        let ys = self.positions.iter().map(|p| p.1);
        let w = xs.clone().max().unwrap_or(0) - xs.min().unwrap_or(0);
        let h = ys.clone().max().unwrap_or(0) - ys.min().unwrap_or(0);
        (w, h)
    }
}

fn orient(p: (i64, i64), q: (i64, i64), r: (i64, i64)) -> i128 {
    let (px, py, qx, qy, rx, ry) = (p.0 as i128, p.1 as i128, q.0 as i128, q.1 as i128, r.0 as i128, r.1 as i128);
    (qx - px) * (ry - py) - (qy - py) * (rx - px)
}

fn on_segment(p: (i64, i64), q: (i64, i64), r: (i64, i64)) -> bool {
    orient(p, q, r) == 0 && r.0 >= p.0.min(q.0) && r.0 <= p.0.max(q.0) && r.1 >= p.1.min(q.1) && r.1 <= p.1.max(q.1)
}

fn segments_conflict(pos: &[(i64, i64)], (a, b): (usize, usize), (c, d): (usize, usize)) -> bool {
    let (pa, pb, pc, pd) = (pos[a], pos[b], pos[c], pos[d]);
    let shared: Vec<usize> = [a, b].into_iter().filter(|x| *x == c || *x == d).collect();
    if shared.len() == 1 {
        // Adjacent edges conflict only when they overlap along a segment.
        let s = shared[0];
        let (o1, o2) = (if a == s { pb } else { pa }, if c == s { pd } else { pc });
        let ps = pos[s];
        return orient(ps, o1, o2) == 0 && ((o1.0 - ps.0) * (o2.0 - ps.0) + (o1.1 - ps.1) * (o2.1 - ps.1)) > 0;
    }
    let d1 = orient(pa, pb, pc).signum();
    let d2 = orient(pa, pb, pd).signum();
    let d3 = orient(pc, pd, pa).signum();
    let d4 = orient(pc, pd, pb).signum();
    if d1 * d2 < 0 && d3 * d4 < 0 {
        return true;
    }
    on_segment(pa, pb, pc) || on_segment(pa, pb, pd) || on_segment(pc, pd, pa) || on_segment(pc, pd, pb)
}

/// Straight-line grid drawing that respects the rotation system up to
/// reflection. Components are placed side by side, left to right in order of
/// their smallest vertex.
pub fn straight_line_drawing(embedding: &CombinatorialEmbedding) -> PlanarDrawing {
    let g = &embedding.graph;
    let n = g.vertex_count();
    let he = embedding.half_edges();
    let (comp, count) = g.components();
    let mut members: Vec<Vec<usize>> = vec![Vec::new(); count];
    for v in 0..n {
        members[comp[v]].push(v);
    }
    let mut positions = vec![(0i64, 0i64); n];
    let mut x_offset = 0i64;
    for verts in &members {
        let mut local = vec![usize::MAX; n];
        for (i, &v) in verts.iter().enumerate() {
            local[v] = i;
        }
        let mut sub = HalfEdges::new(verts.len());
        for &v in verts {
            let mut prev = None;
            for w in he.neighbors_cw(v) {
                sub.add_cw(local[v], local[w], prev);
                prev = Some(local[w]);
            }
        }
        let pos = drawing::component_positions(&sub);
        let min_x = pos.iter().map(|p| p.0).min().unwrap_or(0);
        let max_x = pos.iter().map(|p| p.0).max().unwrap_or(0);
        let min_y = pos.iter().map(|p| p.1).min().unwrap_or(0);
        for (i, &v) in verts.iter().enumerate() {
            positions[v] = (pos[i].0 - min_x + x_offset, pos[i].1 - min_y);
        }
        x_offset += max_x - min_x + 1;
    }
    PlanarDrawing {
        positions,
        embedding: embedding.clone(),
    }
}

/// Embeds and draws a planar graph in one step.
pub fn draw_planar(g: &SimpleGraph) -> Result<PlanarDrawing, PlanarityError> {
    Ok(straight_line_drawing(&planar_embedding(g)?))
}

/// Decides planarity by searching for a Kuratowski subdivision.
pub fn is_planar_bruteforce(g: &SimpleGraph) -> Result<bool, PlanarityError> {
    if g.vertex_count() > BRUTEFORCE_LIMIT {
        return Err(PlanarityError::TooLarge {
            vertices: g.vertex_count(),
            limit: BRUTEFORCE_LIMIT,
        });
    }
    Ok(find_kuratowski_subdivision(g).is_none())
}
