//! Exact validation of embedding artifacts.
//!
//! Region boundaries must meet only in proper crossings; any other contact is
//! rejected. Overlap components of two regions are traced as alternating arcs
//! between consecutive crossings: both boundaries run counterclockwise, so an
//! arc of one boundary lies inside the other exactly when it starts at a
//! crossing where it enters.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Signed;

use crate::geometry::{segment_contact, BBox, Contact, Location, Point, Polygon, Q};
use crate::pair::{BlockId, BlockRef, PartitionPair};

use super::{EmbedError, EmbeddingArtifact, Level};

/// How two regions sit relative to each other.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairRelation {
    Disjoint,
    /// The first region lies inside the second.
    FirstInside,
    SecondInside,
    /// Boundaries cross; the count is the number of overlap components.
    Overlapping(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub level: Level,
    /// Every element point is strictly inside its own two regions and
    /// strictly outside all others.
    pub membership_ok: bool,
    pub same_partition_disjoint: bool,
    /// Proper boundary crossings for every region pair.
    pub crossing_counts: BTreeMap<(BlockId, BlockId), usize>,
    pub relations: BTreeMap<(BlockId, BlockId), PairRelation>,
    /// Every overlap component of every region pair contains an element point.
    pub intersecting_pairs_share_element: bool,
    /// Every pair crosses at most twice and overlaps in at most one component.
    pub pseudo_disk_ok: bool,
}

impl ValidationReport {
    pub fn weak_ok(&self) -> bool {
        self.membership_ok && self.same_partition_disjoint
    }

    /// Exact for artifacts built by this crate, where every overlap component
    /// is a single face of the boundary arrangement. For other artifacts it is
    /// only a necessary condition.
    pub fn strong_ok(&self) -> bool {
        self.weak_ok() && self.intersecting_pairs_share_element
    }

    pub fn full_ok(&self) -> bool {
        self.strong_ok() && self.pseudo_disk_ok
    }

    /// Outcome for the requested level.
    pub fn passed(&self) -> bool {
        match self.level {
            Level::Weak => self.weak_ok(),
            Level::Strong => self.strong_ok(),
            Level::Full => self.full_ok(),
        }
    }

    pub fn max_crossings(&self) -> usize {
        self.crossing_counts.values().copied().max().unwrap_or(0)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "level: {}", self.level)?;
        writeln!(f, "membership_ok: {}", self.membership_ok)?;
        writeln!(f, "same_partition_disjoint: {}", self.same_partition_disjoint)?;
        writeln!(f, "intersecting_pairs_share_element: {}", self.intersecting_pairs_share_element)?;
        writeln!(f, "pseudo_disk_ok: {}", self.pseudo_disk_ok)?;
        writeln!(f, "max_boundary_crossings: {}", self.max_crossings())?;
        writeln!(f, "passed: {}", self.passed())
    }
}

struct Crossing {
    pe: usize,
    pt: Q,
    qe: usize,
    qt: Q,
    point: Point,
    p_enters: bool,
}

fn ccw(poly: &Polygon) -> Polygon {
    if poly.double_area().is_negative() {
        Polygon::new(poly.vertices.iter().rev().cloned().collect())
    } else {
        poly.clone()
    }
}

/// Proper crossings between two boundaries, or `None` on any other contact.
fn crossings(p: &Polygon, pb: &[BBox], q: &Polygon, qb: &[BBox]) -> Option<Vec<Crossing>> {
    let mut out = Vec::new();
    for i in 0..p.len() {
        for j in 0..q.len() {
            if !pb[i].overlaps(&qb[j]) {
                continue;
            }
            let (a0, a1) = p.edge(i);
            let (b0, b1) = q.edge(j);
            match segment_contact(a0, a1, b0, b1) {
                Contact::Disjoint => {}
                Contact::Touching => return None,
                Contact::Proper { t, s, point } => {
                    let dp = a1.sub(a0);
                    let dq = b1.sub(b0);
                    out.push(Crossing {
                        pe: i,
                        pt: t,
                        qe: j,
                        qt: s,
                        point,
                        p_enters: dq.cross(&dp).is_positive(),
                    });
                }
            }
        }
    }
    Some(out)
}

/// Boundary cycles of the overlap components of two crossing regions.
fn overlap_cycles(p: &Polygon, q: &Polygon, xs: &[Crossing]) -> Option<Vec<Polygon>> {
    let k = xs.len();
    let order = |key: &dyn Fn(&Crossing) -> (usize, &Q)| {
        let mut idx: Vec<usize> = (0..k).collect();
        idx.sort_by(|&a, &b| {
            let (ea, ta) = key(&xs[a]);
            let (eb, tb) = key(&xs[b]);
            ea.cmp(&eb).then_with(|| ta.cmp(tb))
        });
        let mut next = vec![0; k];
        for w in 0..k {
            next[idx[w]] = idx[(w + 1) % k];
        }
        next
    };
    let next_p = order(&|c: &Crossing| (c.pe, &c.pt));
    let next_q = order(&|c: &Crossing| (c.qe, &c.qt));

    // Vertices passed when walking a boundary from one crossing to the next.
    let between = |poly: &Polygon, e0: usize, t0: &Q, e1: usize, t1: &Q, out: &mut Vec<Point>| {
        let n = poly.len();
        let mut steps = (e1 + n - e0) % n;
        if steps == 0 && t1 <= t0 {
            steps = n;
        }
        for s in 1..=steps {
            out.push(poly.vertices[(e0 + s) % n].clone());
        }
    };

    let mut used = vec![false; k];
    let mut cycles = Vec::new();
    for start in 0..k {
        if !xs[start].p_enters || used[start] {
            continue;
        }
        let mut verts = Vec::new();
        let mut cur = start;
        let mut on_p = true;
        loop {
            let c = &xs[cur];
            if on_p {
                if !c.p_enters || used[cur] {
                    return None;
                }
                used[cur] = true;
            } else if c.p_enters {
                return None;
            }
            verts.push(c.point.clone());
            let nxt = if on_p { next_p[cur] } else { next_q[cur] };
            let d = &xs[nxt];
            if on_p {
                between(p, c.pe, &c.pt, d.pe, &d.pt, &mut verts);
            } else {
                between(q, c.qe, &c.qt, d.qe, &d.qt, &mut verts);
            }
            cur = nxt;
            on_p = !on_p;
            if cur == start && on_p {
                break;
            }
        }
        cycles.push(Polygon::new(verts));
    }
    if used.iter().zip(xs).any(|(&u, c)| c.p_enters && !u) {
        return None;
    }
    Some(cycles)
}

fn inside(poly: &Polygon, p: &Point) -> bool {
    poly.locate(p) == Location::Inside
}

/// Validates `artifact` as an embedding of `pair` at `level`.
pub fn validate_embedding(artifact: &EmbeddingArtifact, pair: &PartitionPair, level: Level) -> Result<ValidationReport, EmbedError> {
    // Element points in universe order.
    let n = pair.len();
    let mut pts: Vec<Option<&Point>> = vec![None; n];
    for (id, p) in &artifact.points {
        let u = pair
            .element_index(id.as_str())
            .ok_or_else(|| EmbedError::Mismatch(format!("unknown element {id}")))?;
        if pts[u].replace(p).is_some() {
            return Err(EmbedError::Mismatch(format!("element {id} placed twice")));
        }
    }
    let pts: Vec<&Point> = pts
        .into_iter()
        .enumerate()
        .map(|(u, p)| p.ok_or_else(|| EmbedError::Mismatch(format!("element {} has no point", pair.element(u)))))
        .collect::<Result<_, _>>()?;
    let mut sorted: Vec<(&Point, usize)> = pts.iter().copied().zip(0..).collect();
    sorted.sort();
    if let Some(w) = sorted.windows(2).find(|w| w[0].0 == w[1].0) {
        return Err(EmbedError::DuplicatePoint(w[0].1.min(w[1].1), w[0].1.max(w[1].1)));
    }

    // Regions in global block order, normalised to counterclockwise.
    let m = pair.block_count();
    let mut regs: Vec<Option<Polygon>> = vec![None; m];
    for (id, poly) in &artifact.regions {
        let b = pair
            .find_block(id)
            .ok_or_else(|| EmbedError::Mismatch(format!("unknown block {id}")))?;
        if poly.self_intersection().is_some() {
            return Err(EmbedError::SelfIntersectingPolygon(id.clone()));
        }
        if regs[pair.global_block_index(b)].replace(ccw(poly)).is_some() {
            return Err(EmbedError::Mismatch(format!("block {id} has two regions")));
        }
    }
    let refs: Vec<BlockRef> = (0..m).map(|g| pair.block_from_global(g)).collect();
    let regs: Vec<Polygon> = regs
        .into_iter()
        .enumerate()
        .map(|(g, r)| r.ok_or_else(|| EmbedError::Mismatch(format!("block {} has no region", pair.block_id(refs[g])))))
        .collect::<Result<_, _>>()?;

    let mut membership_ok = true;
    for (g, poly) in regs.iter().enumerate() {
        let members = pair.block(refs[g]).members();
        for (u, p) in pts.iter().enumerate() {
            let want = if members.contains(&u) { Location::Inside } else { Location::Outside };
            if poly.locate(p) != want {
                membership_ok = false;
            }
        }
    }

    let boxes: Vec<BBox> = regs.iter().map(Polygon::bbox).collect();
    let edge_boxes: Vec<Vec<BBox>> = regs.iter().map(Polygon::edge_boxes).collect();
    let mut report = ValidationReport {
        level,
        membership_ok,
        same_partition_disjoint: true,
        crossing_counts: BTreeMap::new(),
        relations: BTreeMap::new(),
        intersecting_pairs_share_element: true,
        pseudo_disk_ok: true,
    };
    for a in 0..m {
        for b in (a + 1)..m {
            let (ida, idb) = (pair.block_id(refs[a]), pair.block_id(refs[b]));
            let tangent = || EmbedError::TangentBoundaries(ida.clone(), idb.clone());
            let xs = if boxes[a].overlaps(&boxes[b]) {
                crossings(&regs[a], &edge_boxes[a], &regs[b], &edge_boxes[b]).ok_or_else(tangent)?
            } else {
                Vec::new()
            };
            let shared = pair.shared_elements(refs[a], refs[b]);
            let relation = if xs.is_empty() {
                if inside(&regs[b], &regs[a].vertices[0]) {
                    PairRelation::FirstInside
                } else if inside(&regs[a], &regs[b].vertices[0]) {
                    PairRelation::SecondInside
                } else {
                    PairRelation::Disjoint
                }
            } else {
                let cycles = overlap_cycles(&regs[a], &regs[b], &xs).ok_or_else(tangent)?;
                if cycles.iter().any(|c| !shared.iter().any(|&u| inside(c, pts[u]))) {
                    report.intersecting_pairs_share_element = false;
                }
                PairRelation::Overlapping(cycles.len())
            };
            match relation {
                PairRelation::Disjoint => {}
                PairRelation::FirstInside | PairRelation::SecondInside => {
                    if shared.is_empty() {
                        report.intersecting_pairs_share_element = false;
                    }
                }
                PairRelation::Overlapping(c) => {
                    if c > 1 {
                        report.pseudo_disk_ok = false;
                    }
                }
            }
            if refs[a].side == refs[b].side && relation != PairRelation::Disjoint {
                report.same_partition_disjoint = false;
            }
            if xs.len() > 2 {
                report.pseudo_disk_ok = false;
            }
            report.crossing_counts.insert((ida.clone(), idb.clone()), xs.len());
            report.relations.insert((ida, idb), relation);
        }
    }
    Ok(report)
}
