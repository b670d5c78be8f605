//! Straight-line grid drawing by the shift method over a canonical ordering.
//!
//! Each connected component is augmented to a biconnected, internally
//! triangulated embedding, drawn on an integer grid, and shifted right of the
//! previous component. Dummy edges only steer the coordinates; the returned
//! drawing keeps the original graph.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};

use super::halfedge::HalfEdges;

/// Positions for a connected rotation system with vertices `0..n`.
pub(crate) fn component_positions(emb: &HalfEdges) -> Vec<(i64, i64)> {
    let n = emb.vertex_count();
    if n < 4 {
        return [(0, 0), (2, 0), (1, 1)][..n].to_vec();
    }
    let mut emb = emb.clone();
    let outer = triangulate(&mut emb);
    let order = canonical_ordering(&emb, &outer);

    let mut left: Vec<Option<usize>> = vec![None; n];
    let mut right: Vec<Option<usize>> = vec![None; n];
    let mut dx = vec![0i64; n];
    let mut y = vec![0i64; n];
    let (v1, v2, v3) = (order[0].0, order[1].0, order[2].0);
    dx[v2] = 1;
    dx[v3] = 1;
    y[v3] = 1;
    right[v1] = Some(v3);
    right[v3] = Some(v2);

    for (vk, contour) in &order[3..] {
        let vk = *vk;
        let wp = contour[0];
        let wp1 = contour[1];
        let wq = contour[contour.len() - 1];
        let wq1 = contour[contour.len() - 2];
        let multi = contour.len() > 2;
        dx[wp1] += 1;
        dx[wq] += 1;
        let span: i64 = contour[1..].iter().map(|&x| dx[x]).sum();
        dx[vk] = (-y[wp] + span + y[wq]).div_euclid(2);
        y[vk] = (y[wp] + span + y[wq]).div_euclid(2);
        dx[wq] = span - dx[vk];
        if multi {
            dx[wp1] -= dx[vk];
        }
        right[wp] = Some(vk);
        right[vk] = Some(wq);
        if multi {
            left[vk] = Some(wp1);
            right[wq1] = None;
        } else {
            left[vk] = None;
        }
    }

    let mut pos = vec![(0i64, 0i64); n];
    pos[v1] = (0, y[v1]);
    let mut pending = vec![v1];
    while let Some(p) = pending.pop() {
        for child in [left[p], right[p]].into_iter().flatten() {
            pos[child] = (pos[p].0 + dx[child], y[child]);
            pending.push(child);
        }
    }
    pos
}

fn triangulate(emb: &mut HalfEdges) -> Vec<usize> {
    let n = emb.vertex_count();
    let mut outer: Vec<usize> = Vec::new();
    let mut faces = Vec::new();
    let mut counted: HashSet<(usize, usize)> = HashSet::new();
    for v in 0..n {
        let Some(&first) = emb.neighbors_cw(v).first() else {
            continue;
        };
        let mut w = first;
        loop {
            let face = make_biconnected(emb, v, w, &mut counted);
            if !face.is_empty() {
                if face.len() > outer.len() {
                    outer = face.clone();
                }
                faces.push(face);
            }
            w = emb.cw(v, w);
            if w == first {
                break;
            }
        }
    }
    for face in &faces {
        if *face != outer {
            triangulate_face(emb, face[0], face[1]);
        }
    }
    outer
}

fn make_biconnected(
    emb: &mut HalfEdges,
    start: usize,
    out: usize,
    counted: &mut HashSet<(usize, usize)>,
) -> Vec<usize> {
    if !counted.insert((start, out)) {
        return Vec::new();
    }
    let (mut v1, mut v2) = (start, out);
    let mut face = vec![start];
    let mut on_face: HashSet<usize> = HashSet::from([start]);
    let (_, mut v3) = emb.next_face_half_edge(v1, v2);
    while v2 != start || v3 != out {
        if on_face.contains(&v2) {
            emb.add_cw(v1, v3, Some(v2));
            emb.add_ccw(v3, v1, Some(v2));
            counted.insert((v2, v3));
            counted.insert((v3, v1));
            v2 = v1;
        } else {
            on_face.insert(v2);
            face.push(v2);
        }
        v1 = v2;
        (v2, v3) = emb.next_face_half_edge(v2, v3);
        counted.insert((v1, v2));
    }
    face
}

fn triangulate_face(emb: &mut HalfEdges, mut v1: usize, mut v2: usize) {
    let (_, mut v3) = emb.next_face_half_edge(v1, v2);
    let (_, mut v4) = emb.next_face_half_edge(v2, v3);
    if v1 == v2 || v1 == v3 {
        return;
    }
    while v1 != v4 {
        if emb.has_half_edge(v1, v3) {
            (v1, v2, v3) = (v2, v3, v4);
        } else {
            emb.add_cw(v1, v3, Some(v2));
            emb.add_ccw(v3, v1, Some(v2));
            (v2, v3) = (v3, v4);
        }
        (_, v4) = emb.next_face_half_edge(v2, v3);
    }
}

fn canonical_ordering(emb: &HalfEdges, outer: &[usize]) -> Vec<(usize, Vec<usize>)> {
    let n = emb.vertex_count();
    let v1 = outer[0];
    let v2 = outer[1];
    let mut chords: HashMap<usize, i64> = HashMap::new();
    let mut marked = vec![false; n];
    let mut ready: BTreeSet<usize> = outer.iter().copied().collect();

    let mut ccw_nbr: BTreeMap<usize, usize> = BTreeMap::new();
    let mut prev = v2;
    for &x in &outer[2..] {
        ccw_nbr.insert(prev, x);
        prev = x;
    }
    ccw_nbr.insert(prev, v1);
    let mut cw_nbr: BTreeMap<usize, usize> = BTreeMap::new();
    let mut prev = v1;
    for idx in (1..outer.len()).rev() {
        cw_nbr.insert(prev, outer[idx]);
        prev = outer[idx];
    }

    let is_outer_nbr = |ccw: &BTreeMap<usize, usize>, cw: &BTreeMap<usize, usize>, x: usize, y: usize| {
        match (ccw.get(&x), cw.get(&x)) {
            (None, Some(&c)) => c == y,
            (Some(&a), None) => a == y,
            (Some(&a), Some(&c)) => a == y || c == y,
            (None, None) => false,
        }
    };
    let on_outer = |marked: &[bool], ccw: &BTreeMap<usize, usize>, x: usize| {
        !marked[x] && (ccw.contains_key(&x) || x == v1)
    };

    for &v in outer {
        for nbr in emb.neighbors_cw(v) {
            if on_outer(&marked, &ccw_nbr, nbr) && !is_outer_nbr(&ccw_nbr, &cw_nbr, v, nbr) {
                *chords.entry(v).or_default() += 1;
                ready.remove(&v);
            }
        }
    }

    let mut order: Vec<(usize, Vec<usize>)> = vec![(usize::MAX, Vec::new()); n];
    order[0] = (v1, Vec::new());
    order[1] = (v2, Vec::new());
    ready.remove(&v1);
    ready.remove(&v2);

    for k in (2..n).rev() {
        let v = ready.pop_last().expect("canonical ordering ran out of candidates");
        marked[v] = true;
        let (mut wp, mut wq) = (None, None);
        for nbr in emb.neighbors_cw(v) {
            if marked[nbr] {
                continue;
            }
            if on_outer(&marked, &ccw_nbr, nbr) {
                if nbr == v1 {
                    wp = Some(v1);
                } else if nbr == v2 {
                    wq = Some(v2);
                } else if cw_nbr.get(&nbr) == Some(&v) {
                    wp = Some(nbr);
                } else {
                    wq = Some(nbr);
                }
            }
            if wp.is_some() && wq.is_some() {
                break;
            }
        }
        let (wp, wq) = (wp.unwrap(), wq.unwrap());
        let mut contour = vec![wp];
        let mut nbr = wp;
        while nbr != wq {
            let next = emb.ccw(v, nbr);
            contour.push(next);
            cw_nbr.insert(nbr, next);
            ccw_nbr.insert(next, nbr);
            nbr = next;
        }
        if contour.len() == 2 {
            for w in [wp, wq] {
                let c = chords.entry(w).or_default();
                *c -= 1;
                if *c == 0 {
                    ready.insert(w);
                }
            }
        } else {
            let inner: BTreeSet<usize> = contour[1..contour.len() - 1].iter().copied().collect();
            for &w in &inner {
                ready.insert(w);
                for x in emb.neighbors_cw(w) {
                    if on_outer(&marked, &ccw_nbr, x) && !is_outer_nbr(&ccw_nbr, &cw_nbr, w, x) {
                        *chords.entry(w).or_default() += 1;
                        ready.remove(&w);
                        if !inner.contains(&x) {
                            *chords.entry(x).or_default() += 1;
                            ready.remove(&x);
                        }
                    }
                }
            }
        }
        order[k] = (v, contour);
    }
    order
}
