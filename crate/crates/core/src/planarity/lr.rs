//! Left-right planarity test with embedding extraction.
//!
//! DFS orientation computes lowpoints and nesting depths, a second DFS merges
//! return-edge intervals into conflict pairs, and a third DFS places back
//! edges left or right of the tree path. All three are iterative so deep
//! graphs do not exhaust the stack.

use std::collections::HashMap;

use super::halfedge::HalfEdges;
use crate::graph::SimpleGraph;

const NONE: usize = usize::MAX;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Interval {
    low: Option<usize>,
    high: Option<usize>,
}

impl Interval {
    const EMPTY: Interval = Interval {
        low: None,
        high: None,
    };

    fn is_empty(&self) -> bool {
        self.low.is_none() && self.high.is_none()
    }
}

#[derive(Debug, Clone, Copy)]
struct ConflictPair {
    left: Interval,
    right: Interval,
}

impl ConflictPair {
    fn swap(&mut self) {
        std::mem::swap(&mut self.left, &mut self.right);
    }
}

struct Lr<'a> {
    g: &'a SimpleGraph,
    height: Vec<usize>,
    roots: Vec<usize>,
    src: Vec<usize>,
    dst: Vec<usize>,
    oriented: HashMap<(usize, usize), usize>,
    out: Vec<Vec<usize>>,
    lowpt: Vec<usize>,
    lowpt2: Vec<usize>,
    nesting: Vec<i64>,
    parent_edge: Vec<Option<usize>>,
    ordered: Vec<Vec<usize>>,
    reference: Vec<Option<usize>>,
    side: Vec<i64>,
    stack: Vec<ConflictPair>,
    stack_bottom: Vec<usize>,
    lowpt_edge: Vec<usize>,
}

fn key(u: usize, v: usize) -> (usize, usize) {
    (u.min(v), u.max(v))
}

impl<'a> Lr<'a> {
    fn new(g: &'a SimpleGraph) -> Self {
        let n = g.vertex_count();
        let m = g.edge_count();
        Lr {
            g,
            height: vec![NONE; n],
            roots: Vec::new(),
            src: Vec::with_capacity(m),
            dst: Vec::with_capacity(m),
            oriented: HashMap::with_capacity(m),
            out: vec![Vec::new(); n],
            lowpt: Vec::with_capacity(m),
            lowpt2: Vec::with_capacity(m),
            nesting: Vec::with_capacity(m),
            parent_edge: vec![None; n],
            ordered: Vec::new(),
            reference: vec![None; m],
            side: vec![1; m],
            stack: Vec::new(),
            stack_bottom: vec![0; m],
            lowpt_edge: vec![NONE; m],
        }
    }

    fn orient(&mut self, v: usize, w: usize) -> usize {
        let e = self.src.len();
        self.src.push(v);
        self.dst.push(w);
        self.oriented.insert(key(v, w), e);
        self.out[v].push(e);
        self.lowpt.push(self.height[v]);
        self.lowpt2.push(self.height[v]);
        self.nesting.push(0);
        e
    }

    fn dfs_orientation(&mut self, root: usize) {
        let n = self.g.vertex_count();
        let mut ind = vec![0usize; n];
        let mut resumed = vec![false; n];
        let mut stack = vec![root];
        while let Some(v) = stack.pop() {
            let parent = self.parent_edge[v];
            while ind[v] < self.g.degree(v) {
                let w = self.g.neighbors(v)[ind[v]];
                let vw;
                if resumed[v] {
                    resumed[v] = false;
                    vw = self.oriented[&key(v, w)];
                } else {
                    if self.oriented.contains_key(&key(v, w)) {
                        ind[v] += 1;
                        continue;
                    }
                    vw = self.orient(v, w);
                    if self.height[w] == NONE {
                        self.parent_edge[w] = Some(vw);
                        self.height[w] = self.height[v] + 1;
                        resumed[v] = true;
                        stack.push(v);
                        stack.push(w);
                        break;
                    }
                    self.lowpt[vw] = self.height[w];
                }
                self.nesting[vw] = 2 * self.lowpt[vw] as i64;
                if self.lowpt2[vw] < self.height[v] {
                    self.nesting[vw] += 1;
                }
                if let Some(e) = parent {
                    if self.lowpt[vw] < self.lowpt[e] {
                        self.lowpt2[e] = self.lowpt[e].min(self.lowpt2[vw]);
                        self.lowpt[e] = self.lowpt[vw];
                    } else if self.lowpt[vw] > self.lowpt[e] {
                        self.lowpt2[e] = self.lowpt2[e].min(self.lowpt[vw]);
                    } else {
                        self.lowpt2[e] = self.lowpt2[e].min(self.lowpt2[vw]);
                    }
                }
                ind[v] += 1;
            }
        }
    }

    fn sort_adjacency(&mut self) {
        let nesting = &self.nesting;
        self.ordered = self
            .out
            .iter()
            .map(|edges| {
                let mut e = edges.clone();
                e.sort_by_key(|&x| nesting[x]);
                e
            })
            .collect();
    }

    fn conflicting(&self, i: &Interval, b: usize) -> bool {
        match i.high {
            Some(h) => self.lowpt[h] > self.lowpt[b],
            None => false,
        }
    }

    fn lowest(&self, p: &ConflictPair) -> usize {
        match (p.left.low, p.right.low) {
            (None, Some(r)) => self.lowpt[r],
            (Some(l), None) => self.lowpt[l],
            (Some(l), Some(r)) => self.lowpt[l].min(self.lowpt[r]),
            (None, None) => unreachable!("empty conflict pair on the stack"),
        }
    }

    fn dfs_testing(&mut self, root: usize) -> bool {
        let n = self.g.vertex_count();
        let mut ind = vec![0usize; n];
        let mut resumed = vec![false; n];
        let mut stack = vec![root];
        while let Some(v) = stack.pop() {
            let parent = self.parent_edge[v];
            let mut descended = false;
            while ind[v] < self.ordered[v].len() {
                let ei = self.ordered[v][ind[v]];
                let w = self.dst[ei];
                if resumed[v] {
                    resumed[v] = false;
                } else {
                    self.stack_bottom[ei] = self.stack.len();
                    if self.parent_edge[w] == Some(ei) {
                        resumed[v] = true;
                        stack.push(v);
                        stack.push(w);
                        descended = true;
                        break;
                    }
                    self.lowpt_edge[ei] = ei;
                    self.stack.push(ConflictPair {
                        left: Interval::EMPTY,
                        right: Interval {
                            low: Some(ei),
                            high: Some(ei),
                        },
                    });
                }
                if self.lowpt[ei] < self.height[v] {
                    let e = parent.expect("only non-root vertices have return edges");
                    if ei == self.ordered[v][0] {
                        self.lowpt_edge[e] = self.lowpt_edge[ei];
                    } else if !self.add_constraints(ei, e) {
                        return false;
                    }
                }
                ind[v] += 1;
            }
            if !descended {
                if let Some(e) = parent {
                    self.remove_back_edges(e);
                }
            }
        }
        true
    }

    fn add_constraints(&mut self, ei: usize, e: usize) -> bool {
        let mut p = ConflictPair {
            left: Interval::EMPTY,
            right: Interval::EMPTY,
        };
        loop {
            let mut q = self.stack.pop().expect("conflict stack underflow");
            if !q.left.is_empty() {
                q.swap();
            }
            if !q.left.is_empty() {
                return false;
            }
            let qlow = q.right.low.expect("non-empty right interval");
            if self.lowpt[qlow] > self.lowpt[e] {
                if p.right.is_empty() {
                    p.right = q.right;
                } else {
                    self.reference[p.right.low.unwrap()] = q.right.high;
                }
                p.right.low = q.right.low;
            } else {
                self.reference[qlow] = Some(self.lowpt_edge[e]);
            }
            if self.stack.len() == self.stack_bottom[ei] {
                break;
            }
        }
        while let Some(top) = self.stack.last() {
            if !(self.conflicting(&top.left, ei) || self.conflicting(&top.right, ei)) {
                break;
            }
            let mut q = self.stack.pop().unwrap();
            if self.conflicting(&q.right, ei) {
                q.swap();
            }
            if self.conflicting(&q.right, ei) {
                return false;
            }
            if let Some(pl) = p.right.low {
                self.reference[pl] = q.right.high;
            }
            if q.right.low.is_some() {
                p.right.low = q.right.low;
            }
            if p.left.is_empty() {
                p.left = q.left;
            } else if let Some(pl) = p.left.low {
                self.reference[pl] = q.left.high;
            }
            p.left.low = q.left.low;
        }
        if !(p.left.is_empty() && p.right.is_empty()) {
            self.stack.push(p);
        }
        true
    }

    fn remove_back_edges(&mut self, e: usize) {
        let u = self.src[e];
        while let Some(top) = self.stack.last() {
            if self.lowest(top) != self.height[u] {
                break;
            }
            let p = self.stack.pop().unwrap();
            if let Some(l) = p.left.low {
                self.side[l] = -1;
            }
        }
        if let Some(mut p) = self.stack.pop() {
            while let Some(h) = p.left.high {
                if self.dst[h] != u {
                    break;
                }
                p.left.high = self.reference[h];
            }
            if p.left.high.is_none() {
                if let Some(l) = p.left.low {
                    self.reference[l] = p.right.low;
                    self.side[l] = -1;
                    p.left.low = None;
                }
            }
            while let Some(h) = p.right.high {
                if self.dst[h] != u {
                    break;
                }
                p.right.high = self.reference[h];
            }
            if p.right.high.is_none() {
                if let Some(r) = p.right.low {
                    self.reference[r] = p.left.low;
                    self.side[r] = -1;
                    p.right.low = None;
                }
            }
            self.stack.push(p);
        }
        if self.lowpt[e] < self.height[u] {
            let top = self.stack.last().expect("return edge implies a conflict pair");
            let (hl, hr) = (top.left.high, top.right.high);
            self.reference[e] = match (hl, hr) {
                (Some(l), None) => Some(l),
                (Some(l), Some(r)) if self.lowpt[l] > self.lowpt[r] => Some(l),
                _ => hr,
            };
        }
    }

    fn sign(&mut self, e: usize) -> i64 {
        let mut stack = vec![e];
        let mut old_ref: HashMap<usize, usize> = HashMap::new();
        while let Some(x) = stack.pop() {
            if let Some(r) = self.reference[x] {
                stack.push(x);
                stack.push(r);
                old_ref.insert(x, r);
                self.reference[x] = None;
            } else if let Some(&r) = old_ref.get(&x) {
                self.side[x] *= self.side[r];
            }
        }
        self.side[e]
    }

    fn embed(&mut self) -> HalfEdges {
        let n = self.g.vertex_count();
        for e in 0..self.src.len() {
            self.nesting[e] *= self.sign(e);
        }
        self.sort_adjacency();
        let mut emb = HalfEdges::new(n);
        for v in 0..n {
            let mut prev = None;
            for &e in &self.ordered[v] {
                emb.add_cw(v, self.dst[e], prev);
                prev = Some(self.dst[e]);
            }
        }
        let mut left_ref = vec![NONE; n];
        let mut right_ref = vec![NONE; n];
        let mut ind = vec![0usize; n];
        for &root in &self.roots {
            let mut stack = vec![root];
            while let Some(v) = stack.pop() {
                while ind[v] < self.ordered[v].len() {
                    let ei = self.ordered[v][ind[v]];
                    ind[v] += 1;
                    let w = self.dst[ei];
                    if self.parent_edge[w] == Some(ei) {
                        emb.add_first(w, v);
                        left_ref[v] = w;
                        right_ref[v] = w;
                        stack.push(v);
                        stack.push(w);
                        break;
                    }
                    if self.side[ei] == 1 {
                        emb.add_cw(w, v, Some(right_ref[w]));
                    } else {
                        emb.add_ccw(w, v, Some(left_ref[w]));
                        left_ref[w] = v;
                    }
                }
            }
        }
        emb
    }
}

/// Runs the test; returns a rotation system when the graph is planar.
pub(crate) fn lr_planarity(g: &SimpleGraph) -> Option<HalfEdges> {
    let n = g.vertex_count();
    if n > 2 && g.edge_count() > 3 * n - 6 {
        return None;
    }
    let mut lr = Lr::new(g);
    for v in 0..n {
        if lr.height[v] == NONE {
            lr.height[v] = 0;
            lr.roots.push(v);
            lr.dfs_orientation(v);
        }
    }
    lr.sort_adjacency();
    let roots = lr.roots.clone();
    for r in roots {
        if !lr.dfs_testing(r) {
            return None;
        }
    }
    Some(lr.embed())
}
