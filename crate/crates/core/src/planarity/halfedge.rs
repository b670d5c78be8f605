use std::collections::HashMap;

/// Mutable rotation system stored as doubly linked cyclic neighbor lists.
///
/// `cw[v][w]` is the neighbor following `w` clockwise around `v`. The same
/// structure is reused while augmenting an embedding with dummy edges.
#[derive(Debug, Clone, Default)]
pub(crate) struct HalfEdges {
    cw: Vec<HashMap<usize, usize>>,
    ccw: Vec<HashMap<usize, usize>>,
    first: Vec<Option<usize>>,
}

impl HalfEdges {
    pub fn new(n: usize) -> Self {
        HalfEdges {
            cw: vec![HashMap::new(); n],
            ccw: vec![HashMap::new(); n],
            first: vec![None; n],
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.first.len()
    }

    pub fn has_half_edge(&self, v: usize, w: usize) -> bool {
        self.cw[v].contains_key(&w)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.cw[v].len()
    }

    pub fn cw(&self, v: usize, w: usize) -> usize {
        self.cw[v][&w]
    }

    pub fn ccw(&self, v: usize, w: usize) -> usize {
        self.ccw[v][&w]
    }

    fn add_lone(&mut self, v: usize, w: usize) {
        self.cw[v].insert(w, w);
        self.ccw[v].insert(w, w);
        self.first[v] = Some(w);
    }

    /// Inserts `v -> w` directly clockwise after `reference`.
    pub fn add_cw(&mut self, v: usize, w: usize, reference: Option<usize>) {
        let Some(r) = reference else {
            self.add_lone(v, w);
            return;
        };
        let after = self.cw[v][&r];
        self.cw[v].insert(r, w);
        self.cw[v].insert(w, after);
        self.ccw[v].insert(after, w);
        self.ccw[v].insert(w, r);
    }

    /// Inserts `v -> w` directly counterclockwise before `reference`.
    pub fn add_ccw(&mut self, v: usize, w: usize, reference: Option<usize>) {
        let Some(r) = reference else {
            self.add_lone(v, w);
            return;
        };
        let before = self.ccw[v][&r];
        self.add_cw(v, w, Some(before));
        if self.first[v] == Some(r) {
            self.first[v] = Some(w);
        }
    }

    pub fn add_first(&mut self, v: usize, w: usize) {
        let r = self.first[v];
        self.add_ccw(v, w, r);
    }

    /// Neighbors of `v` in clockwise order starting at its first neighbor.
    pub fn neighbors_cw(&self, v: usize) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.degree(v));
        if let Some(f) = self.first[v] {
            let mut cur = f;
            loop {
                out.push(cur);
                cur = self.cw[v][&cur];
                if cur == f {
                    break;
                }
            }
        }
        out
    }

    /// Half-edge following `v -> w` on the face to its right.
    pub fn next_face_half_edge(&self, v: usize, w: usize) -> (usize, usize) {
        (w, self.ccw[w][&v])
    }

    pub fn traverse_face(&self, v: usize, w: usize) -> Vec<(usize, usize)> {
        let mut out = vec![(v, w)];
        let (mut a, mut b) = self.next_face_half_edge(v, w);
        while (a, b) != (v, w) {
            out.push((a, b));
            (a, b) = self.next_face_half_edge(a, b);
        }
        out
    }
}
