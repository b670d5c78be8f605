use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;

use thiserror::Error;

use crate::pair::BlockId;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
    #[error("graph vertex set does not match the universe")]
    VertexSetMismatch,
    #[error("block {0} is not connected in the graph")]
    NotASupport(BlockId),
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
}

/// Undirected graph on vertices `0..n` without loops or parallel edges.
///
/// Every vertex carries a string label, used for the text exchange format and
/// for matching a graph against a universe. Adjacency is kept both as an edge
/// set and as per-vertex lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    labels: Vec<String>,
    adj: Vec<Vec<usize>>,
    edges: BTreeSet<(usize, usize)>,
}

fn key(u: usize, v: usize) -> (usize, usize) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

impl SimpleGraph {
    /// `n` vertices labelled by their index.
    pub fn new(n: usize) -> Self {
        Self::with_labels((0..n).map(|i| i.to_string()).collect())
    }

    pub fn with_labels(labels: Vec<String>) -> Self {
        let n = labels.len();
        SimpleGraph {
            labels,
            adj: vec![Vec::new(); n],
            edges: BTreeSet::new(),
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = SimpleGraph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = SimpleGraph::new(n);
        for u in 0..n {
            for v in (u + 1)..n {
                g.add_edge(u, v).unwrap();
            }
        }
        g
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut g = SimpleGraph::new(a + b);
        for u in 0..a {
            for v in 0..b {
                g.add_edge(u, a + v).unwrap();
            }
        }
        g
    }

    /// `rows x cols` grid, vertex `r * cols + c`.
    pub fn grid(rows: usize, cols: usize) -> Self {
        let mut g = SimpleGraph::new(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                let v = r * cols + c;
                if c + 1 < cols {
                    g.add_edge(v, v + 1).unwrap();
                }
                if r + 1 < rows {
                    g.add_edge(v, v + cols).unwrap();
                }
            }
        }
        g
    }

    /// Replaces every edge by a path of length two.
    pub fn subdivide_edges(&self) -> SimpleGraph {
        let mut labels = self.labels.clone();
        let mut g_edges = Vec::new();
        for &(u, v) in &self.edges {
            let mid = labels.len();
            labels.push(format!("{}-{}", self.labels[u], self.labels[v]));
            g_edges.push((u, mid));
            g_edges.push((mid, v));
        }
        let mut g = SimpleGraph::with_labels(labels);
        for (u, v) in g_edges {
            g.add_edge(u, v).unwrap();
        }
        g
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn add_vertex(&mut self, label: impl Into<String>) -> usize {
        self.labels.push(label.into());
        self.adj.push(Vec::new());
        self.labels.len() - 1
    }

    /// Adds `{u, v}`; returns `false` if it was already present.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool, GraphError> {
        let n = self.vertex_count();
        if u >= n {
            return Err(GraphError::VertexOutOfRange(u));
        }
        if v >= n {
            return Err(GraphError::VertexOutOfRange(v));
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if !self.edges.insert(key(u, v)) {
            return Ok(false);
        }
        self.adj[u].push(v);
        self.adj[v].push(u);
        Ok(true)
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        if !self.edges.remove(&key(u, v)) {
            return false;
        }
        self.adj[u].retain(|&w| w != v);
        self.adj[v].retain(|&w| w != u);
        true
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&key(u, v))
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Edges as `(min, max)` pairs in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    /// Component index per vertex and the number of components.
    pub fn components(&self) -> (Vec<usize>, usize) {
        let n = self.vertex_count();
        let mut comp = vec![usize::MAX; n];
        let mut count = 0;
        let mut stack = Vec::new();
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = count;
            stack.push(s);
            while let Some(v) = stack.pop() {
                for &w in &self.adj[v] {
                    if comp[w] == usize::MAX {
                        comp[w] = count;
                        stack.push(w);
                    }
                }
            }
            count += 1;
        }
        (comp, count)
    }

    /// Whether the subgraph induced by `vertices` is connected (empty sets count
    /// as connected).
    pub fn induces_connected(&self, vertices: &[usize]) -> bool {
        if vertices.len() <= 1 {
            return true;
        }
        let inside: HashMap<usize, bool> = vertices.iter().map(|&v| (v, false)).collect();
        let mut seen = inside;
        let mut stack = vec![vertices[0]];
        seen.insert(vertices[0], true);
        let mut reached = 1;
        while let Some(v) = stack.pop() {
            for &w in &self.adj[v] {
                if let Some(flag) = seen.get_mut(&w) {
                    if !*flag {
                        *flag = true;
                        reached += 1;
                        stack.push(w);
                    }
                }
            }
        }
        reached == vertices.len()
    }

    /// Subgraph on `keep` (in that order), relabelled `0..keep.len()`.
    pub fn induced(&self, keep: &[usize]) -> SimpleGraph {
        let pos: HashMap<usize, usize> = keep.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut g = SimpleGraph::with_labels(keep.iter().map(|&v| self.labels[v].clone()).collect());
        for &(u, v) in &self.edges {
            if let (Some(&a), Some(&b)) = (pos.get(&u), pos.get(&v)) {
                g.add_edge(a, b).unwrap();
            }
        }
        g
    }

    /// `v <id>` / `e <id> <id>` text form.
    pub fn to_exchange(&self) -> String {
        let mut out = String::new();
        for l in &self.labels {
            let _ = writeln!(out, "v {l}");
        }
        for &(u, v) in &self.edges {
            let _ = writeln!(out, "e {} {}", self.labels[u], self.labels[v]);
        }
        out
    }

    pub fn parse_exchange(text: &str) -> Result<SimpleGraph, GraphError> {
        let mut g = SimpleGraph::with_labels(Vec::new());
        let mut index: HashMap<String, usize> = HashMap::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let syntax = |message: &str| GraphError::Syntax {
                line: i + 1,
                message: message.to_string(),
            };
            let tokens: Vec<&str> = line.split_whitespace().collect();
            match tokens.as_slice() {
                ["v", id] => {
                    if index.contains_key(*id) {
                        return Err(syntax("duplicate vertex"));
                    }
                    index.insert(id.to_string(), g.add_vertex(*id));
                }
                ["e", a, b] => {
                    let (Some(&u), Some(&v)) = (index.get(*a), index.get(*b)) else {
                        return Err(syntax("edge references an undeclared vertex"));
                    };
                    if !g.add_edge(u, v).map_err(|e| syntax(&e.to_string()))? {
                        return Err(syntax("parallel edge"));
                    }
                }
                _ => return Err(syntax("expected `v <id>` or `e <id> <id>`")),
            }
        }
        Ok(g)
    }
}
