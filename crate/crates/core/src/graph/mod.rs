//! Graphs derived from a partition pair and the support property.

mod simple;

use std::collections::{BTreeSet, HashMap};

use crate::pair::{BlockId, BlockRef, PartitionPair, Side};

pub use simple::{GraphError, SimpleGraph};

/// Element/block incidence graph of a pair.
///
/// Vertices `0..n` are the elements in universe order, followed by one vertex
/// per block in global block order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteMap {
    pub graph: SimpleGraph,
    pub element_count: usize,
}

impl BipartiteMap {
    pub fn element_vertex(&self, u: usize) -> usize {
        u
    }

    pub fn block_vertex(&self, pair: &PartitionPair, b: BlockRef) -> usize {
        self.element_count + pair.global_block_index(b)
    }

    pub fn is_element_vertex(&self, v: usize) -> bool {
        v < self.element_count
    }
}

pub fn bipartite_map(pair: &PartitionPair) -> BipartiteMap {
    let n = pair.len();
    let mut labels: Vec<String> = pair.elements().iter().map(|e| e.0.clone()).collect();
    labels.extend(pair.block_refs().map(|b| pair.block_id(b).to_string()));
    let mut graph = SimpleGraph::with_labels(labels);
    for u in 0..n {
        for side in Side::BOTH {
            let b = pair.block_of(u, side);
            graph.add_edge(u, n + pair.global_block_index(b)).unwrap();
        }
    }
    BipartiteMap {
        graph,
        element_count: n,
    }
}

/// Blocks adjacent when they share an element; vertex `i` is global block `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockIntersectionGraph {
    pub graph: SimpleGraph,
    pub p0_count: usize,
}

impl BlockIntersectionGraph {
    pub fn side(&self, v: usize) -> Side {
        if v < self.p0_count {
            Side::P0
        } else {
            Side::P1
        }
    }
}

pub fn block_intersection_graph(pair: &PartitionPair) -> BlockIntersectionGraph {
    let labels = pair.block_refs().map(|b| pair.block_id(b).to_string()).collect();
    let mut graph = SimpleGraph::with_labels(labels);
    for u in 0..pair.len() {
        let a = pair.global_block_index(pair.block_of(u, Side::P0));
        let b = pair.global_block_index(pair.block_of(u, Side::P1));
        graph.add_edge(a, b).unwrap();
    }
    BlockIntersectionGraph {
        graph,
        p0_count: pair.partition(Side::P0).len(),
    }
}

/// Edgeless graph whose vertices are the elements of `pair`, labelled by id.
pub fn element_graph(pair: &PartitionPair) -> SimpleGraph {
    SimpleGraph::with_labels(pair.elements().iter().map(|e| e.0.clone()).collect())
}

/// Outcome of a support check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SupportCheck {
    Support,
    Disconnected(BlockId),
}

impl SupportCheck {
    pub fn is_support(&self) -> bool {
        matches!(self, SupportCheck::Support)
    }
}

/// Reorders `graph` so that vertex `i` is element `i` of `pair`, matching by label.
pub fn align_to_universe(graph: &SimpleGraph, pair: &PartitionPair) -> Result<SimpleGraph, GraphError> {
    if graph.vertex_count() != pair.len() {
        return Err(GraphError::VertexSetMismatch);
    }
    if graph
        .labels()
        .iter()
        .zip(pair.elements())
        .all(|(l, e)| *l == e.0)
    {
        return Ok(graph.clone());
    }
    let mut pos = vec![usize::MAX; graph.vertex_count()];
    for (v, l) in graph.labels().iter().enumerate() {
        match pair.element_index(l) {
            Some(u) if pos[v] == usize::MAX => pos[v] = u,
            _ => return Err(GraphError::VertexSetMismatch),
        }
    }
    let mut seen = vec![false; pair.len()];
    for &u in &pos {
        if std::mem::replace(&mut seen[u], true) {
            return Err(GraphError::VertexSetMismatch);
        }
    }
    let mut out = element_graph(pair);
    for (u, v) in graph.edges() {
        out.add_edge(pos[u], pos[v])?;
    }
    Ok(out)
}

/// Checks that every block induces a connected subgraph. Vertices are matched
/// to elements by label.
pub fn is_support(graph: &SimpleGraph, pair: &PartitionPair) -> Result<SupportCheck, GraphError> {
    let g = align_to_universe(graph, pair)?;
    Ok(check_aligned(&g, pair))
}

fn check_aligned(g: &SimpleGraph, pair: &PartitionPair) -> SupportCheck {
    for b in pair.block_refs() {
        if !g.induces_connected(pair.block(b).members()) {
            return SupportCheck::Disconnected(pair.block_id(b));
        }
    }
    SupportCheck::Support
}

/// A graph on the universe in which every block induces a connected subgraph.
/// Vertex `i` is element `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupportGraph {
    graph: SimpleGraph,
}

impl SupportGraph {
    pub fn new(graph: &SimpleGraph, pair: &PartitionPair) -> Result<SupportGraph, GraphError> {
        let g = align_to_universe(graph, pair)?;
        match check_aligned(&g, pair) {
            SupportCheck::Support => Ok(SupportGraph { graph: g }),
            SupportCheck::Disconnected(b) => Err(GraphError::NotASupport(b)),
        }
    }

    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    pub fn into_graph(self) -> SimpleGraph {
        self.graph
    }
}

/// Removes cycle edges inside blocks until every block induces a tree.
///
/// Blocks are visited partition 0 first, in block order; within a block the
/// smallest removable edge goes first. An edge is removable when it lies on a
/// cycle of its block and, if both ends also share a block of the other
/// partition, on a cycle there too.
pub fn reduce_to_tree_based(support: &SupportGraph, pair: &PartitionPair) -> SupportGraph {
    let mut g = support.graph.clone();
    for b in pair.block_refs() {
        let members = pair.block(b).members();
        loop {
            let inside: BTreeSet<usize> = members.iter().copied().collect();
            let block_edges: Vec<(usize, usize)> = g
                .edges()
                .filter(|(u, v)| inside.contains(u) && inside.contains(v))
                .collect();
            if block_edges.len() < members.len() {
                break;
            }
            let other = b.side.other();
            let removable = block_edges.into_iter().find(|&(u, v)| {
                g.remove_edge(u, v);
                let mut ok = g.induces_connected(members);
                let ob = pair.block_of(u, other);
                if ok && ob == pair.block_of(v, other) {
                    ok = g.induces_connected(pair.block(ob).members());
                }
                g.add_edge(u, v).unwrap();
                ok
            });
            match removable {
                Some((u, v)) => {
                    g.remove_edge(u, v);
                }
                None => unreachable!("a cycle inside a block always has a removable edge"),
            }
        }
    }
    SupportGraph { graph: g }
}

/// All element pairs that share a block, as `(min, max)` index pairs.
pub fn candidate_edges(pair: &PartitionPair) -> BTreeSet<(usize, usize)> {
    let mut out = BTreeSet::new();
    for b in pair.block_refs() {
        let m = pair.block(b).members();
        for (i, &u) in m.iter().enumerate() {
            for &v in &m[i + 1..] {
                out.insert((u.min(v), u.max(v)));
            }
        }
    }
    out
}

/// Number of edges of `g` with both ends in each block, keyed by block.
pub fn block_edge_counts(g: &SimpleGraph, pair: &PartitionPair) -> HashMap<BlockRef, usize> {
    let mut counts: HashMap<BlockRef, usize> = pair.block_refs().map(|b| (b, 0)).collect();
    for (u, v) in g.edges() {
        for side in Side::BOTH {
            let bu = pair.block_of(u, side);
            if bu == pair.block_of(v, side) {
                *counts.get_mut(&bu).unwrap() += 1;
            }
        }
    }
    counts
}
