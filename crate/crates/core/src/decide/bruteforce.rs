//! Exhaustive planar-support search over subsets of candidate edges.
//!
//! Subsets are explored by include/exclude branching. A branch is cut when
//! its included edges are already non-planar (supersets stay non-planar) or
//! when even adding every undecided edge leaves some block disconnected.

use crate::graph::{candidate_edges, element_graph};
use crate::pair::PartitionPair;
use crate::planarity::is_planar;

struct Oracle<'a> {
    pair: &'a PartitionPair,
    edges: Vec<(usize, usize)>,
    blocks: Vec<u64>,
}

impl Oracle<'_> {
    fn connected(&self, mask: u64) -> bool {
        let n = self.pair.len();
        let mut adj = vec![0u64; n];
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            if mask >> i & 1 == 1 {
                adj[u] |= 1 << v;
                adj[v] |= 1 << u;
            }
        }
        self.blocks.iter().all(|&b| {
            let start = b & b.wrapping_neg();
            let mut reach = start;
            let mut frontier = start;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let new = adj[v] & b & !reach;
                reach |= new;
                frontier |= new;
            }
            reach == b
        })
    }

    fn planar(&self, mask: u64) -> bool {
        let mut g = element_graph(self.pair);
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            if mask >> i & 1 == 1 {
                g.add_edge(u, v).unwrap();
            }
        }
        is_planar(&g)
    }

    fn search(&self, i: usize, included: u64) -> Option<u64> {
        if self.connected(included) {
            return self.planar(included).then_some(included);
        }
        let m = self.edges.len();
        if i == m {
            return None;
        }
        let rest = if m == 64 { u64::MAX } else { (1u64 << m) - 1 } & !((1u64 << i) - 1);
        if !self.connected(included | rest) {
            return None;
        }
        let with = included | 1 << i;
        if self.planar(with) {
            if let Some(found) = self.search(i + 1, with) {
                return Some(found);
            }
        }
        self.search(i + 1, included)
    }
}

/// Returns the edge set of some planar support, or `None` when none exists.
/// Requires at most 64 elements and 64 candidate edges.
pub(crate) fn planar_support_subset(pair: &PartitionPair) -> Option<Vec<(usize, usize)>> {
    let edges: Vec<(usize, usize)> = candidate_edges(pair).into_iter().collect();
    assert!(pair.len() <= 64 && edges.len() <= 64);
    let blocks = pair
        .block_refs()
        .map(|b| pair.block(b).members().iter().fold(0u64, |m, &u| m | 1 << u))
        .collect();
    let oracle = Oracle { pair, edges, blocks };
    oracle.search(0, 0).map(|mask| {
        oracle
            .edges
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect()
    })
}
