//! Search for a planar support as a union of one spanning tree per block.

use std::collections::HashMap;

use crate::graph::{element_graph, SimpleGraph};
use crate::pair::PartitionPair;
use crate::planarity::is_planar;

/// Decodes a Prüfer sequence over `0..seq.len() + 2` into tree edges.
pub(crate) fn prufer_edges(seq: &[usize]) -> Vec<(usize, usize)> {
    let k = seq.len() + 2;
    let mut degree = vec![1usize; k];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(k - 1);
    for &x in seq {
        let leaf = (0..k).find(|&i| degree[i] == 1).unwrap();
        edges.push((leaf, x));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..k).filter(|&i| degree[i] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

/// Spanning trees of the complete graph on `members`, in lexicographic Prüfer
/// order, as element edge lists.
pub(crate) struct SpanningTrees<'a> {
    members: &'a [usize],
    seq: Vec<usize>,
    done: bool,
}

impl<'a> SpanningTrees<'a> {
    pub fn new(members: &'a [usize]) -> Self {
        SpanningTrees {
            members,
            seq: vec![0; members.len().saturating_sub(2)],
            done: false,
        }
    }
}

impl Iterator for SpanningTrees<'_> {
    type Item = Vec<(usize, usize)>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        let k = self.members.len();
        if k < 2 {
            self.done = true;
            return Some(Vec::new());
        }
        let m = self.members;
        let tree = prufer_edges(&self.seq)
            .into_iter()
            .map(|(a, b)| (m[a].min(m[b]), m[a].max(m[b])))
            .collect();
        let mut i = self.seq.len();
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            self.seq[i] += 1;
            if self.seq[i] < k {
                break;
            }
            self.seq[i] = 0;
        }
        Some(tree)
    }
}

pub(crate) enum SearchOutcome {
    Found(SimpleGraph),
    Exhausted,
    OutOfBudget,
}

struct State<'a> {
    blocks: Vec<Vec<usize>>,
    graph: SimpleGraph,
    multiplicity: HashMap<(usize, usize), u32>,
    spent: &'a mut u64,
    budget: u64,
}

impl State<'_> {
    fn add(&mut self, tree: &[(usize, usize)]) -> bool {
        let mut grew = false;
        for &e in tree {
            let m = self.multiplicity.entry(e).or_insert(0);
            *m += 1;
            if *m == 1 {
                self.graph.add_edge(e.0, e.1).unwrap();
                grew = true;
            }
        }
        grew
    }

    fn remove(&mut self, tree: &[(usize, usize)]) {
        for e in tree {
            let m = self.multiplicity.get_mut(e).unwrap();
            *m -= 1;
            if *m == 0 {
                self.graph.remove_edge(e.0, e.1);
            }
        }
    }

    fn run(&mut self, depth: usize) -> Option<SearchOutcome> {
        if depth == self.blocks.len() {
            return Some(SearchOutcome::Found(self.graph.clone()));
        }
        let members = self.blocks[depth].clone();
        for tree in SpanningTrees::new(&members) {
            let grew = self.add(&tree);
            let mut planar = true;
            if grew {
                if *self.spent >= self.budget {
                    self.remove(&tree);
                    return Some(SearchOutcome::OutOfBudget);
                }
                *self.spent += 1;
                planar = is_planar(&self.graph);
            }
            if planar {
                if let Some(found) = self.run(depth + 1) {
                    self.remove(&tree);
                    return Some(found);
                }
            }
            self.remove(&tree);
        }
        None
    }
}

/// Explores unions of spanning trees, largest blocks first, pruning as soon
/// as a partial union is non-planar. `spent` counts planarity tests.
pub(crate) fn spanning_tree_search(pair: &PartitionPair, budget: u64, spent: &mut u64) -> SearchOutcome {
    let mut order: Vec<_> = pair.block_refs().filter(|&b| pair.block(b).len() >= 2).collect();
    order.sort_by_key(|&b| std::cmp::Reverse(pair.block(b).len()));
    let blocks = order.iter().map(|&b| pair.block(b).members().to_vec()).collect();
    let mut state = State {
        blocks,
        graph: element_graph(pair),
        multiplicity: HashMap::new(),
        spent,
        budget,
    };
    state.run(0).unwrap_or(SearchOutcome::Exhausted)
}
