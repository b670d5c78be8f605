//! Deciders for weak, strong and full embeddability.
//!
//! Weak embeddability always holds. Full embeddability is planarity of the
//! bipartite map. Strong embeddability is existence of a planar support; it
//! is NP-complete, so [`decide_strong`] runs an exact search under a budget
//! counted in planarity tests and may answer [`Verdict::Unknown`].

mod bruteforce;
mod search;

use std::fmt;

use thiserror::Error;

use crate::graph::{bipartite_map, block_intersection_graph, candidate_edges, element_graph, is_support, SimpleGraph, SupportGraph};
use crate::pair::{PartitionPair, Side};
use crate::planarity::is_planar;

use search::{spanning_tree_search, SearchOutcome};

/// Default number of planarity tests the strong search may perform.
pub const DEFAULT_BUDGET: u64 = 1_000_000;

/// Default candidate-edge limit of [`decide_strong_bruteforce`].
pub const BRUTEFORCE_EDGE_LIMIT: usize = 24;

pub fn decide_weak(_pair: &PartitionPair) -> bool {
    true
}

pub fn decide_full(pair: &PartitionPair) -> bool {
    is_planar(&bipartite_map(pair).graph)
}

/// A non-planar graph whose 1-subdivision is an induced subgraph of the block
/// intersection graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubdivisionCore {
    /// Partition whose blocks are the core vertices.
    pub side: Side,
    /// Vertex `i` is block `i` of `side`.
    pub graph: SimpleGraph,
}

impl SubdivisionCore {
    /// Names the core when it is a complete or complete bipartite graph.
    pub fn describe(&self) -> String {
        let g = &self.graph;
        let active: Vec<usize> = (0..g.vertex_count()).filter(|&v| g.degree(v) > 0).collect();
        let n = active.len();
        if n >= 1 && g.edge_count() == n * (n - 1) / 2 {
            return format!("K{n}");
        }
        if let Some((a, b)) = complete_bipartite_sides(g, &active) {
            return format!("K{a},{b}");
        }
        format!("{} vertices, {} edges", n, g.edge_count())
    }
}

fn complete_bipartite_sides(g: &SimpleGraph, active: &[usize]) -> Option<(usize, usize)> {
    let first = *active.first()?;
    let right: Vec<usize> = g.neighbors(first).to_vec();
    let left: Vec<usize> = active.iter().copied().filter(|v| !right.contains(v)).collect();
    let complete = left.iter().all(|&l| right.iter().all(|&r| g.has_edge(l, r)));
    let (a, b) = (left.len().min(right.len()), left.len().max(right.len()));
    (complete && g.edge_count() == a * b).then_some((a, b))
}

/// If every block of one partition meets exactly two blocks of the other,
/// builds the core on the other partition and returns it when non-planar.
/// A returned core proves the pair is not strongly embeddable; `None` proves
/// nothing.
pub fn subdivision_negative_certificate(pair: &PartitionPair) -> Option<SubdivisionCore> {
    let gs = block_intersection_graph(pair);
    for link_side in [Side::P1, Side::P0] {
        let core_side = link_side.other();
        let links: Vec<usize> = (0..gs.graph.vertex_count()).filter(|&v| gs.side(v) == link_side).collect();
        if links.is_empty() || !links.iter().all(|&v| gs.graph.degree(v) == 2) {
            continue;
        }
        let labels = pair
            .partition(core_side)
            .blocks()
            .iter()
            .map(|b| b.name().to_string())
            .collect();
        let mut core = SimpleGraph::with_labels(labels);
        for &v in &links {
            let ends: Vec<usize> = gs
                .graph
                .neighbors(v)
                .iter()
                .map(|&w| pair.block_from_global(w).index)
                .collect();
            // A repeated link only duplicates an edge; dropping it keeps an
            // induced subdivision.
            core.add_edge(ends[0], ends[1]).unwrap();
        }
        if !is_planar(&core) {
            return Some(SubdivisionCore {
                side: core_side,
                graph: core,
            });
        }
    }
    None
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Yes,
    No,
    Unknown,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Yes => "yes",
            Verdict::No => "no",
            Verdict::Unknown => "unknown",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NegativeCertificate {
    ExhaustedSearch,
    NonPlanarSubdivisionCore(SubdivisionCore),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrongDecision {
    pub verdict: Verdict,
    pub witness: Option<SupportGraph>,
    pub certificate: Option<NegativeCertificate>,
    /// Planarity tests performed by the search.
    pub budget_spent: u64,
}

/// Settings for [`decide_strong_with`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StrongOptions {
    /// Maximum number of planarity tests.
    pub budget: u64,
    /// Try the subdivision certificate before searching.
    pub use_certificate: bool,
}

impl Default for StrongOptions {
    fn default() -> Self {
        StrongOptions {
            budget: DEFAULT_BUDGET,
            use_certificate: true,
        }
    }
}

/// Exact strong-embeddability decision limited to `budget` planarity tests.
/// A `Yes` witness is re-verified before it is returned.
pub fn decide_strong(pair: &PartitionPair, budget: u64) -> StrongDecision {
    decide_strong_with(
        pair,
        StrongOptions {
            budget,
            use_certificate: true,
        },
    )
}

pub fn decide_strong_with(pair: &PartitionPair, options: StrongOptions) -> StrongDecision {
    let budget = options.budget;
    if options.use_certificate {
        if let Some(core) = subdivision_negative_certificate(pair) {
            return StrongDecision {
                verdict: Verdict::No,
                witness: None,
                certificate: Some(NegativeCertificate::NonPlanarSubdivisionCore(core)),
                budget_spent: 0,
            };
        }
    }
    let mut spent = 0;
    match spanning_tree_search(pair, budget, &mut spent) {
        SearchOutcome::Found(g) => {
            let witness = SupportGraph::new(&g, pair).expect("union of block spanning trees is a support");
            assert!(is_planar(witness.graph()), "search returned a non-planar union");
            StrongDecision {
                verdict: Verdict::Yes,
                witness: Some(witness),
                certificate: None,
                budget_spent: spent,
            }
        }
        SearchOutcome::Exhausted => StrongDecision {
            verdict: Verdict::No,
            witness: None,
            certificate: Some(NegativeCertificate::ExhaustedSearch),
            budget_spent: spent,
        },
        SearchOutcome::OutOfBudget => StrongDecision {
            verdict: Verdict::Unknown,
            witness: None,
            certificate: None,
            budget_spent: spent,
        },
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecideError {
    #[error("{edges} candidate edges exceed the brute-force limit of {limit}")]
    TooLarge { edges: usize, limit: usize },
}

/// Independent oracle: searches all subsets of candidate edges for a planar
/// support.
pub fn decide_strong_bruteforce(pair: &PartitionPair) -> Result<bool, DecideError> {
    decide_strong_bruteforce_with_limit(pair, BRUTEFORCE_EDGE_LIMIT)
}

/// As [`decide_strong_bruteforce`] with a caller-chosen limit (at most 64
/// edges and 64 elements).
pub fn decide_strong_bruteforce_with_limit(pair: &PartitionPair, limit: usize) -> Result<bool, DecideError> {
    let edges = candidate_edges(pair).len();
    let limit = limit.min(64);
    if edges > limit || pair.len() > 64 {
        return Err(DecideError::TooLarge { edges, limit });
    }
    let found = bruteforce::planar_support_subset(pair);
    if let Some(edges) = &found {
        let mut g = element_graph(pair);
        for &(u, v) in edges {
            g.add_edge(u, v).unwrap();
        }
        debug_assert!(is_support(&g, pair).unwrap().is_support() && is_planar(&g));
    }
    Ok(found.is_some())
}

/// Position of a pair in the embeddability hierarchy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HierarchyReport {
    pub weak: bool,
    pub strong: StrongDecision,
    pub full: bool,
}

pub fn classify(pair: &PartitionPair, budget: u64) -> HierarchyReport {
    let report = HierarchyReport {
        weak: decide_weak(pair),
        strong: decide_strong(pair, budget),
        full: decide_full(pair),
    };
    debug_assert!(!(report.full && report.strong.verdict == Verdict::No));
    report
}
