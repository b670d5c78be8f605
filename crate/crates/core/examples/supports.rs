//! Derived graphs of a pair and the support property.
//!
//! A support is a graph on the elements in which every block induces a
//! connected subgraph. A pair is strongly embeddable exactly when it has a
//! planar support.
//!
//! Run with `cargo run --example supports`.

use simembed::decide::{decide_strong, decide_strong_bruteforce, DEFAULT_BUDGET};
use simembed::graph::{
    bipartite_map, block_intersection_graph, candidate_edges, element_graph, is_support, reduce_to_tree_based,
};
use simembed::pair::gen_all_pairs_instance;
use simembed::planarity::is_planar;

fn main() {
    let pair = gen_all_pairs_instance(3, 3);
    let map = bipartite_map(&pair);
    println!(
        "bipartite map: {} vertices, {} edges, planar: {}",
        map.graph.vertex_count(),
        map.graph.edge_count(),
        is_planar(&map.graph)
    );
    let gs = block_intersection_graph(&pair);
    println!("block intersection graph: {} edges", gs.graph.edge_count());
    println!("candidate support edges: {}", candidate_edges(&pair).len());

    // The graph without edges is not a support: every block is disconnected.
    println!("edgeless graph: {:?}", is_support(&element_graph(&pair), &pair).unwrap());

    let decision = decide_strong(&pair, DEFAULT_BUDGET);
    let witness = decision.witness.expect("strongly embeddable");
    let tree = reduce_to_tree_based(&witness, &pair);
    println!(
        "witness: {} edges, tree-based reduction keeps {}, planar: {}",
        witness.graph().edge_count(),
        tree.graph().edge_count(),
        is_planar(tree.graph())
    );
    print!("{}", tree.graph().to_exchange());

    println!("brute-force oracle agrees: {}", decide_strong_bruteforce(&pair).unwrap());
}
