//! Reducing planar monotone 3SAT to strong embeddability.
//!
//! A satisfying assignment turns into a planar support of the reduced pair.
//!
//! Run with `cargo run --example reduction`.

use simembed::graph::is_support;
use simembed::planarity::is_planar;
use simembed::reduction::{base_grid, brute_force_sat, canonical_support, gen_random_mrr, parse_mrr, reduce, write_mrr};

const LAYOUT: &str = "\
mrr 4
clause pos 1 2 3
clause pos 1 3 4
clause neg 2 3 4
";

fn main() {
    let grid = base_grid(2, 3).unwrap();
    let (cols, rows) = grid.grid_size();
    println!("base grid G(2,3): {cols} columns x {rows} rows, {} elements", grid.pair.len());

    let mrr = parse_mrr(LAYOUT).unwrap();
    print!("layout with default orders:\n{}", write_mrr(&mrr));
    let red = reduce(&mrr).unwrap();
    println!(
        "reduced pair: {} elements, {} fixing, {} home",
        red.pair.len(),
        red.fixing_count(),
        red.home_elements.len()
    );
    let assignment = brute_force_sat(&mrr).unwrap().expect("satisfiable");
    let support = canonical_support(&red, &assignment).unwrap();
    println!(
        "assignment {assignment}: support with {} edges, support = {}, planar = {}",
        support.graph().edge_count(),
        is_support(support.graph(), &red.pair).unwrap().is_support(),
        is_planar(support.graph())
    );

    if let Some(random) = gen_random_mrr(7, 5, 4) {
        let red = reduce(&random).unwrap();
        println!("random layout (5 variables, 4 clauses): {} elements", red.pair.len());
    }
}
