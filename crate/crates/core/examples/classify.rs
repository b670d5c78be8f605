//! Placing pairs in the weak / strong / full hierarchy.
//!
//! The all-pairs instance on 3 + 3 blocks is strongly but not fully
//! embeddable; the K5 subdivision instance is only weakly embeddable, which
//! the subdivision certificate proves without any search.
//!
//! Run with `cargo run --example classify`.

use std::time::Instant;

use simembed::decide::{classify, NegativeCertificate, DEFAULT_BUDGET};
use simembed::pair::{gen_all_pairs_instance, gen_k5_subdivision_instance, gen_random_pair, PartitionPair};

fn show(name: &str, pair: &PartitionPair) {
    let start = Instant::now();
    let r = classify(pair, DEFAULT_BUDGET);
    print!(
        "{name:<18} |U|={:<3} weak={} strong={}",
        pair.len(),
        r.weak,
        r.strong.verdict
    );
    match (&r.strong.witness, &r.strong.certificate) {
        (Some(w), _) => print!(" (support with {} edges)", w.graph().edge_count()),
        (_, Some(NegativeCertificate::NonPlanarSubdivisionCore(core))) => {
            print!(" (subdivision core {})", core.describe())
        }
        (_, Some(NegativeCertificate::ExhaustedSearch)) => print!(" (search exhausted)"),
        _ => {}
    }
    println!(
        " full={}  [{} planarity tests, {:?}]",
        r.full,
        r.strong.budget_spent,
        start.elapsed()
    );
}

fn main() {
    show("single element", &gen_all_pairs_instance(1, 1));
    show("all pairs 2x2", &gen_all_pairs_instance(2, 2));
    show("all pairs 3x3", &gen_all_pairs_instance(3, 3));
    show("K5 subdivision", &gen_k5_subdivision_instance());
    for seed in 0..4 {
        show(&format!("random seed {seed}"), &gen_random_pair(seed, 12, 4));
    }
}
