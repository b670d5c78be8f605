//! Full embeddings: pseudo-disk regions exist exactly when the bipartite map
//! is planar.
//!
//! Run with `cargo run --example full_embedding`.

use simembed::decide::decide_full;
use simembed::embed::{full_embedding, validate_embedding, Level, PairRelation};
use simembed::pair::{gen_all_pairs_instance, gen_random_pair};

fn main() {
    let pair = gen_all_pairs_instance(2, 2);
    let art = full_embedding(&pair).unwrap();
    let report = validate_embedding(&art, &pair, Level::Full).unwrap();
    print!("{report}");
    for ((a, b), rel) in &report.relations {
        if *rel != PairRelation::Disjoint {
            println!("  {a} / {b}: {rel:?}, {} crossings", report.crossing_counts[&(a.clone(), b.clone())]);
        }
    }

    println!("3x3 all pairs: {}", full_embedding(&gen_all_pairs_instance(3, 3)).unwrap_err());

    let mut built = 0;
    for seed in 0..30 {
        let pair = gen_random_pair(seed, 10, 3);
        if decide_full(&pair) {
            let art = full_embedding(&pair).unwrap();
            assert!(validate_embedding(&art, &pair, Level::Full).unwrap().full_ok());
            built += 1;
        }
    }
    println!("{built} of 30 random pairs fully embedded and validated");
}
