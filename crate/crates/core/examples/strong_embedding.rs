//! From a planar support to a strong embedding drawn as SVG.
//!
//! Run with `cargo run --example strong_embedding -- out.svg`; without an
//! argument the SVG goes to standard output.

use simembed::cli::{render_svg, RenderStyle};
use simembed::decide::{decide_strong, DEFAULT_BUDGET};
use simembed::embed::{strong_embedding, validate_embedding, Level};
use simembed::pair::gen_all_pairs_instance;

fn main() {
    let pair = gen_all_pairs_instance(3, 3);
    let witness = decide_strong(&pair, DEFAULT_BUDGET).witness.expect("strongly embeddable");
    let art = strong_embedding(&pair, &witness).unwrap();
    let report = validate_embedding(&art, &pair, Level::Strong).unwrap();
    eprint!("{report}");
    for ((a, b), n) in &report.crossing_counts {
        if *n > 0 {
            eprintln!("  {a} x {b}: {n} boundary crossings");
        }
    }
    let svg = render_svg(&art, &RenderStyle::default());
    match std::env::args().nth(1) {
        Some(path) => std::fs::write(path, svg).unwrap(),
        None => print!("{svg}"),
    }
}
