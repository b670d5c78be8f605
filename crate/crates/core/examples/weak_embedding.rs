//! Weak embeddings on automatic or user-chosen points.
//!
//! Any pair has a weak embedding for any point set in general position:
//! blocks of one partition become disjoint thickened trees, and the other
//! partition is drawn the same way independently.
//!
//! Run with `cargo run --example weak_embedding`.

use simembed::embed::{auto_points, validate_embedding, weak_embedding, Level};
use simembed::geometry::{q, Point};
use simembed::pair::gen_k5_subdivision_instance;

fn main() {
    let pair = gen_k5_subdivision_instance();

    let art = weak_embedding(&pair, None).expect("always possible");
    let report = validate_embedding(&art, &pair, Level::Weak).unwrap();
    let auto: Vec<(f64, f64)> = auto_points(pair.len()).iter().take(4).map(Point::to_f64).collect();
    println!("automatic points start {auto:?}");
    print!("{report}");

    // Points on a parabola are in general position.
    let points: Vec<Point> = (0..pair.len() as i64)
        .map(|i| Point { x: q(i - 10), y: q((i - 10) * (i - 10)) })
        .collect();
    let art = weak_embedding(&pair, Some(&points)).unwrap();
    let report = validate_embedding(&art, &pair, Level::Weak).unwrap();
    println!("parabola points: weak ok = {}", report.weak_ok());
    // The point set is kept; the construction decides which element sits where.
    let mut used: Vec<&Point> = art.points.iter().map(|(_, p)| p).collect();
    let mut given: Vec<&Point> = points.iter().collect();
    used.sort();
    given.sort();
    assert_eq!(used, given);
    println!("element {} placed at {:?}", art.points[0].0, art.points[0].1.to_f64());

    // Three collinear points are rejected.
    let mut bad = points.clone();
    for (i, x) in [1000, 2000, 3000].into_iter().enumerate() {
        bad[i] = Point { x: q(x), y: q(-1) };
    }
    println!("collinear input: {}", weak_embedding(&pair, Some(&bad)).unwrap_err());
}
