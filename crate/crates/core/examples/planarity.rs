//! Planarity testing, rotation systems, straight-line drawings and
//! Kuratowski witnesses.
//!
//! Run with `cargo run --example planarity`.

use simembed::graph::SimpleGraph;
use simembed::planarity::{
    draw_planar, find_kuratowski_subdivision, is_planar, is_planar_bruteforce, planar_embedding, verify_subdivision,
};

fn main() {
    let grid = SimpleGraph::grid(3, 4);
    let emb = planar_embedding(&grid).expect("grids are planar");
    println!(
        "3x4 grid: {} vertices, {} edges, {} faces, Euler holds: {}",
        grid.vertex_count(),
        grid.edge_count(),
        emb.face_count(),
        emb.satisfies_euler()
    );
    println!("rotation at vertex 5: {:?}", emb.rotation(5));

    let drawing = draw_planar(&grid).unwrap();
    println!("integer drawing: {:?}", drawing.positions);
    assert!(drawing.crossing_pairs().is_empty());

    for (name, g) in [
        ("K5", SimpleGraph::complete(5)),
        ("K3,3", SimpleGraph::complete_bipartite(3, 3)),
        ("subdivided K3,3", SimpleGraph::complete_bipartite(3, 3).subdivide_edges()),
        ("K4", SimpleGraph::complete(4)),
    ] {
        let planar = is_planar(&g);
        if g.vertex_count() <= 8 {
            assert_eq!(Some(planar), is_planar_bruteforce(&g).ok());
        }
        match find_kuratowski_subdivision(&g) {
            Some(sub) => {
                assert!(verify_subdivision(&g, &sub));
                println!("{name}: planar={planar}, contains a {:?} subdivision on {:?}", sub.kind, sub.branch);
            }
            None => println!("{name}: planar={planar}"),
        }
    }
}
