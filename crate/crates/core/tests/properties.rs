//! Property tests for the invariants each module promises.

use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use simembed::cli::{render_svg, RenderStyle};
use simembed::decide::{decide_full, decide_strong, Verdict};
use simembed::embed::{tree_on_points, validate_embedding, weak_embedding, Level};
use simembed::geometry::{orient, parse_rational, q_frac, segment_contact, Contact, Point};
use simembed::graph::{block_edge_counts, is_support, reduce_to_tree_based, SimpleGraph};
use simembed::pair::{gen_random_pair, parse_pair_file, validate_pair, write_pair_file};
use simembed::planarity::{draw_planar, is_planar};
use simembed::reduction::{gen_random_mrr, parse_mrr, reduce, write_mrr, Assignment};

fn random_graph(seed: u64, n: usize, p: f64) -> SimpleGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = SimpleGraph::new(n);
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

fn random_tree(seed: u64, n: usize) -> SimpleGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = SimpleGraph::new(n);
    for v in 1..n {
        g.add_edge(rng.gen_range(0..v), v).unwrap();
    }
    g
}

fn general_position(seed: u64, n: usize) -> Vec<Point> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pts: Vec<Point> = Vec::new();
    while pts.len() < n {
        let p = Point::from_ints(rng.gen_range(-60..60), rng.gen_range(-60..60));
        let fresh = !pts.contains(&p);
        let free = (0..pts.len()).all(|i| (i + 1..pts.len()).all(|j| orient(&pts[i], &pts[j], &p).is_ne()));
        if fresh && free {
            pts.push(p);
        }
    }
    pts
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn validation_is_idempotent(seed in any::<u64>(), n in 1usize..30, max_block in 1usize..6) {
        let pair = gen_random_pair(seed, n, max_block);
        prop_assert_eq!(validate_pair(&pair.to_raw()).unwrap(), pair);
    }

    #[test]
    fn pair_files_round_trip(seed in any::<u64>(), n in 1usize..30, max_block in 1usize..6) {
        let pair = gen_random_pair(seed, n, max_block);
        prop_assert_eq!(parse_pair_file(&write_pair_file(&pair)).unwrap(), pair);
    }

    #[test]
    fn planarity_ignores_vertex_order(seed in any::<u64>(), n in 1usize..12, p in 0.1f64..0.6) {
        let g = random_graph(seed, n, p);
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed ^ 1));
        let mut h = SimpleGraph::new(n);
        for (u, v) in g.edges() {
            h.add_edge(perm[u], perm[v]).unwrap();
        }
        prop_assert_eq!(is_planar(&g), is_planar(&h));
    }

    #[test]
    fn planar_graphs_draw_without_crossings(seed in any::<u64>(), n in 1usize..14, p in 0.05f64..0.35) {
        let mut g = random_graph(seed, n, p);
        let edges: Vec<(usize, usize)> = g.edges().collect();
        for (u, v) in edges {
            if !is_planar(&g) {
                g.remove_edge(u, v);
            }
        }
        let drawing = draw_planar(&g).unwrap();
        prop_assert!(drawing.crossing_pairs().is_empty());
        prop_assert!(drawing.embedding.satisfies_euler());
    }

    #[test]
    fn trees_on_points_never_cross(seed in any::<u64>(), n in 1usize..25) {
        let tree = random_tree(seed, n);
        let pts = general_position(seed ^ 7, n);
        let placed = tree_on_points(&tree, &pts).unwrap();
        let mut sorted = placed.clone();
        sorted.sort();
        let mut given = pts.clone();
        given.sort();
        prop_assert_eq!(sorted, given);
        let edges: Vec<(usize, usize)> = tree.edges().collect();
        for (i, &(a, b)) in edges.iter().enumerate() {
            for &(c, d) in &edges[i + 1..] {
                let contact = segment_contact(&placed[a], &placed[b], &placed[c], &placed[d]);
                let shared = a == c || a == d || b == c || b == d;
                let proper = matches!(contact, Contact::Proper { .. });
                prop_assert!(!proper);
                if !shared {
                    prop_assert_eq!(contact, Contact::Disjoint);
                }
            }
        }
    }

    #[test]
    fn hierarchy_is_monotone(seed in any::<u64>(), n in 1usize..16, max_block in 1usize..5) {
        let pair = gen_random_pair(seed, n, max_block);
        let d = decide_strong(&pair, u64::MAX);
        if decide_full(&pair) {
            prop_assert_eq!(d.verdict, Verdict::Yes);
        }
        if let Some(w) = &d.witness {
            prop_assert!(is_support(w.graph(), &pair).unwrap().is_support());
            prop_assert!(is_planar(w.graph()));
            let tree = reduce_to_tree_based(w, &pair);
            prop_assert!(is_support(tree.graph(), &pair).unwrap().is_support());
            prop_assert!(is_planar(tree.graph()));
            let counts = block_edge_counts(tree.graph(), &pair);
            for b in pair.block_refs() {
                prop_assert_eq!(counts.get(&b).copied().unwrap_or(0), pair.block(b).len() - 1);
            }
        }
    }

    #[test]
    fn rationals_parse_exactly(n in -10_000i64..10_000, d in 1i64..10_000) {
        prop_assert_eq!(parse_rational(&format!("{n}/{d}")), Some(q_frac(n, d)));
    }

    #[test]
    fn assignments_round_trip(bits in proptest::collection::vec(any::<bool>(), 1..20)) {
        let a = Assignment { values: bits };
        prop_assert_eq!(Assignment::parse(&a.to_string()), Some(a));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn weak_embeddings_validate(seed in any::<u64>(), n in 1usize..12, max_block in 1usize..5) {
        let pair = gen_random_pair(seed, n, max_block);
        let art = weak_embedding(&pair, None).unwrap();
        let report = validate_embedding(&art, &pair, Level::Weak).unwrap();
        prop_assert!(report.membership_ok && report.same_partition_disjoint);
    }

    #[test]
    fn svg_is_deterministic_and_closed(seed in any::<u64>(), n in 1usize..10) {
        let pair = gen_random_pair(seed, n, 3);
        let art = weak_embedding(&pair, None).unwrap();
        let style = RenderStyle::default();
        let svg = render_svg(&art, &style);
        prop_assert_eq!(&svg, &render_svg(&art, &style));
        let doc = roxmltree::Document::parse(&svg).unwrap();
        let paths: Vec<_> = doc.descendants().filter(|x| x.has_tag_name("path")).collect();
        prop_assert_eq!(paths.len(), pair.block_count());
        prop_assert!(paths.iter().all(|p| p.attribute("d").unwrap().ends_with('Z')));
        prop_assert_eq!(doc.descendants().filter(|x| x.has_tag_name("circle")).count(), n);
    }

    #[test]
    fn mrr_files_round_trip_and_reduce(seed in any::<u64>(), vars in 3usize..7, clauses in 1usize..5) {
        if let Some(mrr) = gen_random_mrr(seed, vars, clauses) {
            let back = parse_mrr(&write_mrr(&mrr)).unwrap();
            prop_assert_eq!(&back, &mrr);
            let red = reduce(&mrr).unwrap();
            prop_assert_eq!(validate_pair(&red.pair.to_raw()).unwrap(), red.pair);
        }
    }
}
