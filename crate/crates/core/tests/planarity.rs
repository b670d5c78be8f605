use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use simembed::graph::SimpleGraph;
use simembed::planarity::{
    draw_planar, find_kuratowski_subdivision, is_planar, is_planar_bruteforce, planar_embedding, verify_subdivision,
};

fn graph_from_mask(n: usize, mask: u64) -> SimpleGraph {
    let mut g = SimpleGraph::new(n);
    let mut bit = 0;
    for u in 0..n {
        for v in (u + 1)..n {
            if mask >> bit & 1 == 1 {
                g.add_edge(u, v).unwrap();
            }
            bit += 1;
        }
    }
    g
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> SimpleGraph {
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

/// Grows a planar graph by offering random edges in a shuffled order.
fn random_planar(rng: &mut ChaCha8Rng, n: usize, attempts: usize) -> SimpleGraph {
    let mut g = SimpleGraph::new(n);
    for _ in 0..attempts {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u == v || g.has_edge(u, v) {
            continue;
        }
        g.add_edge(u, v).unwrap();
        if !is_planar(&g) {
            g.remove_edge(u, v);
        }
    }
    g
}

#[test]
fn agrees_with_oracle_on_all_graphs_up_to_six_vertices() {
    for n in 0..=6usize {
        let pairs = n * n.saturating_sub(1) / 2;
        for mask in 0..(1u64 << pairs) {
            let g = graph_from_mask(n, mask);
            assert_eq!(is_planar(&g), is_planar_bruteforce(&g).unwrap(), "n={n} mask={mask:#x}");
        }
    }
}

#[test]
fn agrees_with_oracle_on_random_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for i in 0..3000 {
        let n = 7 + i % 4;
        let p = rng.gen_range(0.2..0.7);
        let g = random_graph(&mut rng, n, p);
        let lr = is_planar(&g);
        assert_eq!(lr, is_planar_bruteforce(&g).unwrap(), "{}", g.to_exchange());
        if !lr {
            let sub = find_kuratowski_subdivision(&g).unwrap();
            assert!(verify_subdivision(&g, &sub));
        }
    }
}

#[test]
fn random_planar_graphs_embed_and_draw_cleanly() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for i in 0..300 {
        let n = 1 + i % 40;
        let g = random_planar(&mut rng, n, 4 * n);
        let e = planar_embedding(&g).unwrap();
        assert!(e.satisfies_euler());
        let total: usize = e.face_walks().iter().map(|f| f.len()).sum();
        assert_eq!(total, 2 * g.edge_count());
        let d = draw_planar(&g).unwrap();
        assert!(d.crossing_pairs().is_empty(), "{}", g.to_exchange());
        let (w, h) = d.extent();
        assert!(w <= 2 * n as i64 && h <= 2 * n as i64);
        let mut pts = d.positions.clone();
        pts.sort();
        pts.dedup();
        assert_eq!(pts.len(), n);
    }
}

#[test]
fn removing_an_edge_keeps_planarity() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..200 {
        let g = random_planar(&mut rng, 15, 60);
        for (u, v) in g.edges().collect::<Vec<_>>() {
            let mut h = g.clone();
            h.remove_edge(u, v);
            assert!(is_planar(&h));
        }
    }
}

fn cyclic_eq(a: &[usize], b: &[usize]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    if a.is_empty() {
        return true;
    }
    let Some(s) = b.iter().position(|&x| x == a[0]) else {
        return false;
    };
    (0..a.len()).all(|i| a[i] == b[(s + i) % b.len()])
}

#[test]
fn drawing_follows_rotation_up_to_reflection() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for _ in 0..100 {
        let g = random_planar(&mut rng, 20, 70);
        let d = draw_planar(&g).unwrap();
        let mut mirrored = None;
        for v in 0..g.vertex_count() {
            let (x0, y0) = d.positions[v];
            let mut by_angle: Vec<usize> = g.neighbors(v).to_vec();
            by_angle.sort_by(|&a, &b| {
                let ta = ((d.positions[a].1 - y0) as f64).atan2((d.positions[a].0 - x0) as f64);
                let tb = ((d.positions[b].1 - y0) as f64).atan2((d.positions[b].0 - x0) as f64);
                ta.partial_cmp(&tb).unwrap()
            });
            let rot = d.embedding.rotation(v);
            if rot.len() < 3 {
                continue;
            }
            let ccw = cyclic_eq(rot, &by_angle);
            let mut rev = by_angle.clone();
            rev.reverse();
            let cw = cyclic_eq(rot, &rev);
            assert!(ccw || cw);
            let this = if ccw { "ccw" } else { "cw" };
            // Components may be reflected independently.
            let key = (g.components().0[v], this);
            match mirrored {
                None => mirrored = Some(key),
                Some((c, s)) if c == key.0 => assert_eq!(s, key.1),
                _ => {}
            }
        }
    }
}
