use std::collections::BTreeSet;

use simembed::graph::is_support;
use simembed::pair::{validate_pair, Side};
use simembed::planarity::is_planar;
use simembed::reduction::{
    base_grid, brute_force_sat, canonical_support, gen_random_mrr, parse_mrr, reduce, write_mrr, Assignment, Cell, Clause,
    GridEdge, MrrInstance, ReductionError, Sign,
};

fn clause(sign: Sign, a: usize, b: usize, c: usize) -> Clause {
    Clause { sign, vars: [a - 1, b - 1, c - 1] }
}

/// Edge count of the base grid, counted independently of the generator.
fn grid_edge_count(m: usize, n: usize) -> usize {
    let cols = m * n + 1;
    let rows = 2 * m + 2;
    let horizontal = (cols - 1) * rows;
    let vertical = cols * (rows - 1) - (cols - (n + 1));
    horizontal + vertical
}

#[test]
fn base_grid_shape() {
    let red = base_grid(2, 3).unwrap();
    assert_eq!(red.grid_size(), (7, 6));
    let middle: BTreeSet<usize> = red
        .edge_chains
        .keys()
        .filter_map(|e| match e {
            GridEdge::Vertical(i, 2) => Some(*i),
            _ => None,
        })
        .collect();
    assert_eq!(middle, BTreeSet::from([0, 2, 4, 6]));
    assert_eq!(red.edge_chains.len(), grid_edge_count(2, 3));
    assert_eq!(red.pair.len(), 5 * grid_edge_count(2, 3));
    for b in red.pair.block_refs() {
        let name = red.pair.block(b).name();
        let size = red.pair.block(b).len();
        if name.starts_with('V') {
            assert!((2..=4).contains(&size), "{name}");
        } else {
            assert_eq!(size, 2, "{name}");
        }
    }
    for (&(i, j), id) in &red.vertex_blocks {
        assert_eq!(id.side, Side::from_index((i + j) % 2));
    }
    assert!(matches!(base_grid(0, 3), Err(ReductionError::BadDimensions { .. })));
    assert!(matches!(base_grid(2, 1), Err(ReductionError::BadDimensions { .. })));
}

#[test]
fn chains_alternate_and_overlap_in_one_element() {
    let red = base_grid(2, 2).unwrap();
    let pair = &red.pair;
    for (edge, chain) in &red.edge_chains {
        let (u, v) = edge.ends();
        let ends = [&red.vertex_blocks[&u], &chain.blocks[0], &chain.blocks[1], &chain.blocks[2], &chain.blocks[3], &red.vertex_blocks[&v]];
        for k in 0..5 {
            let a = pair.find_block(ends[k]).unwrap();
            let b = pair.find_block(ends[k + 1]).unwrap();
            assert_ne!(a.side, b.side);
            let shared = pair.shared_elements(a, b);
            assert_eq!(shared.len(), 1);
            assert_eq!(pair.element(shared[0]), &chain.elements[k]);
        }
    }
}

#[test]
fn single_positive_clause() {
    let mrr = MrrInstance::new(3, vec![clause(Sign::Positive, 1, 2, 3)]).unwrap();
    let red = reduce(&mrr).unwrap();
    assert_eq!(red.grid_size(), (4, 4));
    assert_eq!(red.clause_blocks.len(), 1);
    assert_eq!(red.clause_blocks[0].block.side, Side::P0);
    assert!(red.home_elements.is_empty());
    assert_eq!(validate_pair(&red.pair.to_raw()).unwrap(), red.pair);

    for values in [vec![true, true, true], vec![true, false, false]] {
        let support = canonical_support(&red, &Assignment { values }).unwrap();
        assert!(is_support(support.graph(), &red.pair).unwrap().is_support());
        assert!(is_planar(support.graph()));
    }
    assert!(matches!(
        canonical_support(&red, &Assignment { values: vec![false; 3] }),
        Err(ReductionError::AssignmentDoesNotSatisfy(1))
    ));
}

#[test]
fn opposite_clauses_meet_in_home_cells() {
    let mrr = MrrInstance::new(3, vec![clause(Sign::Positive, 1, 2, 3), clause(Sign::Negative, 1, 2, 3)]).unwrap();
    let red = reduce(&mrr).unwrap();
    let shared: BTreeSet<Cell> = red.clause_blocks[0]
        .cells
        .intersection(&red.clause_blocks[1].cells)
        .copied()
        .filter(|c| matches!(c, Cell::Unit(..)))
        .collect();
    assert!(!shared.is_empty());
    let homes: BTreeSet<Cell> = red.home_elements.keys().map(|k| k.2).collect();
    assert_eq!(homes, shared);
    // Both clause blocks cross every variable cell of their three variables.
    for route in &red.clause_blocks {
        for v in 0..3 {
            assert!(route.cells.contains(&Cell::Variable(v)));
        }
    }
    let a = brute_force_sat(&mrr).unwrap().unwrap();
    let support = canonical_support(&red, &a).unwrap();
    assert!(is_planar(support.graph()));
}

#[test]
fn fixing_elements_sit_in_middle_blocks() {
    let mrr = MrrInstance::new(4, vec![clause(Sign::Positive, 1, 2, 3), clause(Sign::Negative, 2, 3, 4)]).unwrap();
    let red = reduce(&mrr).unwrap();
    let pair = &red.pair;
    for route in &red.clause_blocks {
        for (edge, f) in &route.fixing {
            let u = pair.element_index(f.as_str()).unwrap();
            let other = route.block.side.other();
            let holder = pair.block_id(pair.block_of(u, other));
            let chain = &red.edge_chains[edge];
            assert!(holder == chain.blocks[1] || holder == chain.blocks[2]);
            assert_eq!(pair.block_id(pair.block_of(u, route.block.side)), route.block);
        }
    }
}

#[test]
fn same_sign_routes_are_disjoint_and_sizes_grow() {
    let mut found = 0;
    for seed in 0..60 {
        let Some(mrr) = gen_random_mrr(seed, 3 + seed as usize % 4, 1 + seed as usize % 4) else { continue };
        let red = reduce(&mrr).unwrap();
        for a in &red.clause_blocks {
            for b in &red.clause_blocks {
                if a.clause < b.clause && a.block.side == b.block.side {
                    assert!(a.cells.intersection(&b.cells).all(|c| matches!(c, Cell::Variable(_))));
                }
            }
        }
        let (m, n) = red.grid;
        assert_eq!(red.pair.len(), 5 * grid_edge_count(m, n) + red.fixing_count() + red.home_elements.len());
        found += 1;
    }
    assert!(found >= 40);
    let sizes: Vec<usize> = (1..=4).map(|m| base_grid(m, 3).unwrap().pair.len()).collect();
    assert!(sizes.windows(2).all(|w| w[0] < w[1]));
    let sizes: Vec<usize> = (2..=5).map(|n| base_grid(2, n).unwrap().pair.len()).collect();
    assert!(sizes.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn canonical_supports_of_random_instances() {
    let mut checked = 0;
    for seed in 0..80 {
        let Some(mrr) = gen_random_mrr(seed, 3 + seed as usize % 4, 1 + seed as usize % 4) else { continue };
        let Some(a) = brute_force_sat(&mrr).unwrap() else { continue };
        let red = reduce(&mrr).unwrap();
        let support = canonical_support(&red, &a).unwrap();
        assert!(is_planar(support.graph()), "seed {seed}");
        checked += 1;
    }
    assert!(checked >= 40);
}

#[test]
fn sat_oracle() {
    let single = MrrInstance::new(3, vec![clause(Sign::Positive, 1, 2, 3)]).unwrap();
    assert_eq!(brute_force_sat(&single).unwrap().unwrap().values, vec![false, false, true]);
    let empty = MrrInstance::new(2, vec![]).unwrap();
    assert_eq!(brute_force_sat(&empty).unwrap().unwrap().values, vec![false, false]);
    // x1 forced true by padding x2, x3 false; then the negative clause needs x4 or x5 false.
    let padded = MrrInstance::new(
        5,
        vec![clause(Sign::Positive, 1, 2, 3), clause(Sign::Negative, 1, 4, 5)],
    )
    .unwrap();
    let a = brute_force_sat(&padded).unwrap().unwrap();
    assert_eq!(a.to_string(), "00100");
    assert!(a.satisfies(&padded));
}

#[test]
fn mrr_file_round_trip_and_errors() {
    let text = "mrr 4\nclause pos 1 2 3\nclause neg 2 3 4\n";
    let mrr = parse_mrr(text).unwrap();
    assert_eq!(mrr.clauses.len(), 2);
    assert_eq!(parse_mrr(&write_mrr(&mrr)).unwrap(), mrr);
    assert!(matches!(parse_mrr("clause pos 1 2 3\n"), Err(ReductionError::Syntax { .. })));
    assert!(matches!(parse_mrr("mrr 3\nclause pos 1 1 2\n"), Err(ReductionError::InvalidClause(1, _))));
    assert!(matches!(
        parse_mrr("mrr 3\nclause pos 1 2 3\nlegorder 1 pos\n"),
        Err(ReductionError::InconsistentMrr(_))
    ));
    // Two positive combs on the same three variables cannot nest.
    let twin = parse_mrr("mrr 3\nclause pos 1 2 3\nclause pos 1 2 3\n").unwrap();
    assert!(matches!(reduce(&twin), Err(ReductionError::InconsistentMrr(_))));
}
