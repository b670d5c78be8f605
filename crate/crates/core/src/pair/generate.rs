//! Named instance generators.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{validate_pair, PartitionPair, RawPair};

/// `a * b` elements `e{i}_{j}`; block `A{i}` holds row `i`, block `B{j}`
/// holds column `j`, so every `(A_i, B_j)` shares exactly one element.
///
/// `(3, 3)` is the strongly-but-not-fully embeddable instance whose bipartite
/// map is a subdivided K3,3.
pub fn gen_all_pairs_instance(a: usize, b: usize) -> PartitionPair {
    assert!(a >= 1 && b >= 1, "all-pairs instance needs a, b >= 1");
    let rows = (1..=a).flat_map(|i| {
        (1..=b).map(move |j| (format!("e{i}_{j}"), format!("A{i}"), format!("B{j}")))
    });
    PartitionPair::from_assignments(rows).expect("generator output is valid")
}

/// Blocks `C1..C5` and `D{i}{j}` for `i < j`; `D{i}{j}` holds one element of
/// `C_i` and one of `C_j`, so the block intersection graph is K5 with every
/// edge subdivided once.
pub fn gen_k5_subdivision_instance() -> PartitionPair {
    let mut rows = Vec::with_capacity(20);
    for i in 1..=5 {
        for j in (i + 1)..=5 {
            for c in [i, j] {
                rows.push((format!("x{i}{j}_{c}"), format!("C{c}"), format!("D{i}{j}")));
            }
        }
    }
    PartitionPair::from_assignments(rows).expect("generator output is valid")
}

/// Seeded random pair: each partition chunks its own shuffle of the universe
/// into blocks of random size `1..=max_block`.
pub fn gen_random_pair(seed: u64, n_elements: usize, max_block: usize) -> PartitionPair {
    assert!(n_elements >= 1 && max_block >= 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let universe: Vec<String> = (0..n_elements).map(|k| format!("u{k}")).collect();
    let mut raw = RawPair {
        universe: universe.clone(),
        partitions: Default::default(),
    };
    for (s, prefix) in ["a", "b"].into_iter().enumerate() {
        let mut order = universe.clone();
        order.shuffle(&mut rng);
        let mut rest = &order[..];
        while !rest.is_empty() {
            let size = rng.gen_range(1..=max_block).min(rest.len());
            let (head, tail) = rest.split_at(size);
            let name = format!("{prefix}{}", raw.partitions[s].len());
            raw.partitions[s].push((name, head.to_vec()));
            rest = tail;
        }
    }
    validate_pair(&raw).expect("generator output is valid")
}
