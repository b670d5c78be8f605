//! Universes, partitions and partition pairs.
//!
//! A [`PartitionPair`] is the central value of the crate: a finite universe of
//! elements together with two partitions of it. Every element lies in exactly
//! one block of each partition, so the pair can equally be read as a
//! 2-regular hypergraph whose hyperedges are the blocks.
//!
//! Pairs are only ever built through [`validate_pair`], which canonicalizes
//! the representation (elements in input order, blocks in order of first
//! mention, members sorted by element position). Two pairs describing the
//! same data therefore compare equal.

mod generate;
mod io;

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

pub use generate::{gen_all_pairs_instance, gen_k5_subdivision_instance, gen_random_pair};
pub use io::{parse_pair_file, write_pair_file, PairFileError};

/// One of the two partitions of a pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    P0,
    P1,
}

impl Side {
    pub const BOTH: [Side; 2] = [Side::P0, Side::P1];

    pub fn index(self) -> usize {
        match self {
            Side::P0 => 0,
            Side::P1 => 1,
        }
    }

    pub fn from_index(i: usize) -> Side {
        if i.is_multiple_of(2) {
            Side::P0
        } else {
            Side::P1
        }
    }

    pub fn other(self) -> Side {
        match self {
            Side::P0 => Side::P1,
            Side::P1 => Side::P0,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.index())
    }
}

/// Case-sensitive element token.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElementId(pub String);

impl ElementId {
    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for ElementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// A block name qualified by the partition it belongs to.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BlockId {
    pub side: Side,
    pub name: String,
}

impl BlockId {
    pub fn new(side: Side, name: impl Into<String>) -> Self {
        BlockId {
            side,
            name: name.into(),
        }
    }
}

impl fmt::Display for BlockId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@P{}", self.name, self.side)
    }
}

/// Position of a block inside a validated pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BlockRef {
    pub side: Side,
    pub index: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    name: String,
    members: Vec<usize>,
}

impl Block {
    pub fn name(&self) -> &str {
        &self.name
    }

    /// Element positions, ascending.
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    blocks: Vec<Block>,
}

impl Partition {
    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }
}

/// A verified pair of partitions of one universe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionPair {
    elements: Vec<ElementId>,
    index: HashMap<String, usize>,
    parts: [Partition; 2],
    membership: Vec<[usize; 2]>,
}

impl PartitionPair {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[ElementId] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &ElementId {
        &self.elements[i]
    }

    pub fn element_index(&self, id: &str) -> Option<usize> {
        self.index.get(id).copied()
    }

    pub fn partition(&self, side: Side) -> &Partition {
        &self.parts[side.index()]
    }

    pub fn block(&self, b: BlockRef) -> &Block {
        &self.parts[b.side.index()].blocks[b.index]
    }

    pub fn block_id(&self, b: BlockRef) -> BlockId {
        BlockId::new(b.side, self.block(b).name.clone())
    }

    /// Block of `side` containing element `u`.
    pub fn block_of(&self, u: usize, side: Side) -> BlockRef {
        BlockRef {
            side,
            index: self.membership[u][side.index()],
        }
    }

    pub fn find_block(&self, id: &BlockId) -> Option<BlockRef> {
        self.parts[id.side.index()]
            .blocks
            .iter()
            .position(|b| b.name == id.name)
            .map(|index| BlockRef {
                side: id.side,
                index,
            })
    }

    pub fn block_count(&self) -> usize {
        self.parts[0].len() + self.parts[1].len()
    }

    /// All blocks, partition 0 first, each partition in block order.
    pub fn block_refs(&self) -> impl Iterator<Item = BlockRef> + '_ {
        Side::BOTH.into_iter().flat_map(move |side| {
            (0..self.parts[side.index()].len()).map(move |index| BlockRef { side, index })
        })
    }

    /// Dense index over all blocks: partition 0 blocks first.
    pub fn global_block_index(&self, b: BlockRef) -> usize {
        match b.side {
            Side::P0 => b.index,
            Side::P1 => self.parts[0].len() + b.index,
        }
    }

    pub fn block_from_global(&self, g: usize) -> BlockRef {
        let n0 = self.parts[0].len();
        if g < n0 {
            BlockRef {
                side: Side::P0,
                index: g,
            }
        } else {
            BlockRef {
                side: Side::P1,
                index: g - n0,
            }
        }
    }

    /// Elements shared by a block of partition 0 and a block of partition 1.
    pub fn shared_elements(&self, a: BlockRef, b: BlockRef) -> Vec<usize> {
        if a.side == b.side {
            return Vec::new();
        }
        self.block(a)
            .members
            .iter()
            .copied()
            .filter(|&u| self.membership[u][b.side.index()] == b.index)
            .collect()
    }

    /// The raw description this pair was validated from, in canonical order.
    pub fn to_raw(&self) -> RawPair {
        let partitions = [0, 1].map(|s| {
            self.parts[s]
                .blocks
                .iter()
                .map(|b| {
                    (
                        b.name.clone(),
                        b.members
                            .iter()
                            .map(|&u| self.elements[u].0.clone())
                            .collect(),
                    )
                })
                .collect()
        });
        RawPair {
            universe: self.elements.iter().map(|e| e.0.clone()).collect(),
            partitions,
        }
    }

    /// Builds a pair from per-element block assignments.
    pub fn from_assignments<I, E, B0, B1>(rows: I) -> Result<PartitionPair, ValidationError>
    where
        I: IntoIterator<Item = (E, B0, B1)>,
        E: Into<String>,
        B0: Into<String>,
        B1: Into<String>,
    {
        let mut raw = RawPair::default();
        let mut block_pos: [HashMap<String, usize>; 2] = Default::default();
        for (e, b0, b1) in rows {
            let e = e.into();
            raw.universe.push(e.clone());
            for (s, name) in [b0.into(), b1.into()].into_iter().enumerate() {
                let slot = *block_pos[s].entry(name.clone()).or_insert_with(|| {
                    raw.partitions[s].push((name, Vec::new()));
                    raw.partitions[s].len() - 1
                });
                raw.partitions[s][slot].1.push(e.clone());
            }
        }
        validate_pair(&raw)
    }
}

/// Unverified description of a pair: a universe plus two lists of named blocks.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RawPair {
    pub universe: Vec<String>,
    pub partitions: [Vec<(String, Vec<String>)>; 2],
}

/// One violated invariant found by [`validate_pair`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Issue {
    #[error("invalid token {0:?} (must be non-empty without whitespace)")]
    InvalidToken(String),
    #[error("element {0} listed twice in the universe")]
    DuplicateElement(String),
    #[error("block {0} defined twice")]
    DuplicateBlock(BlockId),
    #[error("block {0} is empty")]
    EmptyBlock(BlockId),
    #[error("block {block} mentions unknown element {element}")]
    UnknownElement { element: String, block: BlockId },
    #[error("element {element} lies in blocks {first} and {second} of partition {side}")]
    DoubleAssignment {
        element: String,
        side: Side,
        first: String,
        second: String,
    },
    #[error("MissingAssignment: element {element} has no block in partition {side}")]
    MissingAssignment { element: String, side: Side },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationError {
    pub issues: Vec<Issue>,
}

impl fmt::Display for ValidationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid partition pair ({} issue", self.issues.len())?;
        if self.issues.len() != 1 {
            f.write_str("s")?;
        }
        f.write_str(")")?;
        for issue in &self.issues {
            write!(f, "\n  {issue}")?;
        }
        Ok(())
    }
}

impl std::error::Error for ValidationError {}

fn valid_token(s: &str) -> bool {
    !s.is_empty() && !s.chars().any(char::is_whitespace)
}

/// Checks every invariant of a candidate pair and returns the canonical pair,
/// or the complete list of violations.
pub fn validate_pair(raw: &RawPair) -> Result<PartitionPair, ValidationError> {
    let mut issues = Vec::new();
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut elements = Vec::new();
    for e in &raw.universe {
        if !valid_token(e) {
            issues.push(Issue::InvalidToken(e.clone()));
            continue;
        }
        if index.contains_key(e) {
            issues.push(Issue::DuplicateElement(e.clone()));
            continue;
        }
        index.insert(e.clone(), elements.len());
        elements.push(ElementId(e.clone()));
    }

    let n = elements.len();
    // per side: element -> raw block slot
    let mut assigned: [Vec<Option<usize>>; 2] = [vec![None; n], vec![None; n]];
    for (s, blocks) in raw.partitions.iter().enumerate() {
        let side = Side::from_index(s);
        let mut seen_names: HashMap<&str, ()> = HashMap::new();
        for (slot, (name, members)) in blocks.iter().enumerate() {
            let bid = BlockId::new(side, name.clone());
            if !valid_token(name) {
                issues.push(Issue::InvalidToken(name.clone()));
            }
            if seen_names.insert(name.as_str(), ()).is_some() {
                issues.push(Issue::DuplicateBlock(bid.clone()));
            }
            if members.is_empty() {
                issues.push(Issue::EmptyBlock(bid.clone()));
            }
            for m in members {
                match index.get(m) {
                    None => issues.push(Issue::UnknownElement {
                        element: m.clone(),
                        block: bid.clone(),
                    }),
                    Some(&u) => match assigned[s][u] {
                        None => assigned[s][u] = Some(slot),
                        Some(prev) if prev == slot => {}
                        Some(prev) => issues.push(Issue::DoubleAssignment {
                            element: m.clone(),
                            side,
                            first: blocks[prev].0.clone(),
                            second: name.clone(),
                        }),
                    },
                }
            }
        }
    }
    for u in 0..n {
        for (s, a) in assigned.iter().enumerate() {
            if a[u].is_none() {
                issues.push(Issue::MissingAssignment {
                    element: elements[u].0.clone(),
                    side: Side::from_index(s),
                });
            }
        }
    }
    if !issues.is_empty() {
        return Err(ValidationError { issues });
    }

    // Canonical order: blocks by first mention in element order.
    let mut parts: [Partition; 2] = [
        Partition { blocks: Vec::new() },
        Partition { blocks: Vec::new() },
    ];
    let mut membership = vec![[0usize; 2]; n];
    for s in 0..2 {
        let mut remap: HashMap<usize, usize> = HashMap::new();
        for u in 0..n {
            let slot = assigned[s][u].expect("checked above");
            let next = parts[s].blocks.len();
            let b = *remap.entry(slot).or_insert_with(|| {
                parts[s].blocks.push(Block {
                    name: raw.partitions[s][slot].0.clone(),
                    members: Vec::new(),
                });
                next
            });
            parts[s].blocks[b].members.push(u);
            membership[u][s] = b;
        }
    }

    Ok(PartitionPair {
        elements,
        index,
        parts,
        membership,
    })
}
