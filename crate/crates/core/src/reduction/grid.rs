//! The base grid: a 2-regular pair of partitions with a unique strong
//! embedding shaped like a grid graph.

use std::collections::BTreeMap;
use std::fmt;

use crate::pair::{BlockId, ElementId, Side};

/// Edge of the grid graph; vertices are `(column, row)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GridEdge {
    /// From `(i, j)` to `(i + 1, j)`.
    Horizontal(usize, usize),
    /// From `(i, j)` to `(i, j + 1)`.
    Vertical(usize, usize),
}

impl GridEdge {
    /// The lower endpoint first.
    pub fn ends(self) -> ((usize, usize), (usize, usize)) {
        match self {
            GridEdge::Horizontal(i, j) => ((i, j), (i + 1, j)),
            GridEdge::Vertical(i, j) => ((i, j), (i, j + 1)),
        }
    }
}

impl fmt::Display for GridEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GridEdge::Horizontal(i, j) => write!(f, "h{i}.{j}"),
            GridEdge::Vertical(i, j) => write!(f, "v{i}.{j}"),
        }
    }
}

/// Face of the grid graph: a unit cell by its top-left vertex, or one of the
/// wide variable cells in the middle row.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Cell {
    Unit(usize, usize),
    Variable(usize),
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cell::Unit(c, r) => write!(f, "{c}.{r}"),
            Cell::Variable(v) => write!(f, "var{}", v + 1),
        }
    }
}

/// The four edge blocks and five elements along one grid edge, ordered from
/// the lower endpoint to the upper one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeChain {
    pub blocks: [BlockId; 4],
    pub elements: [ElementId; 5],
}

impl EdgeChain {
    /// The middle edge block lying in `side`; it shares no element with a
    /// vertex block.
    pub fn middle_block(&self, side: Side) -> &BlockId {
        if self.blocks[1].side == side {
            &self.blocks[1]
        } else {
            &self.blocks[2]
        }
    }
}

pub(crate) fn vertex_side(i: usize, j: usize) -> Side {
    Side::from_index((i + j) % 2)
}

pub(crate) fn vertex_block_name(i: usize, j: usize) -> String {
    format!("V{i}_{j}")
}

/// Grid with `mn + 1` columns and `2m + 2` rows of vertices; between rows `m`
/// and `m + 1` only the columns `0, m, 2m, ..., nm` keep their vertical edge.
pub(crate) fn grid_edges(m: usize, n: usize) -> Vec<GridEdge> {
    let cols = m * n + 1;
    let rows = 2 * m + 2;
    let mut edges = Vec::new();
    for j in 0..rows {
        for i in 0..cols {
            if i + 1 < cols {
                edges.push(GridEdge::Horizontal(i, j));
            }
            if j + 1 < rows && (j != m || i % m == 0) {
                edges.push(GridEdge::Vertical(i, j));
            }
        }
    }
    edges
}

/// Per-element block assignments of the base grid, plus its metadata.
pub(crate) struct GridRows {
    pub rows: Vec<(String, String, String)>,
    pub vertex_blocks: BTreeMap<(usize, usize), BlockId>,
    pub edge_chains: BTreeMap<GridEdge, EdgeChain>,
}

pub(crate) fn grid_rows(m: usize, n: usize) -> GridRows {
    let mut out = GridRows {
        rows: Vec::new(),
        vertex_blocks: BTreeMap::new(),
        edge_chains: BTreeMap::new(),
    };
    for edge in grid_edges(m, n) {
        let (u, v) = edge.ends();
        let (su, sv) = (vertex_side(u.0, u.1), vertex_side(v.0, v.1));
        // Chain B_u, B1, B2, B3, B4, B_v alternating between the sides.
        let names = [
            vertex_block_name(u.0, u.1),
            format!("{edge}/1"),
            format!("{edge}/2"),
            format!("{edge}/3"),
            format!("{edge}/4"),
            vertex_block_name(v.0, v.1),
        ];
        let sides = [su, sv, su, sv, su, sv];
        let elements: Vec<String> = (1..=5).map(|k| format!("{edge}:{k}")).collect();
        for k in 0..5 {
            let (a, b) = (&names[k], &names[k + 1]);
            let (p0, p1) = if sides[k] == Side::P0 { (a, b) } else { (b, a) };
            out.rows.push((elements[k].clone(), p0.clone(), p1.clone()));
        }
        out.vertex_blocks.insert(u, BlockId::new(su, names[0].clone()));
        out.vertex_blocks.insert(v, BlockId::new(sv, names[5].clone()));
        out.edge_chains.insert(
            edge,
            EdgeChain {
                blocks: [1, 2, 3, 4].map(|k| BlockId::new(sides[k], names[k].clone())),
                elements: [0, 1, 2, 3, 4].map(|k| ElementId(elements[k].clone())),
            },
        );
    }
    out
}
