//! Hard instances for strong embeddability from planar monotone 3SAT.
//!
//! [`base_grid`] builds a pair of partitions whose only strong embedding
//! follows a grid graph with `mn + 1` columns and `2m + 2` rows, where the
//! middle row of faces is merged into `n` wide variable cells. [`reduce`] adds
//! one block per clause, pinned to an E-shaped run of cells above and a
//! mirrored run below the variable cells, both joined through the variable
//! cells of the clause. Pinning uses one fixing element per crossed grid edge,
//! shared with the middle edge block of the other partition; positive and
//! negative clause blocks share one home element per common cell outside the
//! variable cells.
//!
//! [`canonical_support`] turns a satisfying assignment into a planar support,
//! which certifies strong embeddability of the reduced pair. The converse
//! direction is not checked at this scale.

mod grid;
mod mrr;

use std::collections::{BTreeMap, BTreeSet, HashMap};

use thiserror::Error;

use crate::graph::{GraphError, SimpleGraph, SupportGraph};
use crate::pair::{BlockId, ElementId, PartitionPair, Side, ValidationError};

pub use grid::{Cell, EdgeChain, GridEdge};
pub use mrr::{brute_force_sat, gen_random_mrr, parse_mrr, write_mrr, Assignment, Clause, MrrInstance, Sign, SAT_VAR_LIMIT};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error("base grid needs m >= 1 and n >= 2, got m = {m}, n = {n}")]
    BadDimensions { m: usize, n: usize },
    #[error("clause {0}: {1}")]
    InvalidClause(usize, String),
    #[error("inconsistent layout: {0}")]
    InconsistentMrr(String),
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("assignment does not satisfy clause {0}")]
    AssignmentDoesNotSatisfy(usize),
    #[error("assignment has {found} values for {expected} variables")]
    AssignmentLength { expected: usize, found: usize },
    #[error("{vars} variables exceed the brute-force limit of {limit}")]
    TooLarge { vars: usize, limit: usize },
    #[error(transparent)]
    Pair(#[from] ValidationError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Cells of one clause block and the grid edges it crosses between them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClauseRoute {
    pub clause: usize,
    pub block: BlockId,
    pub cells: BTreeSet<Cell>,
    /// Adjacent route cells and the grid edge between them.
    pub links: Vec<(Cell, Cell, GridEdge)>,
    /// Fixing element on each crossed grid edge.
    pub fixing: BTreeMap<GridEdge, ElementId>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionOutput {
    pub pair: PartitionPair,
    /// `(m, n)`: clauses and variables.
    pub grid: (usize, usize),
    pub vertex_blocks: BTreeMap<(usize, usize), BlockId>,
    pub edge_chains: BTreeMap<GridEdge, EdgeChain>,
    pub clause_blocks: Vec<ClauseRoute>,
    /// Keyed by (positive clause, negative clause, cell).
    pub home_elements: BTreeMap<(usize, usize, Cell), ElementId>,
    pub variable_cells: Vec<Cell>,
    pub clauses: Vec<Clause>,
}

impl ReductionOutput {
    /// Columns and rows of grid vertices.
    pub fn grid_size(&self) -> (usize, usize) {
        let (m, n) = self.grid;
        (m * n + 1, 2 * m + 2)
    }

    pub fn fixing_count(&self) -> usize {
        self.clause_blocks.iter().map(|r| r.fixing.len()).sum()
    }
}

fn check_dimensions(m: usize, n: usize) -> Result<(), ReductionError> {
    if m < 1 || n < 2 {
        return Err(ReductionError::BadDimensions { m, n });
    }
    Ok(())
}

/// The clause-free pair for grid `G_{m,n}`.
pub fn base_grid(m: usize, n: usize) -> Result<ReductionOutput, ReductionError> {
    check_dimensions(m, n)?;
    let rows = grid::grid_rows(m, n);
    Ok(ReductionOutput {
        pair: PartitionPair::from_assignments(rows.rows)?,
        grid: (m, n),
        vertex_blocks: rows.vertex_blocks,
        edge_chains: rows.edge_chains,
        clause_blocks: Vec::new(),
        home_elements: BTreeMap::new(),
        variable_cells: (0..n).map(Cell::Variable).collect(),
        clauses: Vec::new(),
    })
}

/// Cells and links of one clause, before elements are named.
pub(crate) struct Plan {
    cells: BTreeSet<Cell>,
    links: Vec<(Cell, Cell, GridEdge)>,
}

/// One horizontal run of cells at `row` plus vertical legs from it toward the
/// variable row, ending in links into the variable cells.
fn comb(plan: &mut Plan, row: usize, legs: &[(usize, usize)], m: usize) {
    let lo = legs.iter().map(|l| l.1).min().unwrap();
    let hi = legs.iter().map(|l| l.1).max().unwrap();
    for c in lo..=hi {
        plan.cells.insert(Cell::Unit(c, row));
        if c > lo {
            plan.links.push((Cell::Unit(c - 1, row), Cell::Unit(c, row), GridEdge::Vertical(c, row)));
        }
    }
    for &(var, col) in legs {
        if row < m {
            for r in (row + 1)..m {
                plan.cells.insert(Cell::Unit(col, r));
                plan.links.push((Cell::Unit(col, r - 1), Cell::Unit(col, r), GridEdge::Horizontal(col, r)));
            }
            plan.links.push((Cell::Unit(col, m - 1), Cell::Variable(var), GridEdge::Horizontal(col, m)));
        } else {
            for r in (m + 1)..row {
                plan.cells.insert(Cell::Unit(col, r));
            }
            plan.links.push((Cell::Variable(var), Cell::Unit(col, m + 1), GridEdge::Horizontal(col, m + 1)));
            for r in (m + 2)..=row {
                plan.links.push((Cell::Unit(col, r - 1), Cell::Unit(col, r), GridEdge::Horizontal(col, r)));
            }
        }
        plan.cells.insert(Cell::Variable(var));
    }
}

/// Routes every clause and checks that routes of one sign share no cell
/// outside the variable cells.
pub(crate) fn plan_routes(mrr: &MrrInstance) -> Result<Vec<Plan>, ReductionError> {
    mrr.validate()?;
    let m = mrr.clauses.len();
    check_dimensions(m, mrr.n_vars)?;
    let l = mrr.clauses_of(Sign::Positive).count();
    let l_neg = m - l;
    let mut plans = Vec::with_capacity(m);
    for (c, clause) in mrr.clauses.iter().enumerate() {
        let i = mrr.nesting_rank(c);
        let mut tops = Vec::new();
        let mut bottoms = Vec::new();
        for &v in &clause.vars {
            let k = mrr.leg_rank(v, c);
            let right = (v + 1) * m;
            let (top, bottom) = match clause.sign {
                Sign::Positive => (right - k, right - k - mrr.occurrences(v, Sign::Negative)),
                Sign::Negative => (right - k - mrr.occurrences(v, Sign::Positive), right - k),
            };
            tops.push((v, top));
            bottoms.push((v, bottom));
        }
        // Upper and lower bar rows; inner combs run next to the variable row.
        let (upper, lower) = match clause.sign {
            Sign::Positive => (m - i, 2 * m - l + i),
            Sign::Negative => (l_neg - i, m + i),
        };
        let mut plan = Plan { cells: BTreeSet::new(), links: Vec::new() };
        comb(&mut plan, upper, &tops, m);
        comb(&mut plan, lower, &bottoms, m);
        plans.push(plan);
    }
    for a in 0..m {
        for b in (a + 1)..m {
            if mrr.clauses[a].sign != mrr.clauses[b].sign {
                continue;
            }
            let clash = plans[a].cells.intersection(&plans[b].cells).find(|c| matches!(c, Cell::Unit(..)));
            if let Some(cell) = clash {
                return Err(ReductionError::InconsistentMrr(format!(
                    "clauses {} and {} both run through cell {cell}",
                    a + 1,
                    b + 1
                )));
            }
        }
    }
    Ok(plans)
}

fn clause_name(c: usize) -> String {
    format!("C{}", c + 1)
}

fn clause_side(sign: Sign) -> Side {
    match sign {
        Sign::Positive => Side::P0,
        Sign::Negative => Side::P1,
    }
}

/// Builds the reduced pair for `mrr` on grid `G_{m,n}` with `m` clauses and
/// `n` variables.
pub fn reduce(mrr: &MrrInstance) -> Result<ReductionOutput, ReductionError> {
    let plans = plan_routes(mrr)?;
    let (m, n) = (mrr.clauses.len(), mrr.n_vars);
    let mut rows = grid::grid_rows(m, n);
    let mut routes = Vec::with_capacity(m);
    for (c, plan) in plans.into_iter().enumerate() {
        let side = clause_side(mrr.clauses[c].sign);
        let block = BlockId::new(side, clause_name(c));
        let mut fixing = BTreeMap::new();
        for &(_, _, edge) in &plan.links {
            let element = format!("f:{}:{edge}", block.name);
            let middle = rows.edge_chains[&edge].middle_block(side.other()).name.clone();
            let (p0, p1) = match side {
                Side::P0 => (block.name.clone(), middle),
                Side::P1 => (middle, block.name.clone()),
            };
            rows.rows.push((element.clone(), p0, p1));
            fixing.insert(edge, ElementId(element));
        }
        routes.push(ClauseRoute {
            clause: c,
            block,
            cells: plan.cells,
            links: plan.links,
            fixing,
        });
    }
    let mut home_elements = BTreeMap::new();
    for p in mrr.clauses_of(Sign::Positive) {
        for q in mrr.clauses_of(Sign::Negative) {
            for cell in routes[p].cells.intersection(&routes[q].cells) {
                if let Cell::Unit(..) = cell {
                    let element = format!("h:{}:{}:{cell}", clause_name(p), clause_name(q));
                    rows.rows.push((element.clone(), clause_name(p), clause_name(q)));
                    home_elements.insert((p, q, *cell), ElementId(element));
                }
            }
        }
    }
    Ok(ReductionOutput {
        pair: PartitionPair::from_assignments(rows.rows)?,
        grid: (m, n),
        vertex_blocks: rows.vertex_blocks,
        edge_chains: rows.edge_chains,
        clause_blocks: routes,
        home_elements,
        variable_cells: (0..n).map(Cell::Variable).collect(),
        clauses: mrr.clauses.clone(),
    })
}

/// Side slot of a grid edge around a unit cell, in cyclic order.
fn side_slot(cell: Cell, edge: GridEdge) -> usize {
    let Cell::Unit(c, r) = cell else { return 0 };
    match edge {
        GridEdge::Horizontal(i, j) if (i, j) == (c, r) => 0,
        GridEdge::Vertical(i, j) if (i, j) == (c + 1, r) => 1,
        GridEdge::Horizontal(i, j) if (i, j) == (c, r + 1) => 2,
        _ => 3,
    }
}

/// Planar support of the reduced pair following a satisfying assignment.
///
/// Each clause keeps the variable cell of its first true literal and is opened
/// in the other two. Grid edges carry their chain as a path, with fixing
/// elements spliced into their middle block; vertex blocks are paths around
/// their vertex; inside a cell a clause block connects its crossings in
/// cyclic order, or through the home element when the cell has one.
pub fn canonical_support(red: &ReductionOutput, assignment: &Assignment) -> Result<SupportGraph, ReductionError> {
    let n = red.grid.1;
    if assignment.values.len() != n {
        return Err(ReductionError::AssignmentLength { expected: n, found: assignment.values.len() });
    }
    if let Some(c) = red.clauses.iter().position(|c| !c.satisfied_by(&assignment.values)) {
        return Err(ReductionError::AssignmentDoesNotSatisfy(c + 1));
    }
    let pair = &red.pair;
    let index: HashMap<&str, usize> = pair.elements().iter().enumerate().map(|(i, e)| (e.as_str(), i)).collect();
    let mut g = SimpleGraph::with_labels(pair.elements().iter().map(|e| e.0.clone()).collect());
    let mut link = |a: &ElementId, b: &ElementId| -> Result<(), ReductionError> {
        g.add_edge(index[a.as_str()], index[b.as_str()])?;
        Ok(())
    };

    // Fixing elements by the middle block that holds them.
    let mut spliced: HashMap<(GridEdge, Side), &ElementId> = HashMap::new();
    for route in &red.clause_blocks {
        for (edge, f) in &route.fixing {
            spliced.insert((*edge, route.block.side.other()), f);
        }
    }
    for (edge, chain) in &red.edge_chains {
        let e = &chain.elements;
        let mut path = vec![&e[0], &e[1]];
        if let Some(f) = spliced.get(&(*edge, chain.blocks[1].side)) {
            path.push(f);
        }
        path.push(&e[2]);
        if let Some(f) = spliced.get(&(*edge, chain.blocks[2].side)) {
            path.push(f);
        }
        path.extend([&e[3], &e[4]]);
        for w in path.windows(2) {
            link(w[0], w[1])?;
        }
    }

    for &(i, j) in red.vertex_blocks.keys() {
        // Incident edges in rotation order, each with the element next to (i, j).
        let mut around = vec![(GridEdge::Vertical(i, j), 0), (GridEdge::Horizontal(i, j), 0)];
        if j > 0 {
            around.push((GridEdge::Vertical(i, j - 1), 4));
        }
        if i > 0 {
            around.push((GridEdge::Horizontal(i - 1, j), 4));
        }
        let present: Vec<&ElementId> = around
            .iter()
            .filter_map(|(edge, k)| red.edge_chains.get(edge).map(|ch| &ch.elements[*k]))
            .collect();
        for w in present.windows(2) {
            link(w[0], w[1])?;
        }
    }

    let mut homes: HashMap<Cell, &ElementId> = HashMap::new();
    for ((_, _, cell), h) in &red.home_elements {
        homes.insert(*cell, h);
    }
    for route in &red.clause_blocks {
        let clause = &red.clauses[route.clause];
        let want = clause.sign == Sign::Positive;
        let kept = clause.vars.iter().copied().find(|&v| assignment.values[v] == want);
        let mut crossings: BTreeMap<Cell, Vec<(usize, &ElementId)>> = BTreeMap::new();
        for &(a, b, edge) in &route.links {
            let f = &route.fixing[&edge];
            for cell in [a, b] {
                crossings.entry(cell).or_default().push((side_slot(cell, edge), f));
            }
        }
        for (cell, mut list) in crossings {
            match cell {
                Cell::Variable(v) => {
                    if Some(v) == kept {
                        link(list[0].1, list[1].1)?;
                    }
                }
                Cell::Unit(..) => {
                    if let Some(h) = homes.get(&cell) {
                        for (_, f) in &list {
                            link(h, f)?;
                        }
                    } else {
                        list.sort();
                        for w in list.windows(2) {
                            link(w[0].1, w[1].1)?;
                        }
                    }
                }
            }
        }
    }
    Ok(SupportGraph::new(&g, pair)?)
}
