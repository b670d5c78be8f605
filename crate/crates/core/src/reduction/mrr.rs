//! Monotone rectilinear representations of planar monotone 3SAT formulas.
//!
//! An instance lists the clauses together with the layout data the reduction
//! needs: for each sign the nesting order of the combs (inner combs first)
//! and for each variable and sign the right-to-left order of the legs that
//! attach to it. Orders left out of a file are filled in from the clause
//! spans, which is the unique non-crossing choice for a realizable layout.

use std::fmt;
use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::ReductionError;

/// Largest variable count [`brute_force_sat`] accepts.
pub const SAT_VAR_LIMIT: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn index(self) -> usize {
        match self {
            Sign::Positive => 0,
            Sign::Negative => 1,
        }
    }

    fn keyword(self) -> &'static str {
        match self {
            Sign::Positive => "pos",
            Sign::Negative => "neg",
        }
    }

    fn parse(token: &str) -> Option<Sign> {
        match token {
            "pos" => Some(Sign::Positive),
            "neg" => Some(Sign::Negative),
            _ => None,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.keyword())
    }
}

/// A clause on three distinct variables (0-based), all of one sign.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Clause {
    pub sign: Sign,
    pub vars: [usize; 3],
}

impl Clause {
    fn span(&self) -> (usize, usize) {
        let lo = *self.vars.iter().min().unwrap();
        let hi = *self.vars.iter().max().unwrap();
        (lo, hi)
    }

    fn width(&self) -> usize {
        let (lo, hi) = self.span();
        hi - lo
    }

    /// Satisfied by `values` (indexed by variable).
    pub fn satisfied_by(&self, values: &[bool]) -> bool {
        let want = self.sign == Sign::Positive;
        self.vars.iter().any(|&v| values[v] == want)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MrrInstance {
    pub n_vars: usize,
    pub clauses: Vec<Clause>,
    /// Per sign (positive first): clause indices, inner combs first.
    pub nesting: [Vec<usize>; 2],
    /// Per variable, per sign: clause indices of the attached legs from right
    /// to left.
    pub leg_order: Vec<[Vec<usize>; 2]>,
}

impl MrrInstance {
    /// Instance with default nesting and leg orders.
    pub fn new(n_vars: usize, clauses: Vec<Clause>) -> Result<MrrInstance, ReductionError> {
        let mut inst = MrrInstance {
            n_vars,
            clauses,
            nesting: Default::default(),
            leg_order: Vec::new(),
        };
        inst.check_clauses()?;
        inst.nesting = [Sign::Positive, Sign::Negative].map(|s| inst.default_nesting(s));
        inst.leg_order = (0..n_vars)
            .map(|v| [Sign::Positive, Sign::Negative].map(|s| inst.default_leg_order(v, s)))
            .collect();
        Ok(inst)
    }

    fn check_clauses(&self) -> Result<(), ReductionError> {
        for (c, clause) in self.clauses.iter().enumerate() {
            let [a, b, d] = clause.vars;
            if a == b || b == d || a == d {
                return Err(ReductionError::InvalidClause(c + 1, "variables must be distinct".into()));
            }
            if clause.vars.iter().any(|&v| v >= self.n_vars) {
                return Err(ReductionError::InvalidClause(c + 1, "variable out of range".into()));
            }
        }
        Ok(())
    }

    pub fn clauses_of(&self, sign: Sign) -> impl Iterator<Item = usize> + '_ {
        self.clauses.iter().enumerate().filter(move |(_, c)| c.sign == sign).map(|(i, _)| i)
    }

    /// Narrower combs first; a nested comb spans strictly fewer variables.
    fn default_nesting(&self, sign: Sign) -> Vec<usize> {
        let mut order: Vec<usize> = self.clauses_of(sign).collect();
        order.sort_by_key(|&c| (self.clauses[c].width(), c));
        order
    }

    /// Right to left: combs extending right (inner first), the comb whose
    /// middle leg sits here, then combs extending left (outer first).
    fn default_leg_order(&self, var: usize, sign: Sign) -> Vec<usize> {
        let at: Vec<usize> = self.clauses_of(sign).filter(|&c| self.clauses[c].vars.contains(&var)).collect();
        let width = |c: usize| self.clauses[c].width();
        let mut right: Vec<usize> = at.iter().copied().filter(|&c| self.clauses[c].span().0 == var).collect();
        let mut left: Vec<usize> = at.iter().copied().filter(|&c| self.clauses[c].span().1 == var).collect();
        let middle: Vec<usize> = at.iter().copied().filter(|&c| !right.contains(&c) && !left.contains(&c)).collect();
        right.sort_by_key(|&c| (width(c), c));
        left.sort_by_key(|&c| (std::cmp::Reverse(width(c)), c));
        right.into_iter().chain(middle).chain(left).collect()
    }

    /// Checks that the orders register every clause and leg exactly once.
    pub fn validate(&self) -> Result<(), ReductionError> {
        self.check_clauses()?;
        if self.leg_order.len() != self.n_vars {
            return Err(ReductionError::InconsistentMrr("leg orders do not cover every variable".into()));
        }
        for sign in [Sign::Positive, Sign::Negative] {
            let mut want: Vec<usize> = self.clauses_of(sign).collect();
            let mut got = self.nesting[sign.index()].clone();
            want.sort_unstable();
            got.sort_unstable();
            if want != got {
                return Err(ReductionError::InconsistentMrr(format!("{sign} nesting order is not a permutation of the {sign} clauses")));
            }
            for v in 0..self.n_vars {
                let mut want: Vec<usize> =
                    self.clauses_of(sign).filter(|&c| self.clauses[c].vars.contains(&v)).collect();
                let mut got = self.leg_order[v][sign.index()].clone();
                want.sort_unstable();
                got.sort_unstable();
                if want != got {
                    return Err(ReductionError::InconsistentMrr(format!(
                        "{sign} leg order of variable {} does not list its {sign} clauses exactly once",
                        v + 1
                    )));
                }
            }
        }
        Ok(())
    }

    /// Position of `clause` among the legs at `var`, counted from the right
    /// starting at 1.
    pub(crate) fn leg_rank(&self, var: usize, clause: usize) -> usize {
        let sign = self.clauses[clause].sign;
        1 + self.leg_order[var][sign.index()].iter().position(|&c| c == clause).expect("validated leg order")
    }

    /// Number of clauses of `sign` using `var`.
    pub(crate) fn occurrences(&self, var: usize, sign: Sign) -> usize {
        self.leg_order[var][sign.index()].len()
    }

    /// Row rank of `clause` in its nesting order, starting at 1.
    pub(crate) fn nesting_rank(&self, clause: usize) -> usize {
        let sign = self.clauses[clause].sign;
        1 + self.nesting[sign.index()].iter().position(|&c| c == clause).expect("validated nesting")
    }
}

/// Truth values indexed by variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Assignment {
    pub values: Vec<bool>,
}

impl Assignment {
    pub fn satisfies(&self, mrr: &MrrInstance) -> bool {
        self.values.len() == mrr.n_vars && mrr.clauses.iter().all(|c| c.satisfied_by(&self.values))
    }

    /// Parses a string of `0`/`1` or `f`/`t` characters, one per variable.
    pub fn parse(text: &str) -> Option<Assignment> {
        text.trim()
            .chars()
            .map(|c| match c {
                '1' | 't' | 'T' => Some(true),
                '0' | 'f' | 'F' => Some(false),
                _ => None,
            })
            .collect::<Option<Vec<bool>>>()
            .map(|values| Assignment { values })
    }
}

impl fmt::Display for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.values.iter().try_for_each(|&b| f.write_str(if b { "1" } else { "0" }))
    }
}

/// Lexicographically first satisfying assignment under `false < true`, with
/// variable 1 most significant.
pub fn brute_force_sat(mrr: &MrrInstance) -> Result<Option<Assignment>, ReductionError> {
    let n = mrr.n_vars;
    if n > SAT_VAR_LIMIT {
        return Err(ReductionError::TooLarge { vars: n, limit: SAT_VAR_LIMIT });
    }
    for bits in 0u32..(1u32 << n) {
        let values: Vec<bool> = (0..n).map(|v| bits >> (n - 1 - v) & 1 == 1).collect();
        if mrr.clauses.iter().all(|c| c.satisfied_by(&values)) {
            return Ok(Some(Assignment { values }));
        }
    }
    Ok(None)
}

/// Parses the MRR text format. Variables and clauses are numbered from 1 in
/// the file.
///
/// ```text
/// mrr 4
/// clause pos 1 2 3
/// clause neg 2 3 4
/// legorder 2 pos 1
/// nesting neg 2
/// ```
pub fn parse_mrr(text: &str) -> Result<MrrInstance, ReductionError> {
    let mut n_vars = None;
    let mut clauses = Vec::new();
    let mut legs: Vec<(usize, Sign, Vec<usize>)> = Vec::new();
    let mut nests: Vec<(Sign, Vec<usize>)> = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let err = |message: &str| ReductionError::Syntax { line: lineno + 1, message: message.into() };
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let numbers = |from: usize, to: usize| -> Result<Vec<usize>, ReductionError> {
            tokens[from..to]
                .iter()
                .map(|t| match t.parse::<usize>() {
                    Ok(k) if k >= 1 => Ok(k - 1),
                    _ => Err(err("expected a positive index")),
                })
                .collect()
        };
        match tokens[0] {
            "mrr" if tokens.len() == 2 => {
                if n_vars.is_some() {
                    return Err(err("duplicate header"));
                }
                n_vars = Some(tokens[1].parse::<usize>().map_err(|_| err("bad variable count"))?);
            }
            "clause" if tokens.len() == 5 => {
                let sign = Sign::parse(tokens[1]).ok_or_else(|| err("expected pos or neg"))?;
                let v = numbers(2, 5)?;
                clauses.push(Clause { sign, vars: [v[0], v[1], v[2]] });
            }
            "legorder" if tokens.len() >= 3 => {
                let var = numbers(1, 2)?[0];
                let sign = Sign::parse(tokens[2]).ok_or_else(|| err("expected pos or neg"))?;
                legs.push((var, sign, numbers(3, tokens.len())?));
            }
            "nesting" if tokens.len() >= 2 => {
                let sign = Sign::parse(tokens[1]).ok_or_else(|| err("expected pos or neg"))?;
                nests.push((sign, numbers(2, tokens.len())?));
            }
            _ => return Err(err("expected `mrr`, `clause`, `legorder` or `nesting`")),
        }
    }
    let n_vars = n_vars.ok_or(ReductionError::Syntax { line: 0, message: "missing `mrr <n_vars>` header".into() })?;
    let mut inst = MrrInstance::new(n_vars, clauses)?;
    for (var, sign, order) in legs {
        if var >= n_vars {
            return Err(ReductionError::InconsistentMrr(format!("leg order for unknown variable {}", var + 1)));
        }
        inst.leg_order[var][sign.index()] = order;
    }
    for (sign, order) in nests {
        inst.nesting[sign.index()] = order;
    }
    inst.validate()?;
    Ok(inst)
}

/// Writes an instance with all orders explicit.
pub fn write_mrr(mrr: &MrrInstance) -> String {
    let mut out = format!("mrr {}\n", mrr.n_vars);
    for c in &mrr.clauses {
        let [a, b, d] = c.vars;
        let _ = writeln!(out, "clause {} {} {} {}", c.sign, a + 1, b + 1, d + 1);
    }
    let list = |v: &[usize]| v.iter().map(|c| (c + 1).to_string()).collect::<Vec<_>>().join(" ");
    for (v, orders) in mrr.leg_order.iter().enumerate() {
        for sign in [Sign::Positive, Sign::Negative] {
            if !orders[sign.index()].is_empty() {
                let _ = writeln!(out, "legorder {} {} {}", v + 1, sign, list(&orders[sign.index()]));
            }
        }
    }
    for sign in [Sign::Positive, Sign::Negative] {
        if !mrr.nesting[sign.index()].is_empty() {
            let _ = writeln!(out, "nesting {} {}", sign, list(&mrr.nesting[sign.index()]));
        }
    }
    out
}

/// Seeded random instance whose default layout is realizable, or `None` when
/// no such instance turns up within a fixed number of draws.
pub fn gen_random_mrr(seed: u64, n_vars: usize, n_clauses: usize) -> Option<MrrInstance> {
    if n_vars < 3 {
        return None;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..10_000 {
        let clauses = (0..n_clauses)
            .map(|_| {
                let sign = if rng.gen_bool(0.5) { Sign::Positive } else { Sign::Negative };
                let mut vars = rand::seq::index::sample(&mut rng, n_vars, 3).into_vec();
                vars.sort_unstable();
                Clause { sign, vars: [vars[0], vars[1], vars[2]] }
            })
            .collect();
        let inst = MrrInstance::new(n_vars, clauses).ok()?;
        if super::plan_routes(&inst).is_ok() {
            return Some(inst);
        }
    }
    None
}
