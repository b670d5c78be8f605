//! Line-oriented pair file format.
//!
//! ```text
//! # comment
//! element <eid> <block0-name> <block1-name>
//! ```
//!
//! Blocks are implied by mention. A line with a missing block name leaves the
//! element unassigned in that partition, which validation reports.

use std::collections::HashMap;
use std::fmt::Write as _;

use thiserror::Error;

use super::{validate_pair, PartitionPair, RawPair, ValidationError};

#[derive(Debug, Error)]
pub enum PairFileError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error(transparent)]
    Invalid(#[from] ValidationError),
}

pub fn parse_pair_file(text: &str) -> Result<PartitionPair, PairFileError> {
    let mut raw = RawPair::default();
    let mut block_pos: [HashMap<String, usize>; 2] = Default::default();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens[0] != "element" {
            return Err(PairFileError::Syntax {
                line: lineno + 1,
                message: format!("unknown record {:?}", tokens[0]),
            });
        }
        if tokens.len() < 2 || tokens.len() > 4 {
            return Err(PairFileError::Syntax {
                line: lineno + 1,
                message: "expected `element <eid> <block0> <block1>`".into(),
            });
        }
        let eid = tokens[1].to_string();
        raw.universe.push(eid.clone());
        for (s, name) in tokens[2..].iter().enumerate() {
            let slot = *block_pos[s].entry(name.to_string()).or_insert_with(|| {
                raw.partitions[s].push((name.to_string(), Vec::new()));
                raw.partitions[s].len() - 1
            });
            raw.partitions[s][slot].1.push(eid.clone());
        }
    }
    Ok(validate_pair(&raw)?)
}

pub fn write_pair_file(pair: &PartitionPair) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "# {} elements, {} + {} blocks",
        pair.len(),
        pair.partition(super::Side::P0).len(),
        pair.partition(super::Side::P1).len()
    );
    for u in 0..pair.len() {
        let b0 = pair.block(pair.block_of(u, super::Side::P0)).name();
        let b1 = pair.block(pair.block_of(u, super::Side::P1)).name();
        let _ = writeln!(out, "element {} {} {}", pair.element(u), b0, b1);
    }
    out
}
