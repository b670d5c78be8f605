//! Geometric embeddings: element points plus one simple polygon per block.
//!
//! Constructions work in exact rational arithmetic. Regions are octagonal
//! buffers of straight-line trees (weak, strong) or stars (full), and every
//! construction runs the exact validator on its own output before returning,
//! shrinking the buffers and retrying when a degenerate contact shows up.

mod buffer;
mod construct;
mod points;
mod validate;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::geometry::{Point, Polygon};
use crate::graph::GraphError;
use crate::pair::{BlockId, ElementId};

pub use construct::{full_embedding, strong_embedding, weak_embedding};
pub use points::{auto_points, check_general_position, tree_on_points};
pub use validate::{validate_embedding, PairRelation, ValidationReport};

/// Embeddability class an artifact claims.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Level {
    Weak,
    Strong,
    Full,
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Level::Weak => "weak",
            Level::Strong => "strong",
            Level::Full => "full",
        })
    }
}

impl FromStr for Level {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "weak" => Ok(Level::Weak),
            "strong" => Ok(Level::Strong),
            "full" => Ok(Level::Full),
            other => Err(format!("unknown class `{other}` (expected weak, strong or full)")),
        }
    }
}

/// Element points and block regions. Points follow universe order and regions
/// follow global block order (partition 0 first).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddingArtifact {
    pub level: Level,
    pub points: Vec<(ElementId, Point)>,
    pub regions: Vec<(BlockId, Polygon)>,
}

impl EmbeddingArtifact {
    pub fn point(&self, id: &str) -> Option<&Point> {
        self.points.iter().find(|(e, _)| e.as_str() == id).map(|(_, p)| p)
    }

    pub fn region(&self, id: &BlockId) -> Option<&Polygon> {
        self.regions.iter().find(|(b, _)| b == id).map(|(_, p)| p)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EmbedError {
    #[error("expected {expected} points, got {found}")]
    SizeMismatch { expected: usize, found: usize },
    #[error("points {0} and {1} coincide")]
    DuplicatePoint(usize, usize),
    #[error("points {0}, {1} and {2} are collinear")]
    CollinearPoints(usize, usize, usize),
    #[error("graph is not a tree")]
    NotATree,
    #[error("support graph is not planar")]
    NotPlanar,
    #[error("bipartite map is not planar; no full embedding exists")]
    NotFullyEmbeddable,
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("region of {0} is not a simple polygon")]
    SelfIntersectingPolygon(BlockId),
    #[error("boundaries of {0} and {1} touch without crossing")]
    TangentBoundaries(BlockId, BlockId),
    #[error("artifact does not match the pair: {0}")]
    Mismatch(String),
    #[error("could not build a valid {0} embedding")]
    ConstructionFailed(Level),
}
