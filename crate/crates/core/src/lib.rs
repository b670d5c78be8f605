//! Simultaneous embeddings of two partitions of one universe.
//!
//! A [`pair::PartitionPair`] is drawn by giving every element a point and
//! every block a simple region containing exactly its elements' points.
//! Three classes are distinguished:
//!
//! * weak: regions of the same partition are disjoint. Always possible.
//! * strong: additionally every overlap of two regions holds an element
//!   point. Possible exactly when the elements have a planar support.
//! * full: additionally the regions form pseudo-disks. Possible exactly when
//!   the element/block incidence graph is planar.
//!
//! [`decide`] classifies pairs, [`embed`] builds and validates drawings in
//! exact arithmetic, [`reduction`] produces hard instances from planar
//! monotone 3SAT, and [`cli`] wraps everything behind the `simembed` binary.

pub mod pair;
pub mod graph;
pub mod planarity;
pub mod decide;
pub mod geometry;
pub mod embed;
pub mod reduction;
pub mod cli;
