//! Matroid analogues of chordality for small explicit matroids: modular and
//! round flats, rotunda, rotunda graphs and trees, and matroid tree-width,
//! alongside the chordal-graph side they generalize.

pub mod bitset;
pub mod classification;
pub mod correspondence;
pub mod error;
pub mod export;
pub mod graph;
pub mod matroid;
pub mod modularity;
pub mod report;
pub mod rotunda_graph;
pub mod roundness;
pub mod treewidth;
pub mod verify;
pub mod trees;
pub mod weighting;

pub use bitset::ElementSet;
pub use error::{Error, Result};
pub use graph::SimpleGraph;
pub use matroid::{Flat, Matroid};
pub use weighting::Weighting;
