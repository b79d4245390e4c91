//! Graph structure versus QAOA MaxCut performance.
//!
//! The crate enumerates every connected graph on 3 to 8 vertices, computes
//! structural and symmetry invariants, simulates QAOA exactly with optimized
//! angles at depths up to 3, and correlates the two.

pub mod analysis;
pub mod canon;
pub mod config;
pub mod dataset;
pub mod error;
pub mod golden;
pub mod graph;
pub mod graph6;
pub mod pipeline;
pub mod qaoa;
pub mod structure;
pub mod symmetry;
pub mod verify;

pub use error::{Error, Result};
pub use graph::Graph;
