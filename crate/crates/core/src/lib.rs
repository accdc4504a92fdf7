//! Efficient open domination in Cartesian products of graphs.
//!
//! A set `D` of vertices is an EOD-set (efficient open dominating set) when
//! every vertex has exactly one neighbor in `D`. This crate provides an exact
//! EOD-set solver, the weak-partition characterizations of graphs `G` for
//! which `G □ H` has an EOD-set, and the family of trees `T` for which
//! `T □ K_r` has one.

pub mod amenability;
pub mod eod;
pub mod error;
pub mod graph;
pub mod harness;
pub mod io;
pub mod oracles;
pub mod product;
pub mod trees;

pub use error::{Error, Result};
pub use graph::{Edge, Graph, VertexSet};
