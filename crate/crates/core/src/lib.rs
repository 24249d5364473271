//! Exact maximum matching width (mm-width) of small graphs.
//!
//! The crate computes f-width for the matching, boundary and GF(2)-rank cut
//! functions by subset dynamic programming, checks upper-bound certificates
//! (branch-decompositions, tree-representations) and lower-bound certificates
//! (tangles), and regenerates the minor obstruction set for graphs of
//! mm-width at most 2.

pub mod canon;
pub mod error;
pub mod graph;
pub mod matching;
pub mod minor;
pub mod obstructions;
pub mod tangle;
pub mod treerep;
pub mod width;

pub use error::{Error, Result};
pub use graph::{Graph, GridCoord, VertexSet};
