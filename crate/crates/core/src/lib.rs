//! Structural graph theory toolkit for (tw, ω)-boundedness.
//!
//! Exact treewidth with certifying decompositions, maximum clique, minor and
//! induced-minor models (search, validation, minimisation), binding-function
//! polynomials, and seeded experiment suites that exercise them end to end.

pub mod boundedness;
pub mod clique;
pub mod error;
pub mod families;
pub mod graph;
pub mod harness;
pub mod io;
pub mod minors;
pub mod transform;
pub mod treewidth;

pub use clique::{clique_number, independence_number, maximum_clique};
pub use error::{Error, Result};
pub use graph::{connected_components, is_claw_free, Graph};
pub use transform::{line_graph, subdivide_once, LineGraph};
