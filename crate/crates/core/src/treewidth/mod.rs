//! Exact treewidth, tree decompositions, and wall-subdivision witnesses.

pub mod decomposition;
pub mod exact;
pub mod wall;

pub use decomposition::{from_pace, to_pace, validate_decomposition, TreeDecomposition, Violation};
pub use exact::{
    decomposition_from_ordering, exact_treewidth, exact_treewidth_with, ordering_width, treewidth,
    TreewidthLimits,
};
pub use wall::{contains_wall_subdivision, MAX_WALL_SEARCH};
