use crate::error::{Error, Result};
use crate::families::wall;
use crate::graph::Graph;
use crate::minors::{find_minor_model, MinorModel};

use super::exact::treewidth;

/// Largest wall size the witness search accepts.
pub const MAX_WALL_SEARCH: usize = 3;

/// Looks for the k×k wall as a minor of `g`.
///
/// The wall has maximum degree three, and for such patterns having a minor
/// model is equivalent to having a subdivision as a subgraph, so a returned
/// model certifies a wall subdivision in `g`. `None` means the exhaustive
/// search found no model.
pub fn contains_wall_subdivision(g: &Graph, k: usize) -> Result<Option<MinorModel>> {
    if k == 0 || k > MAX_WALL_SEARCH {
        return Err(Error::InvalidArgument(format!(
            "wall witness search supports 1 <= k <= {MAX_WALL_SEARCH}, got {k}"
        )));
    }
    let w = wall(k)?;
    // minors cannot have larger treewidth than their host
    match treewidth(g) {
        Ok(tw_g) if tw_g < treewidth(&w)? => return Ok(None),
        Ok(_) | Err(Error::ResourceLimit { .. }) => {}
        Err(e) => return Err(e),
    }
    find_minor_model(g, &w)
}
