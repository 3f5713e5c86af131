//! Models that exist by construction, and restriction of models to
//! sub-patterns.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::transform::{line_graph, subdivide_once};

use super::model::{validate_model, InducedMinorModel, MinorModel};

/// `X_v = {v}` for every vertex: `g` as an induced minor of itself.
pub fn identity_model(g: &Graph) -> InducedMinorModel {
    let sets = (0..g.n()).map(|v| vec![v]).collect();
    let m = MinorModel::new(g.clone(), g.clone(), sets).expect("identity has the right shape");
    InducedMinorModel::new(m).expect("identity model is induced")
}

/// `g` as an induced minor of `S(g)`: vertex `v` keeps itself plus the
/// midpoints of its edges to larger neighbours.
pub fn subdivision_model(g: &Graph) -> InducedMinorModel {
    let host = subdivide_once(g);
    let mut sets: Vec<Vec<usize>> = (0..g.n()).map(|v| vec![v]).collect();
    for (i, &(u, _)) in g.edges().iter().enumerate() {
        sets[u].push(g.n() + i);
    }
    let m = MinorModel::new(g.clone(), host, sets).expect("shape matches");
    InducedMinorModel::new(m).expect("subdivision model is induced")
}

/// `g` as an induced minor of `L(S(g))`.
///
/// Each edge `uv` of `g` becomes the two half-edges `u–w` and `w–v` of `S(g)`,
/// and those are the vertices of the line graph. The branch set of `v` is the
/// set of half-edges at `v`: a clique in the line graph. Half-edges at `u` and
/// at `v` meet only in a shared midpoint, i.e. only when `uv` is an edge.
///
/// Every vertex needs at least one incident edge, otherwise its branch set
/// would be empty.
pub fn lsg_canonical_model(g: &Graph) -> Result<InducedMinorModel> {
    if let Some(v) = (0..g.n()).find(|&v| g.degree(v) == 0) {
        return Err(Error::ContractViolation(format!(
            "vertex {v} is isolated and has no half-edges in L(S(G))"
        )));
    }
    let sub = subdivide_once(g);
    let line = line_graph(&sub);
    let mut sets: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
    for (x, &(a, _)) in line.edge_of.iter().enumerate() {
        // S(g) edges are (original, midpoint) with the original endpoint first
        sets[a].push(x);
    }
    let m = MinorModel::new(g.clone(), line.graph, sets)?;
    InducedMinorModel::new(m)
}

/// Keeps the branch sets of `sub_pattern` and drops the rest, giving a plain
/// minor model of the pattern's induced subgraph on those vertices.
///
/// Pattern vertex `i` of the result is the i-th smallest entry of
/// `sub_pattern`.
pub fn restrict_model(m: &InducedMinorModel, sub_pattern: &[usize]) -> Result<MinorModel> {
    let violations = validate_model(m, true);
    if !violations.is_empty() {
        return Err(Error::ContractViolation(format!(
            "cannot restrict an invalid model: {}",
            violations[0]
        )));
    }
    if let Some(&v) = sub_pattern.iter().find(|&&v| v >= m.pattern().n()) {
        return Err(Error::ContractViolation(format!(
            "vertex {v} is not a pattern vertex"
        )));
    }
    let (pattern, keep) = m.pattern().induced_subgraph(sub_pattern);
    let sets = keep.iter().map(|&v| m.branch_set(v).to_vec()).collect();
    let out = MinorModel::new(pattern, m.host().clone(), sets)?;
    let violations = validate_model(&out, false);
    if !violations.is_empty() {
        return Err(Error::ContractViolation(format!(
            "restricted model is invalid: {}",
            violations[0]
        )));
    }
    Ok(out)
}
