use crate::clique::clique_number;
use crate::error::{Error, Result};
use crate::graph::{connected_components, Graph};

use super::model::{validate_model, MinorModel};

/// Shrinks a minor model until no single host vertex can be dropped from any
/// branch set without breaking it.
///
/// Pattern vertices are scanned in ascending order and, inside each branch set,
/// host vertices in ascending order. The first deletion that keeps the model
/// valid is applied and the scan restarts; the result is reached when a full
/// pass deletes nothing. Every output set is a subset of the input set.
pub fn minimize_minor_model(m: &MinorModel) -> Result<MinorModel> {
    let violations = validate_model(m, false);
    if !violations.is_empty() {
        return Err(Error::ContractViolation(format!(
            "cannot minimize an invalid minor model: {}",
            violations[0]
        )));
    }
    let host = m.host();
    let pattern = m.pattern();
    let mut sets: Vec<Vec<usize>> = m.branch_sets().to_vec();
    'restart: loop {
        for v in 0..pattern.n() {
            for idx in 0..sets[v].len() {
                if deletion_keeps_model(host, pattern, &sets, v, idx) {
                    sets[v].remove(idx);
                    continue 'restart;
                }
            }
        }
        break;
    }
    MinorModel::new(pattern.clone(), host.clone(), sets)
}

/// Whether removing `sets[v][idx]` leaves a valid minor model. Only branch set
/// `v` changes, so only its own conditions need rechecking.
fn deletion_keeps_model(
    host: &Graph,
    pattern: &Graph,
    sets: &[Vec<usize>],
    v: usize,
    idx: usize,
) -> bool {
    if sets[v].len() == 1 {
        return false;
    }
    let mut reduced = sets[v].clone();
    reduced.remove(idx);
    host.is_connected_subset(&reduced)
        && pattern
            .neighbors(v)
            .iter()
            .all(|&u| host.sets_adjacent(&reduced, &sets[u]))
}

/// True iff every single-vertex deletion from every branch set yields a
/// collection that fails validation. Checked by full revalidation, independent
/// of the shortcut used inside [`minimize_minor_model`].
pub fn is_minimal(m: &MinorModel) -> bool {
    if !m.is_valid(false) {
        return false;
    }
    for v in 0..m.pattern().n() {
        for idx in 0..m.branch_set(v).len() {
            let mut sets = m.branch_sets().to_vec();
            sets[v].remove(idx);
            let smaller = MinorModel::new(m.pattern().clone(), m.host().clone(), sets)
                .expect("same shape as a valid model");
            if smaller.is_valid(false) {
                return false;
            }
        }
    }
    true
}

/// Greedily shrinks the component `c` of `g - i` to a connected vertex set that
/// still has every vertex of `i` in its neighbourhood.
///
/// Requires `|i| <= 3`, `c` a connected component of `g - i`, and
/// `i ⊆ N(c)`. The returned set `h ⊆ c` has `g[h]` connected, `i ⊆ N(h)`, no
/// single vertex removable while keeping both, and clique number at most 3.
pub fn shrink_connected_cover(g: &Graph, i: &[usize], c: &[usize]) -> Result<Vec<usize>> {
    let mut terminals = i.to_vec();
    terminals.sort_unstable();
    terminals.dedup();
    let mut current = c.to_vec();
    current.sort_unstable();
    current.dedup();
    check_cover_preconditions(g, &terminals, &current)?;

    let covers = |set: &[usize]| {
        let nb = g.open_neighborhood(set);
        terminals.iter().all(|t| nb.binary_search(t).is_ok())
    };
    'restart: loop {
        for idx in 0..current.len() {
            if current.len() == 1 {
                break 'restart;
            }
            let mut smaller = current.clone();
            smaller.remove(idx);
            if g.is_connected_subset(&smaller) && covers(&smaller) {
                current = smaller;
                continue 'restart;
            }
        }
        break;
    }
    debug_assert!(g.is_connected_subset(&current) && covers(&current));

    let (sub, _) = g.induced_subgraph(&current);
    let omega = clique_number(&sub)?;
    if omega > 3 {
        return Err(Error::ContractViolation(format!(
            "shrunk cover {current:?} has clique number {omega} > 3"
        )));
    }
    Ok(current)
}

fn check_cover_preconditions(g: &Graph, i: &[usize], c: &[usize]) -> Result<()> {
    let bad = |msg: String| Err(Error::ContractViolation(msg));
    if i.len() > 3 {
        return bad(format!("|I| = {} exceeds 3", i.len()));
    }
    if let Some(&v) = i.iter().chain(c).find(|&&v| v >= g.n()) {
        return bad(format!("vertex {v} is not in the graph"));
    }
    if c.is_empty() {
        return bad("C is empty".into());
    }
    if let Some(v) = c.iter().find(|v| i.binary_search(v).is_ok()) {
        return bad(format!("vertex {v} is in both I and C"));
    }
    // C must be exactly one component of g - I
    let rest: Vec<usize> = (0..g.n()).filter(|v| i.binary_search(v).is_err()).collect();
    let (minus_i, labels) = g.induced_subgraph(&rest);
    let is_component = connected_components(&minus_i)
        .iter()
        .any(|comp| comp.iter().map(|&x| labels[x]).eq(c.iter().copied()));
    if !is_component {
        return bad("C is not a connected component of G - I".into());
    }
    let nb = g.open_neighborhood(c);
    if let Some(t) = i.iter().find(|t| nb.binary_search(t).is_err()) {
        return bad(format!("vertex {t} of I has no neighbour in C"));
    }
    Ok(())
}
