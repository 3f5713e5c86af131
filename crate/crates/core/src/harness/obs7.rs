use rand::seq::SliceRandom;
use rayon::prelude::*;
use serde_json::json;

use crate::error::{check_cap, Error, Result};
use crate::families::complete_bipartite;
use crate::graph::{is_claw_free, Graph};
use crate::io::graph6;
use crate::minors::lsg_canonical_model;
use crate::transform::{line_graph, subdivide_once};
use crate::treewidth::treewidth;

use super::generate::{rng_from_seed, sub_seed};
use super::report::{params, ExperimentReport, InstanceRecord};

pub const OBS7_MAX_TRIALS: usize = 1000;

/// `L(S(K_{ℓ,ℓ}))`.
pub fn obs7_graph(ell: usize) -> Graph {
    line_graph(&subdivide_once(&complete_bipartite(ell, ell))).graph
}

/// Structural checks on `L(S(K_{ℓ,ℓ}))`, then `trials` random greedy maximal
/// triangle-free induced subgraphs. For `ℓ = 2` every vertex subset is also
/// checked.
pub fn obs7_experiment(ell: usize, trials: usize, seed: u64) -> Result<ExperimentReport> {
    if !(2..=3).contains(&ell) {
        return Err(Error::InvalidArgument(format!(
            "ell must be 2 or 3, got {ell}"
        )));
    }
    check_cap("obs7 trials", OBS7_MAX_TRIALS, trials)?;
    let g = obs7_graph(ell);

    let mut instances = Vec::new();
    let mut structure = InstanceRecord::new(0, "structure", None);
    structure.input("graph", graph6::encode(&g));
    let model = lsg_canonical_model(&complete_bipartite(ell, ell))?;
    structure.check(model.host() == &g, || {
        "canonical model lives in a different host".into()
    });
    structure.check(model.is_valid(true), || {
        "canonical model is not an induced model".into()
    });
    let claw_free = is_claw_free(&g);
    structure.measure("claw_free", claw_free);
    structure.check(claw_free, || "graph has a claw".into());
    structure.check(graph6::decode(&graph6::encode(&g))? == g, || {
        "graph does not round-trip through graph6".into()
    });
    instances.push(structure);

    if ell == 2 {
        instances.push(exhaustive(&g, instances.len())?);
    }

    let offset = instances.len();
    let sampled: Vec<InstanceRecord> = (0..trials)
        .into_par_iter()
        .map(|t| greedy_trial(&g, offset + t, sub_seed(seed, t as u64)))
        .collect::<Result<_>>()?;
    instances.extend(sampled);

    Ok(ExperimentReport::new(
        "obs7",
        seed,
        trials,
        params([("ell", ell.into())]),
        instances,
        Vec::new(),
    ))
}

fn has_triangle(g: &Graph) -> bool {
    g.edges()
        .iter()
        .any(|&(u, v)| g.neighbors(u).iter().any(|&w| w > v && g.has_edge(v, w)))
}

fn exhaustive(g: &Graph, index: usize) -> Result<InstanceRecord> {
    let mut rec = InstanceRecord::new(index, "exhaustive", None);
    let mut triangle_free = 0usize;
    let mut max_tw = -1i64;
    let mut max_degree = 0usize;
    for mask in 0u64..1 << g.n() {
        let members: Vec<usize> = (0..g.n()).filter(|&v| mask >> v & 1 == 1).collect();
        let (sub, _) = g.induced_subgraph(&members);
        if has_triangle(&sub) {
            continue;
        }
        triangle_free += 1;
        let tw = treewidth(&sub)?;
        max_tw = max_tw.max(tw);
        max_degree = max_degree.max(sub.max_degree());
        rec.check(tw <= 2, || format!("subset {members:?} has treewidth {tw}"));
    }
    rec.measure("subsets", 1u64 << g.n());
    rec.measure("triangle_free_subsets", triangle_free);
    rec.measure("max_treewidth", max_tw);
    rec.measure("max_degree", max_degree);
    Ok(rec)
}

fn greedy_trial(g: &Graph, index: usize, seed: u64) -> Result<InstanceRecord> {
    let mut rec = InstanceRecord::new(index, "greedy", Some(seed));
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.shuffle(&mut rng_from_seed(seed));
    let mut chosen = vec![false; g.n()];
    for &v in &order {
        if !closes_triangle(g, &chosen, v) {
            chosen[v] = true;
        }
    }
    let members: Vec<usize> = (0..g.n()).filter(|&v| chosen[v]).collect();
    let (sub, _) = g.induced_subgraph(&members);
    let maximal = (0..g.n()).all(|v| chosen[v] || closes_triangle(g, &chosen, v));
    let tw = treewidth(&sub)?;
    rec.measure("subset", json!(members));
    rec.measure("subgraph_graph6", graph6::encode(&sub));
    rec.measure("max_degree", sub.max_degree());
    rec.measure("treewidth", tw);
    rec.check(!has_triangle(&sub), || "subgraph has a triangle".into());
    rec.check(maximal, || "subgraph is not maximal".into());
    rec.check(sub.max_degree() <= 2, || {
        format!("maximum degree {}", sub.max_degree())
    });
    rec.check(tw <= 2, || format!("treewidth {tw}"));
    rec.check(graph6::decode(&graph6::encode(&sub))? == sub, || {
        "subgraph does not round-trip through graph6".into()
    });
    Ok(rec)
}

/// Whether adding `v` to the chosen set creates a triangle.
fn closes_triangle(g: &Graph, chosen: &[bool], v: usize) -> bool {
    let nb: Vec<usize> = g
        .neighbors(v)
        .iter()
        .copied()
        .filter(|&u| chosen[u])
        .collect();
    nb.iter()
        .enumerate()
        .any(|(i, &a)| nb[i + 1..].iter().any(|&b| g.has_edge(a, b)))
}
