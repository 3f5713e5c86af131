use std::collections::VecDeque;

use serde_json::json;

use crate::clique::clique_number;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::io::graph6;
use crate::minors::{
    find_induced_minor_model, is_minimal, minimize_minor_model, restrict_model, InducedMinorModel,
    MinorModel,
};
use crate::treewidth::{contains_wall_subdivision, treewidth, MAX_WALL_SEARCH};

use super::report::{params, ExperimentReport, InstanceRecord};

/// A subdivision of a subcubic pattern found as a subgraph of a host.
#[derive(Clone, Debug)]
pub struct SubdivisionWitness {
    /// Host vertices used, sorted. Vertex `i` of `graph` is `vertices[i]`.
    pub vertices: Vec<usize>,
    pub graph: Graph,
    /// The pattern as a minor of `graph`; every branch set induces a tree
    /// and `graph` is exactly those trees plus one edge per pattern edge.
    pub model: MinorModel,
}

/// Turns a minor model of a subcubic pattern into a subdivision of the
/// pattern contained in the host as a subgraph.
///
/// For each pattern edge `ab` the smallest host edge between `X_a` and `X_b`
/// is kept. Inside each branch set a breadth-first tree joins the endpoints
/// of the kept edges. A tree joining at most three terminals is a subdivided
/// star, so the union is a subdivision of the pattern and is subcubic.
pub fn subdivision_from_model(m: &MinorModel) -> Result<SubdivisionWitness> {
    let pattern = m.pattern();
    let host = m.host();
    if !pattern.is_subcubic() {
        return Err(Error::ContractViolation(
            "pattern must have maximum degree at most 3".into(),
        ));
    }
    if let Some(v) = m.validate(false).first() {
        return Err(Error::ContractViolation(format!("invalid model: {v}")));
    }
    let mut terminals: Vec<Vec<usize>> = vec![Vec::new(); pattern.n()];
    let mut links = Vec::with_capacity(pattern.m());
    for &(a, b) in pattern.edges() {
        let (x, y) = m
            .branch_set(a)
            .iter()
            .flat_map(|&x| m.branch_set(b).iter().map(move |&y| (x, y)))
            .find(|&(x, y)| host.has_edge(x, y))
            .expect("valid model has an edge for every pattern edge");
        terminals[a].push(x);
        terminals[b].push(y);
        links.push((x, y));
    }

    let mut tree_sets = Vec::with_capacity(pattern.n());
    let mut edges = links;
    for (a, ts) in terminals.iter().enumerate() {
        let set = m.branch_set(a);
        let root = ts.first().copied().unwrap_or(set[0]);
        let parent = bfs_parents(host, set, root);
        let mut tree = vec![root];
        for &t in ts {
            let mut x = t;
            while x != root && !tree.contains(&x) {
                tree.push(x);
                let p = parent[set
                    .binary_search(&x)
                    .expect("terminal lies in its branch set")]
                .expect("branch set is connected");
                edges.push((x, p));
                x = p;
            }
        }
        tree.sort_unstable();
        tree_sets.push(tree);
    }

    let mut vertices: Vec<usize> = tree_sets.iter().flatten().copied().collect();
    vertices.sort_unstable();
    let index = |x: usize| {
        vertices
            .binary_search(&x)
            .expect("vertex is in the witness")
    };
    let graph = Graph::new(
        vertices.len(),
        edges.iter().map(|&(x, y)| (index(x), index(y))),
    )?;
    let sets = tree_sets
        .iter()
        .map(|t| t.iter().map(|&x| index(x)).collect())
        .collect();
    let model = MinorModel::new(pattern.clone(), graph.clone(), sets)?;
    Ok(SubdivisionWitness {
        vertices,
        graph,
        model,
    })
}

/// Breadth-first parents inside `set` (sorted), indexed like `set`.
fn bfs_parents(g: &Graph, set: &[usize], root: usize) -> Vec<Option<usize>> {
    let mut parent = vec![None; set.len()];
    let mut seen = vec![false; set.len()];
    let pos = |x: usize| set.binary_search(&x).ok();
    seen[pos(root).expect("root in set")] = true;
    let mut queue = VecDeque::from([root]);
    while let Some(x) = queue.pop_front() {
        for &y in g.neighbors(x) {
            if let Some(i) = pos(y) {
                if !seen[i] {
                    seen[i] = true;
                    parent[i] = Some(x);
                    queue.push_back(y);
                }
            }
        }
    }
    parent
}

/// Runs the wall argument on one instance: induced model of `pattern` in
/// `host`, a wall subdivision `W` inside `pattern`, the restriction of the
/// model to `W`, its minimization, and the bounds on the union `G′` of the
/// surviving branch sets.
///
/// Without a supplied model one is searched for; a pattern that is not an
/// induced minor is a contract violation. If `pattern` has no `k`-wall the
/// single instance is inconclusive.
pub fn theorem5_pipeline(
    host: &Graph,
    pattern: &Graph,
    k: usize,
    supplied: Option<&InducedMinorModel>,
) -> Result<ExperimentReport> {
    if k == 0 || k > MAX_WALL_SEARCH {
        return Err(Error::InvalidArgument(format!(
            "k must be between 1 and {MAX_WALL_SEARCH}, got {k}"
        )));
    }
    let mut rec = InstanceRecord::new(0, "theorem5", None);
    rec.input("host", graph6::encode(host));
    rec.input("pattern", graph6::encode(pattern));
    rec.measure("k", k);
    rec.measure("inequalities_evaluated", 0);

    let model = match supplied {
        Some(m) => {
            if m.host() != host || m.pattern() != pattern {
                return Err(Error::ContractViolation(
                    "supplied model does not match host and pattern".into(),
                ));
            }
            rec.measure("model_source", "supplied");
            m.clone()
        }
        None => {
            rec.measure("model_source", "search");
            find_induced_minor_model(host, pattern)?.ok_or_else(|| {
                Error::ContractViolation("pattern is not an induced minor of host".into())
            })?
        }
    };
    rec.measure("induced_model", json!(model.branch_sets()));

    let report = |rec: InstanceRecord| {
        ExperimentReport::new(
            "theorem5",
            0,
            1,
            params([("k", k.into())]),
            vec![rec],
            vec![],
        )
    };

    let Some(wall_model) = contains_wall_subdivision(pattern, k)? else {
        rec.mark_inconclusive(format!("no wall witness at k = {k}"));
        return Ok(report(rec));
    };
    let wall_model = minimize_minor_model(&wall_model)?;
    rec.measure("wall_witness", json!(wall_model.branch_sets()));
    let w = subdivision_from_model(&wall_model)?;
    rec.measure("w_vertices", json!(w.vertices));
    rec.measure("w_graph6", graph6::encode(&w.graph));
    rec.check(w.graph.is_subcubic(), || "W is not subcubic".into());
    rec.check(w.model.is_valid(false), || {
        "W does not contain the wall".into()
    });

    let restricted = restrict_model(&model, &w.vertices)?.with_pattern(w.graph.clone())?;
    rec.check(restricted.is_valid(false), || {
        "restricted model of W is invalid".into()
    });
    let minimal = minimize_minor_model(&restricted)?;
    rec.measure("minimized_model", json!(minimal.branch_sets()));
    rec.check(is_minimal(&minimal), || {
        "minimized model of W is not minimal".into()
    });
    let nested = minimal
        .branch_sets()
        .iter()
        .zip(restricted.branch_sets())
        .all(|(small, big)| small.iter().all(|x| big.binary_search(x).is_ok()));
    rec.check(nested, || "minimized branch sets are not nested".into());

    let mut branch_omegas = Vec::new();
    for set in minimal.branch_sets() {
        branch_omegas.push(clique_number(&host.induced_subgraph(set).0)?);
    }
    let max_branch_omega = branch_omegas.iter().copied().max().unwrap_or(0);

    let (g_prime, g_prime_vertices) = host.induced_subgraph(&minimal.covered_vertices());
    let omega_g_prime = clique_number(&g_prime)?;
    let omega_pattern = clique_number(pattern)?;
    let tw_w = treewidth(&w.graph)?;
    let tw_g_prime = treewidth(&g_prime)?;
    rec.measure("branch_omega", json!(branch_omegas));
    rec.measure("g_prime_vertices", json!(g_prime_vertices));
    rec.measure("g_prime_graph6", graph6::encode(&g_prime));
    rec.measure("omega_g_prime", omega_g_prime);
    rec.measure("omega_pattern", omega_pattern);
    rec.measure("tw_w", tw_w);
    rec.measure("tw_g_prime", tw_g_prime);

    rec.check(max_branch_omega <= 3, || {
        format!("a branch set has clique number {max_branch_omega} > 3")
    });
    rec.check(omega_g_prime <= 3 * omega_pattern, || {
        format!(
            "omega(G') = {omega_g_prime} exceeds 3 * omega(H) = {}",
            3 * omega_pattern
        )
    });
    rec.check(tw_g_prime >= tw_w, || {
        format!("tw(G') = {tw_g_prime} < tw(W) = {tw_w}")
    });
    rec.check(tw_w >= k as i64, || format!("tw(W) = {tw_w} < k = {k}"));
    rec.measure("inequalities_evaluated", 4);
    Ok(report(rec))
}
