//! Exact treewidth over elimination orderings.
//!
//! The search walks the lattice of eliminated-vertex sets. For a set `S`, the
//! graph left after eliminating `S` (in any order) has the remaining vertices,
//! their original edges, and a clique on `N(C)` for every component `C` of
//! `G[S]`. Eliminating `v` next costs the degree of `v` in that graph, so
//! `tw(G) <= k` iff the full set is reachable from the empty set through steps
//! of cost at most `k`. Widths are tried upward from a minor-min-width lower
//! bound until the first reachable one; the path found is an optimal
//! elimination ordering, which is then turned into a decomposition.
//!
//! Two exact reductions keep the lattice small: an almost simplicial vertex of
//! degree at most `k` may always be eliminated next without changing the
//! answer, and a simplicial vertex of degree above `k` ends the branch.

use std::collections::{BTreeSet, HashSet};

use crate::error::{check_cap, Error, Result};
use crate::graph::{connected_components, Graph, BITSET_CAP};

use super::decomposition::TreeDecomposition;

#[derive(Clone, Copy, Debug)]
pub struct TreewidthLimits {
    /// Largest number of search states visited per component and width.
    pub max_states: usize,
}

impl Default for TreewidthLimits {
    fn default() -> Self {
        TreewidthLimits {
            max_states: 4_000_000,
        }
    }
}

/// tw(G) together with a decomposition of exactly that width.
///
/// The empty graph has width `-1` and a single empty bag.
pub fn exact_treewidth(g: &Graph) -> Result<(i64, TreeDecomposition)> {
    exact_treewidth_with(g, TreewidthLimits::default())
}

pub fn treewidth(g: &Graph) -> Result<i64> {
    Ok(exact_treewidth(g)?.0)
}

pub fn exact_treewidth_with(
    g: &Graph,
    limits: TreewidthLimits,
) -> Result<(i64, TreeDecomposition)> {
    check_cap("vertex count for exact treewidth", BITSET_CAP, g.n())?;
    if g.n() == 0 {
        return Ok((-1, TreeDecomposition::new(vec![vec![]], vec![None])?));
    }
    let mut order = Vec::with_capacity(g.n());
    let mut width = 0;
    for comp in connected_components(g) {
        let (sub, labels) = g.induced_subgraph(&comp);
        let adj = sub.adjacency_masks()?;
        let (w, local) = solve_component(&adj, limits)?;
        width = width.max(w);
        order.extend(local.into_iter().map(|v| labels[v]));
    }
    let td = decomposition_from_ordering(g, &order)?;
    debug_assert_eq!(td.width(), width as i64);
    Ok((width as i64, td))
}

/// Width of the decomposition induced by eliminating vertices in `order`.
pub fn ordering_width(g: &Graph, order: &[usize]) -> Result<i64> {
    Ok(decomposition_from_ordering(g, order)?.width())
}

/// Builds the tree decomposition of an elimination ordering: the bag of `v`
/// is `v` plus its later neighbours in the fill graph, and its parent is the
/// bag of the earliest-eliminated of those neighbours. Roots of separate
/// components are chained together.
pub fn decomposition_from_ordering(g: &Graph, order: &[usize]) -> Result<TreeDecomposition> {
    let n = g.n();
    let mut position = vec![usize::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        if v >= n || position[v] != usize::MAX {
            return Err(Error::InvalidArgument(
                "elimination ordering must list every vertex exactly once".into(),
            ));
        }
        position[v] = i;
    }
    if order.len() != n {
        return Err(Error::InvalidArgument(
            "elimination ordering must list every vertex exactly once".into(),
        ));
    }
    if n == 0 {
        return TreeDecomposition::new(vec![vec![]], vec![None]);
    }
    let mut adj: Vec<BTreeSet<usize>> = (0..n)
        .map(|v| g.neighbors(v).iter().copied().collect())
        .collect();
    let mut bags = Vec::with_capacity(n);
    let mut parent = Vec::with_capacity(n);
    for &v in order {
        let later: Vec<usize> = adj[v].iter().copied().collect();
        for (i, &a) in later.iter().enumerate() {
            adj[a].remove(&v);
            for &b in &later[i + 1..] {
                adj[a].insert(b);
                adj[b].insert(a);
            }
        }
        parent.push(later.iter().map(|&w| position[w]).min());
        let mut bag = later;
        bag.push(v);
        bags.push(bag);
    }
    let roots: Vec<usize> = (0..n).filter(|&t| parent[t].is_none()).collect();
    for pair in roots.windows(2) {
        parent[pair[0]] = Some(pair[1]);
    }
    TreeDecomposition::new(bags, parent)
}

/// Returns the treewidth of a connected graph on `adj.len()` vertices and an
/// elimination ordering achieving it.
fn solve_component(adj: &[u64], limits: TreewidthLimits) -> Result<(usize, Vec<usize>)> {
    let c = adj.len();
    if c == 1 {
        return Ok((0, vec![0]));
    }
    let all = full_mask(c);
    let lower = minor_min_width(adj, all);
    let (upper, heuristic) = min_fill_ordering(adj);
    if lower >= upper {
        return Ok((upper, heuristic));
    }
    for k in lower..upper {
        let mut search = Decision {
            adj,
            all,
            k,
            failed: HashSet::new(),
            order: Vec::with_capacity(c),
            states: 0,
            max_states: limits.max_states,
        };
        if search.run(0)? {
            return Ok((k, search.order));
        }
    }
    Ok((upper, heuristic))
}

struct Decision<'a> {
    adj: &'a [u64],
    all: u64,
    k: usize,
    failed: HashSet<u64>,
    order: Vec<usize>,
    states: usize,
    max_states: usize,
}

impl Decision<'_> {
    fn run(&mut self, eliminated: u64) -> Result<bool> {
        let rest = self.all & !eliminated;
        if rest.count_ones() as usize <= self.k + 1 {
            self.order.extend(bits(rest));
            return Ok(true);
        }
        if self.failed.contains(&eliminated) {
            return Ok(false);
        }
        self.states += 1;
        if self.states > self.max_states {
            return Err(Error::ResourceLimit {
                what: "treewidth search states",
                limit: self.max_states,
                actual: self.states,
            });
        }

        let elim = elimination_graph(self.adj, eliminated, rest);
        if minor_min_width(&elim, rest) > self.k {
            self.failed.insert(eliminated);
            return Ok(false);
        }

        let mut candidates = Vec::new();
        let mut forced = None;
        for v in bits(rest) {
            let nb = elim[v];
            let deg = nb.count_ones() as usize;
            match simpliciality(&elim, nb) {
                Simpliciality::Simplicial if deg > self.k => {
                    self.failed.insert(eliminated);
                    return Ok(false);
                }
                Simpliciality::Simplicial | Simpliciality::Almost if deg <= self.k => {
                    forced = Some(v);
                    break;
                }
                _ if deg <= self.k => candidates.push((deg, v)),
                _ => {}
            }
        }
        if let Some(v) = forced {
            candidates = vec![(0, v)];
        } else {
            candidates.sort_unstable();
        }
        for (_, v) in candidates {
            self.order.push(v);
            if self.run(eliminated | 1 << v)? {
                return Ok(true);
            }
            self.order.pop();
        }
        self.failed.insert(eliminated);
        Ok(false)
    }
}

enum Simpliciality {
    Simplicial,
    /// All neighbours but one form a clique.
    Almost,
    Neither,
}

fn simpliciality(adj: &[u64], nb: u64) -> Simpliciality {
    let is_clique = |set: u64| bits(set).all(|x| set & !(1 << x) & !adj[x] == 0);
    if is_clique(nb) {
        return Simpliciality::Simplicial;
    }
    if bits(nb).any(|u| is_clique(nb & !(1 << u))) {
        Simpliciality::Almost
    } else {
        Simpliciality::Neither
    }
}

/// Adjacency of the graph left after eliminating `eliminated`, restricted to
/// `rest`.
fn elimination_graph(adj: &[u64], eliminated: u64, rest: u64) -> Vec<u64> {
    let mut out: Vec<u64> = adj.iter().map(|&a| a & rest).collect();
    let mut unvisited = eliminated;
    while unvisited != 0 {
        let start = unvisited.trailing_zeros() as usize;
        let mut comp = 1u64 << start;
        let mut frontier = comp;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let next = adj[v] & eliminated & !comp;
            comp |= next;
            frontier |= next;
        }
        unvisited &= !comp;
        let boundary = bits(comp).fold(0u64, |acc, v| acc | adj[v]) & rest;
        for v in bits(boundary) {
            out[v] |= boundary & !(1 << v);
        }
    }
    out
}

/// Minor-min-width lower bound: repeatedly record the minimum degree and
/// contract a minimum-degree vertex into its lowest-degree neighbour.
fn minor_min_width(adj: &[u64], vertices: u64) -> usize {
    let mut adj: Vec<u64> = adj.iter().map(|&a| a & vertices).collect();
    let mut alive = vertices;
    let mut best = 0;
    while alive.count_ones() > 1 {
        let v = bits(alive)
            .min_by_key(|&v| adj[v].count_ones())
            .expect("alive is nonempty");
        let deg = adj[v].count_ones() as usize;
        best = best.max(deg);
        alive &= !(1 << v);
        if deg == 0 {
            continue;
        }
        let u = bits(adj[v])
            .min_by_key(|&u| adj[u].count_ones())
            .expect("v has a neighbour");
        let merged = (adj[u] | adj[v]) & alive & !(1 << u);
        for w in bits(adj[v]) {
            adj[w] &= !(1 << v);
        }
        adj[u] = merged;
        for w in bits(merged) {
            adj[w] |= 1 << u;
        }
        adj[v] = 0;
    }
    best
}

/// Greedy min-fill elimination; returns its width and ordering.
fn min_fill_ordering(adj: &[u64]) -> (usize, Vec<usize>) {
    let mut adj = adj.to_vec();
    let mut alive = full_mask(adj.len());
    let mut order = Vec::with_capacity(adj.len());
    let mut width = 0;
    while alive != 0 {
        let v = bits(alive)
            .min_by_key(|&v| (fill_in(&adj, adj[v]), adj[v].count_ones(), v))
            .expect("alive is nonempty");
        let nb = adj[v];
        width = width.max(nb.count_ones() as usize);
        for w in bits(nb) {
            adj[w] = (adj[w] | nb) & !(1 << w) & !(1 << v);
        }
        adj[v] = 0;
        alive &= !(1 << v);
        order.push(v);
    }
    (width, order)
}

fn fill_in(adj: &[u64], nb: u64) -> u32 {
    let missing: u32 = bits(nb)
        .map(|x| (nb & !(1 << x) & !adj[x]).count_ones())
        .sum();
    missing / 2
}

fn full_mask(c: usize) -> u64 {
    if c == 64 {
        u64::MAX
    } else {
        (1u64 << c) - 1
    }
}

pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, complete_bipartite, cycle, path, star, wall};
    use crate::transform::subdivide_once;
    use crate::treewidth::decomposition::validate_decomposition;

    fn tw(g: &Graph) -> i64 {
        let (w, td) = exact_treewidth(g).unwrap();
        assert!(validate_decomposition(g, &td).is_empty(), "{g:?}");
        assert_eq!(td.width(), w);
        w
    }

    #[test]
    fn complete_graphs() {
        for n in 1..=8 {
            assert_eq!(tw(&complete(n)), n as i64 - 1);
        }
    }

    #[test]
    fn empty_and_trivial() {
        assert_eq!(tw(&Graph::empty(0)), -1);
        assert_eq!(tw(&Graph::empty(1)), 0);
        assert_eq!(tw(&Graph::empty(5)), 0);
        assert_eq!(tw(&path(7)), 1);
        assert_eq!(tw(&star(6)), 1);
    }

    #[test]
    fn cycles_and_bipartite() {
        for n in 3..=10 {
            assert_eq!(tw(&cycle(n)), 2);
        }
        assert_eq!(tw(&complete_bipartite(3, 3)), 3);
        assert_eq!(tw(&complete_bipartite(2, 5)), 2);
    }

    #[test]
    fn disconnected_graph_takes_max() {
        let g = complete(4)
            .disjoint_union(&cycle(6))
            .disjoint_union(&path(3));
        assert_eq!(tw(&g), 3);
    }

    #[test]
    fn walls_and_subdivisions() {
        assert!(tw(&wall(1).unwrap()) >= 1);
        assert!(tw(&wall(2).unwrap()) >= 2);
        assert!(tw(&wall(3).unwrap()) >= 3);
        assert_eq!(tw(&subdivide_once(&complete_bipartite(2, 2))), 2);
        assert_eq!(tw(&subdivide_once(&complete(6))), 5);
    }

    #[test]
    fn too_large_is_an_error() {
        assert!(matches!(
            exact_treewidth(&Graph::empty(65)),
            Err(Error::ResourceLimit { .. })
        ));
    }

    #[test]
    fn state_budget_is_enforced() {
        // K_{5,5} minus a perfect matching: lower bound below the answer, so
        // the search has to run
        let g = Graph::new(
            10,
            (0..5).flat_map(|u| (5..10).filter(move |&v| v != u + 5).map(move |v| (u, v))),
        )
        .unwrap();
        let tight = TreewidthLimits { max_states: 1 };
        match exact_treewidth_with(&g, tight) {
            Err(Error::ResourceLimit { .. }) => {}
            Ok((w, _)) => assert_eq!(w, tw(&g)),
            Err(e) => panic!("{e}"),
        }
    }

    #[test]
    fn ordering_rejects_bad_input() {
        assert!(decomposition_from_ordering(&path(3), &[0, 1]).is_err());
        assert!(decomposition_from_ordering(&path(3), &[0, 1, 1]).is_err());
        assert_eq!(ordering_width(&path(3), &[1, 0, 2]).unwrap(), 2);
        assert_eq!(ordering_width(&path(3), &[0, 1, 2]).unwrap(), 1);
    }
}
