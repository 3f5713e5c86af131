//! Exact maximum clique by branch and bound with a greedy-colouring bound.

use crate::error::Result;
use crate::graph::Graph;

/// ω(G). The empty graph has clique number 0. Requires `n <= 64`.
pub fn clique_number(g: &Graph) -> Result<usize> {
    Ok(maximum_clique(g)?.len())
}

/// α(G), computed as ω of the complement.
pub fn independence_number(g: &Graph) -> Result<usize> {
    clique_number(&g.complement())
}

/// A largest clique, as a sorted vertex list.
pub fn maximum_clique(g: &Graph) -> Result<Vec<usize>> {
    let adj = g.adjacency_masks()?;
    let all = if g.n() == 64 {
        u64::MAX
    } else {
        (1u64 << g.n()) - 1
    };
    let mut search = Search { adj: &adj, best: 0 };
    search.expand(all, 0);
    let mut out: Vec<usize> = (0..64).filter(|&v| search.best >> v & 1 == 1).collect();
    out.sort_unstable();
    Ok(out)
}

/// ω of the subgraph induced by `set` (a bitmask) given adjacency rows.
pub(crate) fn clique_number_masked(adj: &[u64], set: u64) -> usize {
    let mut search = Search { adj, best: 0 };
    search.expand(set, 0);
    search.best.count_ones() as usize
}

struct Search<'a> {
    adj: &'a [u64],
    best: u64,
}

impl Search<'_> {
    fn expand(&mut self, candidates: u64, chosen: u64) {
        if candidates == 0 {
            if chosen.count_ones() > self.best.count_ones() {
                self.best = chosen;
            }
            return;
        }
        let (order, colors) = self.color(candidates);
        let mut remaining = candidates;
        for i in (0..order.len()).rev() {
            if chosen.count_ones() as usize + colors[i] <= self.best.count_ones() as usize {
                return;
            }
            let v = order[i];
            self.expand(remaining & self.adj[v], chosen | 1 << v);
            remaining &= !(1u64 << v);
        }
    }

    /// Greedy sequential colouring. Returns vertices in colour order with the
    /// colour (1-based) of each; colour classes are independent sets, so a
    /// clique uses at most one vertex per class.
    fn color(&self, candidates: u64) -> (Vec<usize>, Vec<usize>) {
        let mut order = Vec::with_capacity(candidates.count_ones() as usize);
        let mut colors = Vec::with_capacity(order.capacity());
        let mut uncolored = candidates;
        let mut color = 0;
        while uncolored != 0 {
            color += 1;
            let mut q = uncolored;
            while q != 0 {
                let v = q.trailing_zeros() as usize;
                q &= !(1u64 << v) & !self.adj[v];
                uncolored &= !(1u64 << v);
                order.push(v);
                colors.push(color);
            }
        }
        (order, colors)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, complete_bipartite, cycle};
    use crate::graph::Graph;

    fn brute_force_omega(g: &Graph) -> usize {
        let n = g.n();
        (0u32..1 << n)
            .filter(|&s| {
                (0..n).all(|u| {
                    (u + 1..n).all(|v| s >> u & 1 == 0 || s >> v & 1 == 0 || g.has_edge(u, v))
                })
            })
            .map(|s| s.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    #[test]
    fn fixed_values() {
        assert_eq!(clique_number(&complete(5)).unwrap(), 5);
        assert_eq!(clique_number(&complete_bipartite(3, 3)).unwrap(), 2);
        assert_eq!(clique_number(&Graph::empty(4)).unwrap(), 1);
        assert_eq!(clique_number(&Graph::empty(0)).unwrap(), 0);
        assert_eq!(independence_number(&cycle(5)).unwrap(), 2);
        assert_eq!(independence_number(&Graph::empty(4)).unwrap(), 4);
    }

    #[test]
    fn returned_clique_is_a_clique() {
        let g = complete(4).disjoint_union(&cycle(5));
        let k = maximum_clique(&g).unwrap();
        assert_eq!(k, vec![0, 1, 2, 3]);
    }

    #[test]
    fn over_cap_is_an_error() {
        assert!(clique_number(&Graph::empty(65)).is_err());
        assert_eq!(clique_number(&complete(64)).unwrap(), 64);
    }

    #[test]
    fn matches_brute_force_on_small_graphs() {
        // all graphs on 5 vertices
        let pairs: Vec<(usize, usize)> = (0..5)
            .flat_map(|u| (u + 1..5).map(move |v| (u, v)))
            .collect();
        for mask in 0u32..1 << pairs.len() {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e);
            let g = Graph::new(5, edges).unwrap();
            assert_eq!(clique_number(&g).unwrap(), brute_force_omega(&g), "{g:?}");
        }
    }
}
