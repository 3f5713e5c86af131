//! Simple undirected graphs over the vertex set `0..n`.
//!
//! A [`Graph`] is immutable once built. Edges are stored once as `(u, v)` with
//! `u < v`, sorted lexicographically; that order is the canonical edge order used
//! by [`subdivide_once`](crate::transform::subdivide_once) and
//! [`line_graph`](crate::transform::line_graph) when they assign labels to new
//! vertices.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{check_cap, Error, Result};

/// Largest vertex count handled by the bitset-backed algorithms.
pub const BITSET_CAP: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an edge list. Pairs are unordered and duplicates
    /// collapse; loops and out-of-range endpoints are rejected.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut norm = Vec::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::InvalidArgument(format!("loop at vertex {u}")));
            }
            if u >= n || v >= n {
                return Err(Error::InvalidArgument(format!(
                    "edge ({u}, {v}) has an endpoint outside 0..{n}"
                )));
            }
            norm.push((u.min(v), u.max(v)));
        }
        Ok(Self::from_normalized(n, norm))
    }

    pub(crate) fn from_normalized(n: usize, mut edges: Vec<(usize, usize)>) -> Self {
        edges.sort_unstable();
        edges.dedup();
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Edges in canonical order: `u < v`, sorted lexicographically.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Index of edge `{u, v}` in [`Graph::edges`].
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    pub fn is_complete(&self) -> bool {
        self.m() == self.n * self.n.saturating_sub(1) / 2
    }

    pub fn is_subcubic(&self) -> bool {
        self.max_degree() <= 3
    }

    pub fn complement(&self) -> Graph {
        let mut edges = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_normalized(self.n, edges)
    }

    /// `G[S]`, relabelled so that the i-th smallest vertex of `S` becomes `i`.
    /// Returns the subgraph and the sorted vertex list used for relabelling.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> (Graph, Vec<usize>) {
        let mut keep = vertices.to_vec();
        keep.sort_unstable();
        keep.dedup();
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|&(u, v)| (index[u], index[v]))
            .collect();
        (Graph::from_normalized(keep.len(), edges), keep)
    }

    /// Graph with the same vertex set and only the given subset of edges.
    pub fn spanning_subgraph<I>(&self, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut kept = Vec::new();
        for (u, v) in edges {
            if !self.has_edge(u, v) {
                return Err(Error::InvalidArgument(format!(
                    "({u}, {v}) is not an edge of the graph"
                )));
            }
            kept.push((u.min(v), u.max(v)));
        }
        Ok(Graph::from_normalized(self.n, kept))
    }

    /// Contracts edge `uv`: `v` is merged into `u`, then removed, and every
    /// vertex above `v` shifts down by one.
    pub fn contract_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if !self.has_edge(u, v) {
            return Err(Error::InvalidArgument(format!("({u}, {v}) is not an edge")));
        }
        let relabel = |x: usize| -> usize {
            let x = if x == v { u } else { x };
            if x > v {
                x - 1
            } else {
                x
            }
        };
        let edges = self
            .edges
            .iter()
            .filter(|&&e| e != (u.min(v), u.max(v)))
            .map(|&(a, b)| (relabel(a), relabel(b)))
            .filter(|(a, b)| a != b)
            .map(|(a, b)| (a.min(b), a.max(b)))
            .collect();
        Ok(Graph::from_normalized(self.n - 1, edges))
    }

    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)))
            .collect();
        Graph::from_normalized(self.n + other.n, edges)
    }

    /// `N(S)`: vertices outside `S` with a neighbour in `S`, sorted.
    pub fn open_neighborhood(&self, set: &[usize]) -> Vec<usize> {
        let mut inside = vec![false; self.n];
        for &v in set {
            inside[v] = true;
        }
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for &v in set {
            for &w in &self.adj[v] {
                if !inside[w] && !seen[w] {
                    seen[w] = true;
                    out.push(w);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Whether `G[S]` is connected. The empty set counts as disconnected.
    pub fn is_connected_subset(&self, set: &[usize]) -> bool {
        let Some(&start) = set.first() else {
            return false;
        };
        let mut inside = vec![false; self.n];
        for &v in set {
            inside[v] = true;
        }
        let mut seen = vec![false; self.n];
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for &w in &self.adj[v] {
                if inside[w] && !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        let distinct = {
            let mut s = set.to_vec();
            s.sort_unstable();
            s.dedup();
            s.len()
        };
        count == distinct
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || connected_components(self).len() == 1
    }

    /// Whether some edge joins a vertex of `a` to a vertex of `b`.
    pub fn sets_adjacent(&self, a: &[usize], b: &[usize]) -> bool {
        let mut in_b = vec![false; self.n];
        for &v in b {
            in_b[v] = true;
        }
        a.iter().any(|&v| self.adj[v].iter().any(|&w| in_b[w]))
    }

    /// Adjacency rows as bitmasks. Only available for `n <= 64`.
    pub fn adjacency_masks(&self) -> Result<Vec<u64>> {
        check_cap("vertex count for bitset algorithms", BITSET_CAP, self.n)?;
        Ok(self
            .adj
            .iter()
            .map(|list| list.iter().fold(0u64, |acc, &w| acc | (1u64 << w)))
            .collect())
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

/// Maximal connected vertex sets, each sorted, ordered by smallest vertex.
pub fn connected_components(g: &Graph) -> Vec<Vec<usize>> {
    let mut comp = vec![usize::MAX; g.n()];
    let mut out: Vec<Vec<usize>> = Vec::new();
    for s in 0..g.n() {
        if comp[s] != usize::MAX {
            continue;
        }
        let id = out.len();
        comp[s] = id;
        let mut members = vec![s];
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbors(v) {
                if comp[w] == usize::MAX {
                    comp[w] = id;
                    members.push(w);
                    queue.push_back(w);
                }
            }
        }
        members.sort_unstable();
        out.push(members);
    }
    out
}

/// True iff no vertex has three pairwise non-adjacent neighbours.
pub fn is_claw_free(g: &Graph) -> bool {
    find_claw(g).is_none()
}

/// An induced claw as `(center, [leaves])`, if one exists.
pub fn find_claw(g: &Graph) -> Option<(usize, [usize; 3])> {
    for v in 0..g.n() {
        let nb = g.neighbors(v);
        for (i, &a) in nb.iter().enumerate() {
            for (j, &b) in nb.iter().enumerate().skip(i + 1) {
                if g.has_edge(a, b) {
                    continue;
                }
                for &c in &nb[j + 1..] {
                    if !g.has_edge(a, c) && !g.has_edge(b, c) {
                        return Some((v, [a, b, c]));
                    }
                }
            }
        }
    }
    None
}
