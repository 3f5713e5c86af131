use crate::graph::Graph;

/// `S(G)`: every edge gets its own midpoint.
///
/// Original vertices keep their labels. The midpoint of the i-th edge in
/// canonical order is vertex `n + i`.
pub fn subdivide_once(g: &Graph) -> Graph {
    let n = g.n();
    let edges = g
        .edges()
        .iter()
        .enumerate()
        .flat_map(|(i, &(u, v))| [(u, n + i), (v, n + i)])
        .collect();
    Graph::from_normalized(n + g.m(), edges)
}

/// A line graph together with the edge each of its vertices stands for.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineGraph {
    pub graph: Graph,
    /// `edge_of[x]` is the edge of the source graph represented by vertex `x`;
    /// it matches the source's canonical edge order.
    pub edge_of: Vec<(usize, usize)>,
}

/// `L(G)`: one vertex per edge, adjacent when the edges share an endpoint.
pub fn line_graph(g: &Graph) -> LineGraph {
    let mut edges = Vec::new();
    for v in 0..g.n() {
        let incident: Vec<usize> = g
            .neighbors(v)
            .iter()
            .map(|&w| g.edge_index(v, w).expect("neighbor implies edge"))
            .collect();
        for (i, &a) in incident.iter().enumerate() {
            for &b in &incident[i + 1..] {
                edges.push((a.min(b), a.max(b)));
            }
        }
    }
    LineGraph {
        graph: Graph::from_normalized(g.m(), edges),
        edge_of: g.edges().to_vec(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, complete_bipartite, path};

    #[test]
    fn subdivide_edgeless_is_identity() {
        assert_eq!(subdivide_once(&Graph::empty(5)), Graph::empty(5));
    }

    #[test]
    fn subdivide_k2_is_p3() {
        let s = subdivide_once(&complete(2));
        assert_eq!(s.n(), 3);
        assert_eq!(s.edges(), &[(0, 2), (1, 2)]);
    }

    #[test]
    fn subdivide_counts() {
        let g = complete_bipartite(2, 2);
        let s = subdivide_once(&g);
        assert_eq!((s.n(), s.m()), (8, 8));
        // midpoints are degree 2, originals keep their degree
        assert!((4..8).all(|w| s.degree(w) == 2));
        assert!((0..4).all(|v| s.degree(v) == g.degree(v)));
    }

    #[test]
    fn small_line_graphs() {
        assert_eq!(line_graph(&path(3)).graph, complete(2));
        assert_eq!(line_graph(&complete(3)).graph, complete(3));
        let claw = line_graph(&complete_bipartite(1, 3));
        assert_eq!(claw.graph, complete(3));
        assert_eq!(claw.edge_of, vec![(0, 1), (0, 2), (0, 3)]);
    }
}
