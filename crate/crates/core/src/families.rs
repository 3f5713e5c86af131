//! Constructors for the named graph families.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn complete(n: usize) -> Graph {
    let edges = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    Graph::from_normalized(n, edges)
}

/// `K_{m,n}`: vertices `0..m` form one part and `m..m+n` the other.
pub fn complete_bipartite(m: usize, n: usize) -> Graph {
    let edges = (0..m)
        .flat_map(|u| (m..m + n).map(move |v| (u, v)))
        .collect();
    Graph::from_normalized(m + n, edges)
}

pub fn path(n: usize) -> Graph {
    let edges = (1..n).map(|v| (v - 1, v)).collect();
    Graph::from_normalized(n, edges)
}

/// The cycle `C_n`. Needs `n >= 3`.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "a simple cycle needs at least 3 vertices");
    let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    edges.push((0, n - 1));
    Graph::from_normalized(n, edges)
}

pub fn star(leaves: usize) -> Graph {
    complete_bipartite(1, leaves)
}

/// The k×k wall.
///
/// Start from the grid with `k + 1` rows and `2k + 2` columns, keep every
/// horizontal edge, keep the vertical edge between `(r, c)` and `(r + 1, c)`
/// only when `r + c` is even, then strip degree-1 vertices until none remain.
/// Surviving vertices are numbered in row-major order.
pub fn wall(k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(Error::InvalidArgument(
            "wall size must be at least 1".into(),
        ));
    }
    let rows = k + 1;
    let cols = 2 * k + 2;
    let id = |r: usize, c: usize| r * cols + c;
    let mut edges = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            if c + 1 < cols {
                edges.push((id(r, c), id(r, c + 1)));
            }
            if r + 1 < rows && (r + c) % 2 == 0 {
                edges.push((id(r, c), id(r + 1, c)));
            }
        }
    }
    let grid = Graph::from_normalized(rows * cols, edges);

    let mut alive = vec![true; grid.n()];
    loop {
        let pendant: Vec<usize> = (0..grid.n())
            .filter(|&v| alive[v] && grid.neighbors(v).iter().filter(|&&w| alive[w]).count() <= 1)
            .collect();
        if pendant.is_empty() {
            break;
        }
        for v in pendant {
            alive[v] = false;
        }
    }
    let keep: Vec<usize> = (0..grid.n()).filter(|&v| alive[v]).collect();
    Ok(grid.induced_subgraph(&keep).0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn claw_is_k13() {
        let claw = complete_bipartite(1, 3);
        assert_eq!(claw.n(), 4);
        assert_eq!(claw.m(), 3);
        assert_eq!(claw.degree(0), 3);
    }

    #[test]
    fn degenerate_bipartite() {
        let g = complete_bipartite(0, 0);
        assert_eq!(g.n(), 0);
        assert_eq!(complete_bipartite(0, 3).m(), 0);
    }

    #[test]
    fn k22_is_four_cycle() {
        let g = complete_bipartite(2, 2);
        assert_eq!(g.m(), 4);
        assert!((0..4).all(|v| g.degree(v) == 2));
        assert!(g.is_connected());
    }

    #[test]
    fn wall_shapes() {
        assert!(wall(0).is_err());
        let w1 = wall(1).unwrap();
        assert_eq!((w1.n(), w1.m()), (6, 6));
        let w2 = wall(2).unwrap();
        assert_eq!((w2.n(), w2.m()), (16, 19));
        let w3 = wall(3).unwrap();
        assert_eq!((w3.n(), w3.m()), (30, 38));
        for k in 1..=6 {
            let w = wall(k).unwrap();
            assert!(w.is_subcubic(), "wall({k}) not subcubic");
            assert!(w.is_connected());
            assert!((0..w.n()).all(|v| w.degree(v) >= 2));
        }
    }
}
