//! Brute-force reference implementations. None of them calls into the
//! library's algorithms; they only read `Graph` adjacency.

#![allow(dead_code)]

use std::collections::BTreeSet;

use twbound::Graph;

fn adjacency(g: &Graph) -> Vec<BTreeSet<usize>> {
    (0..g.n())
        .map(|v| g.neighbors(v).iter().copied().collect())
        .collect()
}

/// Width of the elimination ordering `order`, by explicit fill-in.
pub fn elimination_width(g: &Graph, order: &[usize]) -> i64 {
    let mut adj = adjacency(g);
    let mut width = -1i64;
    for &v in order {
        let nb: Vec<usize> = adj[v].iter().copied().collect();
        width = width.max(nb.len() as i64);
        for &a in &nb {
            adj[a].remove(&v);
            for &b in &nb {
                if a != b {
                    adj[a].insert(b);
                }
            }
        }
        adj[v].clear();
    }
    width
}

/// Minimum elimination width over all `n!` orderings. The empty graph gives -1.
pub fn brute_force_treewidth(g: &Graph) -> i64 {
    let mut order: Vec<usize> = (0..g.n()).collect();
    let mut best = elimination_width(g, &order);
    // lexicographic next_permutation
    loop {
        let Some(i) = (1..order.len()).rev().find(|&i| order[i - 1] < order[i]) else {
            return best;
        };
        let j = (i..order.len())
            .rev()
            .find(|&j| order[j] > order[i - 1])
            .unwrap();
        order.swap(i - 1, j);
        order[i..].reverse();
        best = best.min(elimination_width(g, &order));
    }
}

/// Classic subset recurrence `TW(S) = min_v max(TW(S - v), |Q(S - v, v)|)`,
/// where `Q(S, v)` are the vertices outside `S ∪ {v}` reachable from `v`
/// through `S`. Exponential in `n`; meant for `n <= 16`.
pub fn subset_dp_treewidth(g: &Graph) -> i64 {
    let n = g.n();
    assert!(n <= 20);
    if n == 0 {
        return -1;
    }
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &u| m | 1 << u))
        .collect();
    let q = |s: u32, v: usize| -> u32 {
        let mut seen = 1u32 << v;
        let mut frontier = 1u32 << v;
        let mut out = 0u32;
        while frontier != 0 {
            let x = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let nb = adj[x] & !seen;
            seen |= nb;
            out |= nb & !s;
            frontier |= nb & s;
        }
        out.count_ones()
    };
    let full = (1u32 << n) - 1;
    let mut tw = vec![i64::MAX; 1 << n];
    tw[0] = -1;
    for s in 1..=full {
        let mut best = i64::MAX;
        let mut rest = s;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let without = s & !(1 << v);
            best = best.min(tw[without as usize].max(q(without, v) as i64));
        }
        tw[s as usize] = best;
    }
    tw[full as usize]
}

/// Series-parallel reduction: a graph has treewidth at most 2 iff deleting
/// vertices of degree at most 1 and suppressing vertices of degree 2 empties it.
pub fn treewidth_at_most_two(g: &Graph) -> bool {
    let mut adj = adjacency(g);
    let mut alive: BTreeSet<usize> = (0..g.n()).collect();
    loop {
        let Some(&v) = alive.iter().find(|&&v| adj[v].len() <= 2) else {
            return alive.is_empty();
        };
        let nb: Vec<usize> = adj[v].iter().copied().collect();
        for &a in &nb {
            adj[a].remove(&v);
        }
        if let [a, b] = nb[..] {
            adj[a].insert(b);
            adj[b].insert(a);
        }
        adj[v].clear();
        alive.remove(&v);
    }
}

pub fn is_clique(g: &Graph, set: &[usize]) -> bool {
    set.iter()
        .enumerate()
        .all(|(i, &a)| set[i + 1..].iter().all(|&b| g.has_edge(a, b)))
}

/// Largest clique inside `set`, by trying every subset.
pub fn brute_force_omega(g: &Graph, set: &[usize]) -> usize {
    (0u64..1 << set.len())
        .map(|m| {
            (0..set.len())
                .filter(|&i| m >> i & 1 == 1)
                .map(|i| set[i])
                .collect::<Vec<_>>()
        })
        .filter(|s| is_clique(g, s))
        .map(|s| s.len())
        .max()
        .unwrap_or(0)
}

pub fn is_connected_set(g: &Graph, set: &[usize]) -> bool {
    let Some(&start) = set.first() else {
        return false;
    };
    let mut seen = vec![start];
    let mut stack = vec![start];
    while let Some(x) = stack.pop() {
        for &y in g.neighbors(x) {
            if set.contains(&y) && !seen.contains(&y) {
                seen.push(y);
                stack.push(y);
            }
        }
    }
    seen.len() == set.len()
}

fn touches(g: &Graph, a: &[usize], b: &[usize]) -> bool {
    a.iter().any(|&x| b.iter().any(|&y| g.has_edge(x, y)))
}

/// Whether `pattern` is a (induced) minor of `host`, by trying every map from
/// host vertices to pattern vertices or "deleted".
pub fn brute_force_minor(host: &Graph, pattern: &Graph, induced: bool) -> bool {
    let (n, h) = (host.n(), pattern.n());
    if h == 0 {
        return true;
    }
    if h > n {
        return false;
    }
    let mut label = vec![0usize; n];
    loop {
        let mut sets = vec![Vec::new(); h];
        for (x, &l) in label.iter().enumerate() {
            if l > 0 {
                sets[l - 1].push(x);
            }
        }
        let ok = sets.iter().all(|s| is_connected_set(host, s))
            && (0..h).all(|u| {
                (u + 1..h).all(|v| {
                    let adjacent = touches(host, &sets[u], &sets[v]);
                    if pattern.has_edge(u, v) {
                        adjacent
                    } else {
                        !induced || !adjacent
                    }
                })
            });
        if ok {
            return true;
        }
        // odometer over {0..=h}^n
        let mut i = 0;
        loop {
            if i == n {
                return false;
            }
            label[i] += 1;
            if label[i] <= h {
                break;
            }
            label[i] = 0;
            i += 1;
        }
    }
}

/// All subsets of `c` that are connected and dominate every vertex of `i`.
pub fn connected_covers(g: &Graph, i: &[usize], c: &[usize]) -> Vec<Vec<usize>> {
    (1u64..1 << c.len())
        .map(|m| {
            (0..c.len())
                .filter(|&k| m >> k & 1 == 1)
                .map(|k| c[k])
                .collect::<Vec<_>>()
        })
        .filter(|s| is_connected_set(g, s))
        .filter(|s| i.iter().all(|&x| s.iter().any(|&y| g.has_edge(x, y))))
        .collect()
}

/// The inclusion-minimal members of `sets`.
pub fn inclusion_minimal(sets: &[Vec<usize>]) -> Vec<Vec<usize>> {
    sets.iter()
        .filter(|s| {
            !sets
                .iter()
                .any(|t| t.len() < s.len() && t.iter().all(|x| s.contains(x)))
        })
        .cloned()
        .collect()
}

/// Sample graphs on at most eight vertices, built directly from edge lists.
pub fn sample_graphs() -> Vec<(&'static str, Graph)> {
    let g = |n: usize, e: &[(usize, usize)]| Graph::new(n, e.iter().copied()).unwrap();
    let cycle = |n: usize| -> Vec<(usize, usize)> { (0..n).map(|i| (i, (i + 1) % n)).collect() };
    let complete = |n: usize| -> Vec<(usize, usize)> {
        (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect()
    };
    let mut wheel = cycle(6)
        .into_iter()
        .map(|(a, b)| (a + 1, b + 1))
        .collect::<Vec<_>>();
    wheel.extend((1..=6).map(|v| (0, v)));
    vec![
        ("edgeless-3", g(3, &[])),
        ("path-6", g(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)])),
        ("cycle-7", g(7, &cycle(7))),
        ("complete-5", g(5, &complete(5))),
        ("complete-8", g(8, &complete(8))),
        (
            "k33",
            g(
                6,
                &[
                    (0, 3),
                    (0, 4),
                    (0, 5),
                    (1, 3),
                    (1, 4),
                    (1, 5),
                    (2, 3),
                    (2, 4),
                    (2, 5),
                ],
            ),
        ),
        (
            "star-6",
            g(7, &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (0, 6)]),
        ),
        ("wheel-7", g(7, &wheel)),
        (
            "cube",
            g(
                8,
                &[
                    (0, 1),
                    (1, 3),
                    (3, 2),
                    (2, 0),
                    (4, 5),
                    (5, 7),
                    (7, 6),
                    (6, 4),
                    (0, 4),
                    (1, 5),
                    (2, 6),
                    (3, 7),
                ],
            ),
        ),
        (
            "prism",
            g(
                6,
                &[
                    (0, 1),
                    (1, 2),
                    (2, 0),
                    (3, 4),
                    (4, 5),
                    (5, 3),
                    (0, 3),
                    (1, 4),
                    (2, 5),
                ],
            ),
        ),
        (
            "grid-2x4",
            g(
                8,
                &[
                    (0, 1),
                    (1, 2),
                    (2, 3),
                    (4, 5),
                    (5, 6),
                    (6, 7),
                    (0, 4),
                    (1, 5),
                    (2, 6),
                    (3, 7),
                ],
            ),
        ),
    ]
}
