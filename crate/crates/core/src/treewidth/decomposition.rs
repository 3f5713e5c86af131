use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A rooted tree of bags. `parent[t]` is `None` exactly for the root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeDecomposition {
    bags: Vec<Vec<usize>>,
    parent: Vec<Option<usize>>,
}

impl TreeDecomposition {
    /// Bags are sorted and deduplicated; no other checking happens here, use
    /// [`validate_decomposition`] for that.
    pub fn new(bags: Vec<Vec<usize>>, parent: Vec<Option<usize>>) -> Result<Self> {
        if bags.len() != parent.len() {
            return Err(Error::InvalidArgument(format!(
                "{} bags but {} parent links",
                bags.len(),
                parent.len()
            )));
        }
        let bags = bags
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b.dedup();
                b
            })
            .collect();
        Ok(TreeDecomposition { bags, parent })
    }

    pub fn bags(&self) -> &[Vec<usize>] {
        &self.bags
    }

    pub fn parent(&self) -> &[Option<usize>] {
        &self.parent
    }

    pub fn len(&self) -> usize {
        self.bags.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bags.is_empty()
    }

    /// Largest bag size minus one; `-1` when every bag is empty.
    pub fn width(&self) -> i64 {
        self.bags.iter().map(|b| b.len() as i64).max().unwrap_or(0) - 1
    }

    /// Tree edges as `(child, parent)` pairs.
    pub fn tree_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parent
            .iter()
            .enumerate()
            .filter_map(|(t, p)| p.map(|p| (t, p)))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// The parent links do not describe a single rooted tree.
    NotATree {
        reason: String,
    },
    /// A bag names a vertex the graph does not have.
    UnknownVertex {
        node: usize,
        vertex: usize,
    },
    VertexUncovered {
        vertex: usize,
    },
    EdgeUncovered {
        u: usize,
        v: usize,
    },
    /// The nodes whose bags contain `vertex` do not form a subtree.
    Disconnected {
        vertex: usize,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NotATree { reason } => write!(f, "not a tree: {reason}"),
            Violation::UnknownVertex { node, vertex } => {
                write!(f, "bag {node} contains unknown vertex {vertex}")
            }
            Violation::VertexUncovered { vertex } => write!(f, "vertex {vertex} is in no bag"),
            Violation::EdgeUncovered { u, v } => write!(f, "edge {{{u},{v}}} is in no bag"),
            Violation::Disconnected { vertex } => {
                write!(f, "bags containing vertex {vertex} are not connected")
            }
        }
    }
}

/// Checks the three tree-decomposition conditions, plus the shape of the tree
/// itself. An empty list means `td` is a tree decomposition of `g`.
pub fn validate_decomposition(g: &Graph, td: &TreeDecomposition) -> Vec<Violation> {
    let mut out = Vec::new();
    if let Err(reason) = check_tree(td) {
        out.push(Violation::NotATree { reason });
        // coverage can still be reported, connectivity needs a tree
    }
    let tree_ok = out.is_empty();

    let n = g.n();
    let mut holders: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (t, bag) in td.bags.iter().enumerate() {
        for &v in bag {
            if v >= n {
                out.push(Violation::UnknownVertex { node: t, vertex: v });
            } else {
                holders[v].push(t);
            }
        }
    }
    for (v, h) in holders.iter().enumerate() {
        if h.is_empty() {
            out.push(Violation::VertexUncovered { vertex: v });
        }
    }
    for &(u, v) in g.edges() {
        let covered = holders[u]
            .iter()
            .any(|&t| td.bags[t].binary_search(&v).is_ok());
        if !covered {
            out.push(Violation::EdgeUncovered { u, v });
        }
    }
    if tree_ok {
        // a sub-forest of a tree is connected iff it has |nodes| - 1 edges
        for (v, h) in holders.iter().enumerate() {
            if h.len() <= 1 {
                continue;
            }
            let inner = h
                .iter()
                .filter(|&&t| td.parent[t].is_some_and(|p| td.bags[p].binary_search(&v).is_ok()))
                .count();
            if inner != h.len() - 1 {
                out.push(Violation::Disconnected { vertex: v });
            }
        }
    }
    out
}

fn check_tree(td: &TreeDecomposition) -> std::result::Result<(), String> {
    let k = td.bags.len();
    if k == 0 {
        return Err("no nodes".into());
    }
    let roots = td.parent.iter().filter(|p| p.is_none()).count();
    if roots != 1 {
        return Err(format!("{roots} roots"));
    }
    if let Some((t, p)) = td.tree_edges().find(|&(_, p)| p >= k) {
        return Err(format!("node {t} has out-of-range parent {p}"));
    }
    // every node must reach the root in fewer than k steps
    for start in 0..k {
        let mut t = start;
        let mut steps = 0;
        while let Some(p) = td.parent[t] {
            t = p;
            steps += 1;
            if steps > k {
                return Err(format!("parent links from node {start} cycle"));
            }
        }
    }
    Ok(())
}

/// PACE `.td` text: `s td <bags> <width+1> <n>`, then `b <id> <vertices>` and
/// tree edges, all 1-indexed.
pub fn to_pace(td: &TreeDecomposition, n: usize) -> String {
    let mut out = format!("s td {} {} {}\n", td.len(), td.width() + 1, n);
    for (t, bag) in td.bags.iter().enumerate() {
        out.push_str(&format!("b {}", t + 1));
        for &v in bag {
            out.push_str(&format!(" {}", v + 1));
        }
        out.push('\n');
    }
    for (c, p) in td.tree_edges() {
        out.push_str(&format!("{} {}\n", p + 1, c + 1));
    }
    out
}

/// Parses a PACE `.td` file. Returns the decomposition (rooted at the first
/// bag) and the vertex count announced in the header.
pub fn from_pace(text: &str) -> Result<(TreeDecomposition, usize)> {
    let mut header = None;
    let mut bags: Vec<Option<Vec<usize>>> = Vec::new();
    let mut edges = Vec::new();
    let num = |s: &str, lineno: usize| -> Result<usize> {
        s.parse::<usize>()
            .map_err(|_| Error::Parse(format!("line {lineno}: bad integer `{s}`")))
    };
    for (i, line) in text.lines().enumerate() {
        let lineno = i + 1;
        let fields: Vec<&str> = line.split_whitespace().collect();
        match fields.as_slice() {
            [] | ["c", ..] => {}
            ["s", "td", b, _, n] => {
                let (b, n) = (num(b, lineno)?, num(n, lineno)?);
                bags = vec![None; b];
                header = Some(n);
            }
            ["b", id, rest @ ..] => {
                let n = header.ok_or_else(|| Error::Parse("bag before header".into()))?;
                let id = num(id, lineno)?;
                if id == 0 || id > bags.len() {
                    return Err(Error::Parse(format!(
                        "line {lineno}: bag id {id} out of range"
                    )));
                }
                let mut bag = Vec::new();
                for s in rest {
                    let v = num(s, lineno)?;
                    if v == 0 || v > n {
                        return Err(Error::Parse(format!(
                            "line {lineno}: vertex {v} out of range"
                        )));
                    }
                    bag.push(v - 1);
                }
                bags[id - 1] = Some(bag);
            }
            [a, b] => {
                let (a, b) = (num(a, lineno)?, num(b, lineno)?);
                if a == 0 || b == 0 || a > bags.len() || b > bags.len() {
                    return Err(Error::Parse(format!(
                        "line {lineno}: tree edge out of range"
                    )));
                }
                edges.push((a - 1, b - 1));
            }
            _ => {
                return Err(Error::Parse(format!(
                    "line {lineno}: unrecognised `{line}`"
                )))
            }
        }
    }
    let n = header.ok_or_else(|| Error::Parse("missing `s td` header".into()))?;
    let bags: Vec<Vec<usize>> = bags
        .into_iter()
        .enumerate()
        .map(|(t, b)| b.ok_or_else(|| Error::Parse(format!("bag {} missing", t + 1))))
        .collect::<Result<_>>()?;
    let parent = orient(bags.len(), &edges)?;
    Ok((TreeDecomposition::new(bags, parent)?, n))
}

/// Roots an undirected edge list at node 0. Nodes unreachable from the root
/// keep `None`, which `validate_decomposition` reports as extra roots.
fn orient(k: usize, edges: &[(usize, usize)]) -> Result<Vec<Option<usize>>> {
    let mut adj = vec![Vec::new(); k];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut parent = vec![None; k];
    let mut seen = vec![false; k];
    if k > 0 {
        seen[0] = true;
        let mut stack = vec![0];
        while let Some(t) = stack.pop() {
            for &s in &adj[t] {
                if !seen[s] {
                    seen[s] = true;
                    parent[s] = Some(t);
                    stack.push(s);
                }
            }
        }
    }
    if edges.len() + 1 != k && k > 0 {
        return Err(Error::Parse(format!(
            "{} tree edges for {k} bags; a tree needs {}",
            edges.len(),
            k - 1
        )));
    }
    Ok(parent)
}
