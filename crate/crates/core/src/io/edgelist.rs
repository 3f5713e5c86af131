//! Plain edge-list text: a header line `n m`, then `m` lines `u v`, 0-indexed.
//! Blank lines and lines starting with `#` are ignored.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn encode(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn decode(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (lineno, header) = lines
        .next()
        .ok_or_else(|| Error::Parse("edge list is empty".into()))?;
    let (n, m) = parse_pair(header, lineno)?;
    let mut edges = Vec::with_capacity(m);
    for (lineno, line) in lines {
        edges.push(parse_pair(line, lineno)?);
    }
    if edges.len() != m {
        return Err(Error::Parse(format!(
            "header announces {m} edges, found {}",
            edges.len()
        )));
    }
    Graph::new(n, edges).map_err(|e| Error::Parse(e.to_string()))
}

fn parse_pair(line: &str, lineno: usize) -> Result<(usize, usize)> {
    let fields: Vec<&str> = line.split_whitespace().collect();
    let parse = |s: &str| {
        s.parse::<usize>().map_err(|_| {
            Error::Parse(format!(
                "line {lineno}: `{s}` is not a non-negative integer"
            ))
        })
    };
    match fields.as_slice() {
        [a, b] => Ok((parse(a)?, parse(b)?)),
        _ => Err(Error::Parse(format!(
            "line {lineno}: expected two integers, found `{line}`"
        ))),
    }
}
