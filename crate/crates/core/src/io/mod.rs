//! Graph interchange formats.

pub mod dot;
pub mod edgelist;
pub mod graph6;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Graph6,
    EdgeList,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "graph6" | "g6" => Ok(Format::Graph6),
            "edgelist" => Ok(Format::EdgeList),
            other => Err(Error::InvalidArgument(format!(
                "unknown graph format `{other}`"
            ))),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Graph6 => "graph6",
            Format::EdgeList => "edgelist",
        })
    }
}

/// Guesses the format from the first meaningful line: two integers means an
/// edge list, anything else is treated as graph6.
pub fn detect(text: &str) -> Format {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'));
    match first {
        Some(line) => {
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() == 2 && fields.iter().all(|f| f.parse::<usize>().is_ok()) {
                Format::EdgeList
            } else {
                Format::Graph6
            }
        }
        None => Format::Graph6,
    }
}

pub fn read_graph(text: &str, format: Option<Format>) -> Result<Graph> {
    match format.unwrap_or_else(|| detect(text)) {
        Format::Graph6 => {
            let line = text
                .lines()
                .map(str::trim)
                .find(|l| !l.is_empty())
                .ok_or_else(|| Error::Parse("no graph6 line found".into()))?;
            graph6::decode(line)
        }
        Format::EdgeList => edgelist::decode(text),
    }
}

pub fn write_graph(g: &Graph, format: Format) -> String {
    match format {
        Format::Graph6 => graph6::encode(g) + "\n",
        Format::EdgeList => edgelist::encode(g),
    }
}
