use std::fmt;
use std::ops::Deref;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::io::graph6;

/// Branch sets realising `pattern` inside `host`.
///
/// `branch_sets()[v]` is the host vertex set `X_v` of pattern vertex `v`.
/// Construction only checks shape (one set per pattern vertex, host vertices in
/// range); whether the sets actually form a model is answered by
/// [`validate_model`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorModel {
    pattern: Graph,
    host: Graph,
    branch_sets: Vec<Vec<usize>>,
}

impl MinorModel {
    pub fn new(pattern: Graph, host: Graph, branch_sets: Vec<Vec<usize>>) -> Result<Self> {
        if branch_sets.len() != pattern.n() {
            return Err(Error::InvalidArgument(format!(
                "pattern has {} vertices but {} branch sets were given",
                pattern.n(),
                branch_sets.len()
            )));
        }
        let mut sets = Vec::with_capacity(branch_sets.len());
        for (v, mut set) in branch_sets.into_iter().enumerate() {
            if let Some(&x) = set.iter().find(|&&x| x >= host.n()) {
                return Err(Error::InvalidArgument(format!(
                    "branch set {v} names host vertex {x}, host has {} vertices",
                    host.n()
                )));
            }
            set.sort_unstable();
            set.dedup();
            sets.push(set);
        }
        Ok(MinorModel {
            pattern,
            host,
            branch_sets: sets,
        })
    }

    /// The empty model of the empty graph.
    pub fn empty(host: Graph) -> Self {
        MinorModel {
            pattern: Graph::empty(0),
            host,
            branch_sets: Vec::new(),
        }
    }

    pub fn pattern(&self) -> &Graph {
        &self.pattern
    }

    pub fn host(&self) -> &Graph {
        &self.host
    }

    pub fn branch_sets(&self) -> &[Vec<usize>] {
        &self.branch_sets
    }

    pub fn branch_set(&self, v: usize) -> &[usize] {
        &self.branch_sets[v]
    }

    /// All host vertices used by some branch set, sorted.
    pub fn covered_vertices(&self) -> Vec<usize> {
        let mut all: Vec<usize> = self.branch_sets.iter().flatten().copied().collect();
        all.sort_unstable();
        all
    }

    /// Same branch sets, read as a model of a different pattern on the same
    /// vertex set (for instance a spanning subgraph of the current one).
    pub fn with_pattern(&self, pattern: Graph) -> Result<MinorModel> {
        MinorModel::new(pattern, self.host.clone(), self.branch_sets.clone())
    }

    pub fn validate(&self, induced: bool) -> Vec<ModelViolation> {
        validate_model(self, induced)
    }

    pub fn is_valid(&self, induced: bool) -> bool {
        self.validate(induced).is_empty()
    }

    /// Text form: `host <graph6>`, `pattern <graph6>`, then one line
    /// `v: x1 x2 ...` per pattern vertex.
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "host {}\npattern {}\n",
            graph6::encode(&self.host),
            graph6::encode(&self.pattern)
        );
        for (v, set) in self.branch_sets.iter().enumerate() {
            out.push_str(&format!("{v}:"));
            for x in set {
                out.push_str(&format!(" {x}"));
            }
            out.push('\n');
        }
        out
    }

    pub fn from_text(text: &str) -> Result<MinorModel> {
        let mut host = None;
        let mut pattern = None;
        let mut sets: Vec<Option<Vec<usize>>> = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let lineno = i + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if let Some(rest) = line.strip_prefix("host ") {
                host = Some(graph6::decode(rest)?);
                continue;
            }
            if let Some(rest) = line.strip_prefix("pattern ") {
                let p = graph6::decode(rest)?;
                sets = vec![None; p.n()];
                pattern = Some(p);
                continue;
            }
            let (head, tail) = line
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("line {lineno}: expected `v: x1 x2 ...`")))?;
            let parse = |s: &str| {
                s.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("line {lineno}: bad integer `{s}`")))
            };
            let v = parse(head)?;
            if pattern.is_none() {
                return Err(Error::Parse(format!(
                    "line {lineno}: branch set before `pattern` header"
                )));
            }
            let slot = sets.get_mut(v).ok_or_else(|| {
                Error::Parse(format!("line {lineno}: pattern vertex {v} out of range"))
            })?;
            if slot.is_some() {
                return Err(Error::Parse(format!(
                    "line {lineno}: branch set {v} given twice"
                )));
            }
            *slot = Some(tail.split_whitespace().map(parse).collect::<Result<_>>()?);
        }
        let host = host.ok_or_else(|| Error::Parse("missing `host` line".into()))?;
        let pattern = pattern.ok_or_else(|| Error::Parse("missing `pattern` line".into()))?;
        let sets = sets
            .into_iter()
            .enumerate()
            .map(|(v, s)| s.ok_or_else(|| Error::Parse(format!("branch set {v} missing"))))
            .collect::<Result<Vec<_>>>()?;
        MinorModel::new(pattern, host, sets).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// A minor model that has been checked to satisfy the induced constraint:
/// pattern non-edges have no host edges between their branch sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedMinorModel(MinorModel);

impl InducedMinorModel {
    pub fn new(model: MinorModel) -> Result<Self> {
        let violations = validate_model(&model, true);
        if violations.is_empty() {
            Ok(InducedMinorModel(model))
        } else {
            Err(Error::ContractViolation(format!(
                "not an induced minor model: {}",
                violations
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join("; ")
            )))
        }
    }

    pub fn into_inner(self) -> MinorModel {
        self.0
    }
}

impl Deref for InducedMinorModel {
    type Target = MinorModel;

    fn deref(&self) -> &MinorModel {
        &self.0
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModelViolation {
    EmptyBranchSet {
        v: usize,
    },
    /// Host vertex `x` lies in the branch sets of both `u` and `v`.
    Overlap {
        u: usize,
        v: usize,
        x: usize,
    },
    DisconnectedBranchSet {
        v: usize,
    },
    /// Pattern edge `uv` has no host edge between `X_u` and `X_v`.
    MissingEdge {
        u: usize,
        v: usize,
    },
    /// Pattern non-edge `uv` has a host edge between `X_u` and `X_v`.
    ExtraEdge {
        u: usize,
        v: usize,
    },
}

impl fmt::Display for ModelViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModelViolation::EmptyBranchSet { v } => write!(f, "branch set {v} is empty"),
            ModelViolation::Overlap { u, v, x } => {
                write!(f, "branch sets {u} and {v} share host vertex {x}")
            }
            ModelViolation::DisconnectedBranchSet { v } => {
                write!(f, "branch set {v} is not connected")
            }
            ModelViolation::MissingEdge { u, v } => {
                write!(
                    f,
                    "pattern edge {{{u},{v}}} has no host edge between its branch sets"
                )
            }
            ModelViolation::ExtraEdge { u, v } => write!(
                f,
                "pattern non-edge {{{u},{v}}} has a host edge between its branch sets"
            ),
        }
    }
}

/// Lists every way `m` fails to be a minor model (or, with `induced`, an
/// induced minor model). Empty means valid.
pub fn validate_model(m: &MinorModel, induced: bool) -> Vec<ModelViolation> {
    let mut out = Vec::new();
    let host = &m.host;
    let mut owner = vec![usize::MAX; host.n()];
    for (v, set) in m.branch_sets.iter().enumerate() {
        if set.is_empty() {
            out.push(ModelViolation::EmptyBranchSet { v });
            continue;
        }
        for &x in set {
            if owner[x] != usize::MAX {
                out.push(ModelViolation::Overlap { u: owner[x], v, x });
            } else {
                owner[x] = v;
            }
        }
        if !host.is_connected_subset(set) {
            out.push(ModelViolation::DisconnectedBranchSet { v });
        }
    }
    // which pairs of branch sets touch, computed once from host edges
    let h = m.pattern.n();
    let mut touching = std::collections::BTreeSet::new();
    for (v, set) in m.branch_sets.iter().enumerate() {
        for &x in set {
            for &y in host.neighbors(x) {
                let u = owner[y];
                if u != usize::MAX && u != v {
                    touching.insert((u.min(v), u.max(v)));
                }
            }
        }
    }
    for &(u, v) in m.pattern.edges() {
        if !m.branch_sets[u].is_empty()
            && !m.branch_sets[v].is_empty()
            && !touching.contains(&(u, v))
        {
            out.push(ModelViolation::MissingEdge { u, v });
        }
    }
    if induced {
        for &(u, v) in &touching {
            if u < h && v < h && !m.pattern.has_edge(u, v) {
                out.push(ModelViolation::ExtraEdge { u, v });
            }
        }
    }
    out
}
