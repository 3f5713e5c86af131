use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;

use crate::clique::clique_number_masked;
use crate::error::{check_cap, Result};
use crate::graph::Graph;
use crate::treewidth::treewidth;

use super::poly::Polynomial;

/// Largest graph whose induced subgraphs are enumerated exhaustively.
pub const PROFILE_CAP: usize = 12;

/// The `(ω, tw)` pairs realised by induced subgraphs, and the largest
/// treewidth seen for each clique number.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BindingProfile {
    points: BTreeSet<(usize, i64)>,
    envelope: BTreeMap<usize, i64>,
}

impl BindingProfile {
    pub fn from_points<I: IntoIterator<Item = (usize, i64)>>(points: I) -> Self {
        let points: BTreeSet<(usize, i64)> = points.into_iter().collect();
        let mut envelope = BTreeMap::new();
        for &(omega, tw) in &points {
            envelope
                .entry(omega)
                .and_modify(|best: &mut i64| *best = (*best).max(tw))
                .or_insert(tw);
        }
        BindingProfile { points, envelope }
    }

    pub fn points(&self) -> &BTreeSet<(usize, i64)> {
        &self.points
    }

    pub fn envelope(&self) -> &BTreeMap<usize, i64> {
        &self.envelope
    }

    /// `omega,treewidth` header and one row per envelope entry.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("omega,treewidth\n");
        for (omega, tw) in &self.envelope {
            out.push_str(&format!("{omega},{tw}\n"));
        }
        out
    }
}

/// Computes `(ω(G[S]), tw(G[S]))` for all `2^n` vertex subsets `S`, including
/// the empty one, which contributes `(0, -1)`.
pub fn empirical_binding_profile(g: &Graph) -> Result<BindingProfile> {
    check_cap("vertex count for binding profile", PROFILE_CAP, g.n())?;
    let adj = g.adjacency_masks()?;
    let n = g.n();
    let measured: Vec<(usize, i64)> = (0u64..1 << n)
        .into_par_iter()
        .map(|mask| {
            let members: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            let (sub, _) = g.induced_subgraph(&members);
            Ok((clique_number_masked(&adj, mask), treewidth(&sub)?))
        })
        .collect::<Result<_>>()?;
    Ok(BindingProfile::from_points(measured))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProfileViolation {
    pub omega: usize,
    pub treewidth: i64,
    pub bound: i128,
}

/// Every observed point with `tw > f(ω)`. Empty iff `f` binds the profile.
pub fn check_profile_bounded(
    profile: &BindingProfile,
    f: &Polynomial,
) -> Result<Vec<ProfileViolation>> {
    let mut out = Vec::new();
    for &(omega, tw) in &profile.points {
        let bound = f.eval(omega as i128)?;
        if tw as i128 > bound {
            out.push(ProfileViolation {
                omega,
                treewidth: tw,
                bound,
            });
        }
    }
    Ok(out)
}
