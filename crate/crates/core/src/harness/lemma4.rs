use rand::Rng;
use rayon::prelude::*;
use serde_json::json;

use crate::clique::clique_number;
use crate::error::{check_cap, Error, Result};
use crate::graph::Graph;
use crate::io::graph6;
use crate::minors::{find_minor_model, is_minimal, minimize_minor_model, MinorModel};

use super::generate::{plant_minor, random_subcubic, rng_from_seed, sub_seed, PlantingParams};
use super::report::{params, ExperimentReport, InstanceRecord, RetryRecord};

pub const LEMMA4_MAX_HOST: usize = 12;
pub const LEMMA4_MAX_PATTERN: usize = 6;
const MAX_ATTEMPTS: usize = 64;

#[derive(Clone, Copy, Debug)]
pub struct Lemma4Params {
    pub trials: usize,
    pub seed: u64,
    pub host_n: usize,
    pub pattern_n: usize,
    pub planting: PlantingParams,
}

impl Lemma4Params {
    pub fn new(trials: usize, seed: u64, host_n: usize, pattern_n: usize) -> Self {
        Lemma4Params {
            trials,
            seed,
            host_n,
            pattern_n,
            planting: PlantingParams::default(),
        }
    }
}

pub fn verify_lemma4(
    trials: usize,
    seed: u64,
    host_n: usize,
    pattern_n: usize,
) -> Result<ExperimentReport> {
    verify_lemma4_with(Lemma4Params::new(trials, seed, host_n, pattern_n))
}

/// Random subcubic patterns planted into random hosts; every model found and
/// every planted model is minimized and its branch sets measured.
pub fn verify_lemma4_with(p: Lemma4Params) -> Result<ExperimentReport> {
    check_cap("lemma4 host size", LEMMA4_MAX_HOST, p.host_n)?;
    check_cap("lemma4 pattern size", LEMMA4_MAX_PATTERN, p.pattern_n)?;
    if p.pattern_n == 0 || p.pattern_n > p.host_n {
        return Err(Error::InvalidArgument(format!(
            "need 1 <= pattern_n <= host_n, got pattern_n = {}, host_n = {}",
            p.pattern_n, p.host_n
        )));
    }
    let results: Vec<(InstanceRecord, Vec<RetryRecord>)> = (0..p.trials)
        .into_par_iter()
        .map(|t| run_trial(&p, t))
        .collect::<Result<_>>()?;
    let (instances, retries): (Vec<_>, Vec<_>) = results.into_iter().unzip();
    let parameters = params([
        ("host_n", p.host_n.into()),
        ("pattern_n", p.pattern_n.into()),
        ("max_blob", p.planting.max_blob.into()),
        ("noise_probability", p.planting.noise_probability.into()),
        ("max_extra_vertices", p.planting.max_extra_vertices.into()),
    ]);
    Ok(ExperimentReport::new(
        "lemma4",
        p.seed,
        p.trials,
        parameters,
        instances,
        retries.into_iter().flatten().collect(),
    ))
}

fn run_trial(p: &Lemma4Params, trial: usize) -> Result<(InstanceRecord, Vec<RetryRecord>)> {
    let seed = sub_seed(p.seed, trial as u64);
    let mut retries = Vec::new();
    for attempt in 0..MAX_ATTEMPTS {
        let attempt_seed = if attempt == 0 {
            seed
        } else {
            sub_seed(seed, attempt as u64)
        };
        let mut rng = rng_from_seed(attempt_seed);
        let n = p.pattern_n;
        let target = rng.gen_range(n - 1..=3 * n / 2);
        let reason = match random_subcubic(n, target, &mut rng) {
            None => "edge target unreachable under the degree bound",
            Some(pattern) if !pattern.is_connected() => "disconnected pattern",
            Some(pattern) => {
                let (host, planted) = plant_minor(&pattern, p.host_n, p.planting, &mut rng)?;
                let mut rec = InstanceRecord::new(trial, "lemma4", Some(attempt_seed));
                rec.measure("attempt", attempt);
                check_instance(&mut rec, &pattern, &host, &planted)?;
                return Ok((rec, retries));
            }
        };
        retries.push(RetryRecord {
            trial,
            attempt,
            sub_seed: attempt_seed,
            reason: reason.to_string(),
        });
    }
    Err(Error::ResourceLimit {
        what: "pattern generation attempts",
        limit: MAX_ATTEMPTS,
        actual: MAX_ATTEMPTS,
    })
}

/// Runs every check of the suite on one planted instance.
pub fn check_instance(
    rec: &mut InstanceRecord,
    pattern: &Graph,
    host: &Graph,
    planted: &MinorModel,
) -> Result<()> {
    rec.input("pattern", graph6::encode(pattern));
    rec.input("host", graph6::encode(host));
    for (name, g) in [("pattern", pattern), ("host", host)] {
        let round_trip = graph6::decode(&graph6::encode(g))?;
        rec.check(&round_trip == g, || {
            format!("{name} does not round-trip through graph6")
        });
    }
    rec.measure("pattern_m", pattern.m());
    rec.measure("host_n", host.n());
    rec.measure("host_m", host.m());

    match find_minor_model(host, pattern)? {
        None => rec.check(false, || "search missed the planted minor".into()),
        Some(found) => check_minimized(rec, "found", &found)?,
    }
    check_minimized(rec, "planted", &absorb_neighbours(planted)?)?;
    Ok(())
}

fn check_minimized(rec: &mut InstanceRecord, which: &str, model: &MinorModel) -> Result<()> {
    rec.check(model.is_valid(false), || {
        format!("{which} model is invalid")
    });
    let minimal = minimize_minor_model(model)?;
    rec.check(minimal.is_valid(false), || {
        format!("minimized {which} model is invalid")
    });
    rec.check(is_minimal(&minimal), || {
        format!("minimized {which} model is not minimal")
    });
    let nested = minimal
        .branch_sets()
        .iter()
        .zip(model.branch_sets())
        .all(|(small, big)| small.iter().all(|x| big.binary_search(x).is_ok()));
    rec.check(nested, || {
        format!("minimized {which} model is not nested in the input")
    });

    let mut omegas = Vec::with_capacity(minimal.branch_sets().len());
    for set in minimal.branch_sets() {
        let (sub, _) = model.host().induced_subgraph(set);
        omegas.push(clique_number(&sub)?);
    }
    let worst = omegas.iter().copied().max().unwrap_or(0);
    rec.check(worst <= 3, || {
        format!("{which} branch set with clique number {worst}")
    });
    rec.measure(
        &format!("{which}_covered_before"),
        model.covered_vertices().len(),
    );
    rec.measure(
        &format!("{which}_covered_after"),
        minimal.covered_vertices().len(),
    );
    rec.measure(&format!("{which}_branch_omega"), json!(omegas));
    rec.measure(
        &format!("{which}_branch_sets"),
        json!(minimal.branch_sets()),
    );
    Ok(())
}

/// Grows a model by repeatedly adding each unused host vertex to the first
/// branch set it touches, so minimization has real work to do.
pub fn absorb_neighbours(m: &MinorModel) -> Result<MinorModel> {
    let host = m.host();
    let mut owner: Vec<Option<usize>> = vec![None; host.n()];
    for (v, set) in m.branch_sets().iter().enumerate() {
        for &x in set {
            owner[x] = Some(v);
        }
    }
    loop {
        let mut changed = false;
        for x in 0..host.n() {
            if owner[x].is_some() {
                continue;
            }
            if let Some(v) = host.neighbors(x).iter().filter_map(|&y| owner[y]).min() {
                owner[x] = Some(v);
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    let mut sets = vec![Vec::new(); m.pattern().n()];
    for (x, o) in owner.iter().enumerate() {
        if let Some(v) = o {
            sets[*v].push(x);
        }
    }
    MinorModel::new(m.pattern().clone(), host.clone(), sets)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::report::Status;

    #[test]
    fn single_vertex_pattern_passes() {
        let r = verify_lemma4(3, 5, 6, 1).unwrap();
        assert_eq!(r.verdict, Status::Pass, "{}", r.summary());
    }

    #[test]
    fn small_run_passes_and_repeats() {
        let a = verify_lemma4(8, 42, 9, 4).unwrap();
        assert_eq!(a.verdict, Status::Pass, "{}", a.summary());
        assert_eq!(a.to_json(), verify_lemma4(8, 42, 9, 4).unwrap().to_json());
    }

    #[test]
    fn caps_rejected() {
        assert!(verify_lemma4(1, 0, 13, 3).is_err());
        assert!(verify_lemma4(1, 0, 12, 7).is_err());
        assert!(verify_lemma4(1, 0, 4, 5).is_err());
    }
}
