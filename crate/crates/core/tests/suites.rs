use rand::Rng;
use serde_json::Value;

use twbound::families::{cycle, path, star, wall};
use twbound::harness::{
    gnp, obs7_experiment, rng_from_seed, subdivision_from_model, theorem5_pipeline, verify_lemma4,
    verify_lemma4_with, Lemma4Params, PlantingParams, Status,
};
use twbound::io::graph6;
use twbound::minors::{find_minor_model, identity_model, lsg_canonical_model, subdivision_model};
use twbound::treewidth::treewidth;
use twbound::{subdivide_once, Graph};

#[test]
fn verdict_is_pass_iff_every_instance_passes() {
    for seed in 0..5 {
        let r = verify_lemma4(20, seed, 10, 5).unwrap();
        let all = r.instances.iter().all(|i| i.status == Status::Pass);
        assert_eq!(r.verdict == Status::Pass, all);
        assert_eq!(r.verdict, Status::Pass, "{}", r.summary());
    }
}

#[test]
fn planted_minor_inputs_round_trip_and_reproduce() {
    let r = verify_lemma4(25, 3, 12, 6).unwrap();
    for inst in &r.instances {
        let pattern = graph6::decode(&inst.inputs["pattern"]).unwrap();
        let host = graph6::decode(&inst.inputs["host"]).unwrap();
        assert!(pattern.is_subcubic());
        assert!(pattern.is_connected());
        assert_eq!(pattern.n(), 6);
        assert!(host.n() <= 12);
        assert_eq!(inst.measurements["host_m"], host.m());
    }
}

#[test]
fn heavier_noise_still_passes() {
    let mut p = Lemma4Params::new(30, 9, 12, 6);
    p.planting = PlantingParams {
        max_blob: 3,
        noise_probability: 0.5,
        max_extra_vertices: 3,
    };
    let r = verify_lemma4_with(p).unwrap();
    assert_eq!(r.verdict, Status::Pass, "{}", r.summary());
    assert_eq!(r.parameters["noise_probability"], 0.5);
}

#[test]
fn wall_pipeline_on_random_supergraphs_of_a_cycle() {
    // S(C_6) with pendant paths hung off random vertices keeps C_6 as an
    // induced minor
    let pattern = cycle(6);
    for seed in 0..10u64 {
        let mut rng = rng_from_seed(seed);
        let base = subdivide_once(&pattern);
        let extra = rng.gen_range(1..=4);
        let mut edges = base.edges().to_vec();
        for i in 0..extra {
            edges.push((rng.gen_range(0..base.n()), base.n() + i));
        }
        let host = Graph::new(base.n() + extra, edges).unwrap();
        let r = theorem5_pipeline(&host, &pattern, 1, None).unwrap();
        assert_eq!(r.verdict, Status::Pass, "{}", r.summary());
        assert_eq!(r.instances[0].measurements["inequalities_evaluated"], 4);
    }
}

#[test]
fn wall_pipeline_with_constructed_models() {
    let w = wall(2).unwrap();
    let model = subdivision_model(&w);
    let r = theorem5_pipeline(model.host(), &w, 2, Some(&model)).unwrap();
    assert_eq!(r.verdict, Status::Pass, "{}", r.summary());
    let w1 = wall(1).unwrap();
    let lsg = lsg_canonical_model(&w1).unwrap();
    let r = theorem5_pipeline(lsg.host(), &w1, 1, Some(&lsg)).unwrap();
    assert_eq!(r.verdict, Status::Pass, "{}", r.summary());
}

#[test]
fn wall_pipeline_never_passes_without_evaluating() {
    for pattern in [path(6), star(4)] {
        for k in 1..=2 {
            let r =
                theorem5_pipeline(&pattern, &pattern, k, Some(&identity_model(&pattern))).unwrap();
            assert_ne!(r.verdict, Status::Pass);
            assert_eq!(r.instances[0].measurements["inequalities_evaluated"], 0);
        }
    }
    // a cycle has the 1-wall but not the 2-wall
    let c = cycle(8);
    let r = theorem5_pipeline(&c, &c, 2, None).unwrap();
    assert_eq!(r.verdict, Status::Inconclusive);
    let r = theorem5_pipeline(&c, &c, 1, None).unwrap();
    assert_eq!(r.verdict, Status::Pass);
}

#[test]
fn wall_pipeline_rejects_mismatched_model() {
    let w = wall(1).unwrap();
    assert!(theorem5_pipeline(&w, &w, 1, Some(&identity_model(&w))).is_ok());
    let other = identity_model(&cycle(7));
    assert!(theorem5_pipeline(&w, &w, 1, Some(&other)).is_err());
    assert!(theorem5_pipeline(&subdivide_once(&w), &w, 1, Some(&identity_model(&w))).is_err());
}

#[test]
fn subdivision_witness_on_random_hosts() {
    let pattern = wall(1).unwrap();
    let mut checked = 0;
    for seed in 0..40u64 {
        let host = gnp(9, 0.35, &mut rng_from_seed(seed));
        if let Some(m) = find_minor_model(&host, &pattern).unwrap() {
            let w = subdivision_from_model(&m).unwrap();
            assert!(w.graph.is_subcubic());
            assert!(w.model.is_valid(false));
            assert_eq!(w.graph.m() + pattern.n(), w.graph.n() + pattern.m());
            for &(a, b) in w.graph.edges() {
                assert!(host.has_edge(w.vertices[a], w.vertices[b]));
            }
            assert_eq!(treewidth(&w.graph).unwrap(), 2);
            checked += 1;
        }
    }
    assert!(checked > 10);
}

#[test]
fn report_json_shape() {
    let r = obs7_experiment(2, 3, 1).unwrap();
    let v: Value = serde_json::from_str(&r.to_json()).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["experiment"], "obs7");
    assert_eq!(v["verdict"], "pass");
    assert_eq!(v["instances"].as_array().unwrap().len(), 5);
    assert!(r
        .to_json()
        .starts_with("{\n  \"schema\": 1,\n  \"experiment\": \"obs7\""));
}
