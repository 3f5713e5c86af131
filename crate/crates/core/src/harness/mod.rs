//! Seeded experiment suites and their JSON reports.

pub mod generate;
pub mod lemma4;
pub mod obs7;
pub mod report;
pub mod theorem5;

pub use generate::{
    gnp, plant_minor, random_subcubic, random_tree, rng_from_seed, sub_seed, PlantingParams,
};
pub use lemma4::{verify_lemma4, verify_lemma4_with, Lemma4Params};
pub use obs7::{obs7_experiment, obs7_graph};
pub use report::{ExperimentReport, InstanceRecord, RetryRecord, Status};
pub use theorem5::{subdivision_from_model, theorem5_pipeline, SubdivisionWitness};
