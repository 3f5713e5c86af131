//! Minor and induced-minor models: validation, search, minimisation.

pub mod constructions;
pub mod minimize;
pub mod model;
pub mod search;

pub use constructions::{identity_model, lsg_canonical_model, restrict_model, subdivision_model};
pub use minimize::{is_minimal, minimize_minor_model, shrink_connected_cover};
pub use model::{validate_model, InducedMinorModel, MinorModel, ModelViolation};
pub use search::{find_induced_minor_model, find_minor_model, find_model_with, SearchLimits};
