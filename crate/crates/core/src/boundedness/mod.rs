//! Binding-function polynomials and empirical (ω, tw) profiles.

pub mod poly;
pub mod profile;

pub use poly::{compose_h, nondecreasing_majorant, Polynomial};
pub use profile::{
    check_profile_bounded, empirical_binding_profile, BindingProfile, ProfileViolation, PROFILE_CAP,
};
