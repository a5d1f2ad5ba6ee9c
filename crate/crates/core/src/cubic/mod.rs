//! Degree-3 normal forms: the sigma-invariant form for polynomials and
//! fixed-point multiplier forms for rational maps.

pub mod classify;
pub mod fpm;
pub mod phi;

pub use classify::{classify_partial_fpm, ConjugateCount, FpmClassification, FpmEvidence, FpmOutcome};
pub use fpm::{lemma4_construct, milnor_check_quartic};
pub use phi::{
    cubic_poly_to_sigma, curve_c_member, curve_c_value, form_degeneracy_check, phi_normal_form,
    FormKind, SigmaPair,
};
