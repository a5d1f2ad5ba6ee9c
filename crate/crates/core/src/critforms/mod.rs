//! Critical-point normal forms: the `n`-critical form and bicritical Belyi forms.

pub mod belyi;
pub mod ncrit;

pub use belyi::{belyi_poly, bicritical_conjugacy, make_bicritical, BelyiParams, Bicritical, Conjugacy};
pub use ncrit::{
    ncrit_derivative_target, ncrit_polynomial, verify_ramification, verify_ramification_poly, NCritSpec, Param,
};
