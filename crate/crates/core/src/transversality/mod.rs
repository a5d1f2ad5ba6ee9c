//! Transversality of critical-orbit curves for bicritical polynomials by
//! reduction modulo a prime, and the examples where the method breaks down
//! for three critical points.

pub mod failure;
pub mod jacobian;
pub mod sylvester;

pub use failure::{
    d10_failure_report, d10_spec, d4_spec, ncrit_reduce_mod_p, tricritical_jacobian, tricritical_jacobian_mod3,
    NCritReduction, ReductionClass,
};
pub use jacobian::{
    jacobian_certify, jacobian_certify_capped, orbit_polys, reduced_map, IntersectionPoint, JacobianReport,
    OrbitPolys,
};
pub use sylvester::{belyi_reduce_mod_p, sylvester_datum, SylvesterDatum};
