//! Rational maps on the projective line over the rationals.

pub mod automorphism;
pub mod fixed;
pub mod map;
pub mod mobius;
pub mod point;
pub mod ramification;

pub use automorphism::automorphisms_rational;
pub use fixed::{
    fixed_point_data, index_relation_holds, infinity_multiplier, multiplier_at,
    multiplier_spectrum, FixedPointData, MultiplierSpectrum,
};
pub use map::{conjugate, make_rational_map, orbit, preperiodic_bounded, Preperiodicity, RationalMap};
pub use mobius::Mobius;
pub use point::Point;
pub use ramification::{ramification_profile, RamificationProfile};
