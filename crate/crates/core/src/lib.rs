//! Exact computations for normal forms of rational maps and polynomials on
//! the projective line.

pub mod error;
pub mod exactalg;
pub mod critforms;
pub mod cubic;
pub mod projdyn;
pub mod transversality;

pub use error::{Error, Result};
