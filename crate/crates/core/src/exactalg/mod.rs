//! Exact algebra kernel: rationals, finite fields, polynomials, resultants,
//! factorization and Galois groups of small degree.

pub mod factor;
pub mod field;
pub mod galois;
pub mod linalg;
pub mod multipoly;
pub mod rational;
pub mod resultant;
pub mod unipoly;

pub use factor::{factor_upto_quartic, rational_roots, Factorization};
pub use field::{Field, Fp, Fp2, PrimeField, QuadraticExtension, Q};
pub use galois::{galois_group, GaloisLabel};
pub use multipoly::{MultiPoly, QMultiPoly, Var};
pub use rational::{q, Rational};
pub use resultant::{discriminant, homogeneous_resultant, resultant};
pub use unipoly::{QPoly, UniPoly};
