//! Cubic maps whose four fixed points equal their multipliers.

use crate::error::{Error, Result};
use crate::exactalg::{QPoly, Rational};
use crate::projdyn::RationalMap;

/// `sum 1/(1 - x_i) = 1` over the roots of a monic quartic, read as
/// `Phi'(1) = Phi(1) != 0`.
pub fn milnor_check_quartic(phi: &QPoly) -> bool {
    if phi.degree() != Some(4) || !phi.is_monic() {
        return false;
    }
    let one = Rational::one();
    let v = phi.eval(&one);
    !v.is_zero() && phi.derivative().eval(&one) == v
}

/// The cubic map `F = z - Phi/q` with `Fix(F)` the roots of `Phi` and each
/// fixed point equal to its multiplier. `q` solves
/// `(1 - z) q - Phi' = -Phi`, i.e. `q = (Phi - Phi') / (z - 1)`.
pub fn lemma4_construct(phi: &QPoly) -> Result<RationalMap> {
    if phi.degree() != Some(4) {
        return Err(Error::DegreeOutOfRange { degree: phi.deg0(), min: 4, max: 4 });
    }
    let phi = phi.monic();
    if !phi.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    if phi.eval(&Rational::one()).is_zero() {
        return Err(Error::InvalidInput("1 is a fixed point".into()));
    }
    if !milnor_check_quartic(&phi) {
        return Err(Error::InvalidInput("sum of 1/(1 - x) over the roots is not 1".into()));
    }
    let z_minus_1 = QPoly::from_ints(&[-1, 1]);
    let q = (&phi - &phi.derivative())
        .exact_div(&z_minus_1)
        .ok_or_else(|| Error::TheoremCheck("Phi - Phi' not divisible by z - 1".into()))?;
    if q.deg0() < 3 || phi.gcd(&q).deg0() > 0 {
        return Err(Error::DegenerateMap("q shares a root with Phi".into()));
    }
    let num = &q.shift(1) - &phi;
    let f = RationalMap::new(num, q)?;
    // each fixed point equals its multiplier: W - z Q^2 = 0 mod Phi
    let w = f.wronskian();
    let q2 = f.den() * f.den();
    if !(&w - &q2.shift(1)).rem(&phi)?.is_zero() {
        return Err(Error::TheoremCheck("fixed points differ from their multipliers".into()));
    }
    if (f.num() - &f.den().shift(1)).monic() != phi {
        return Err(Error::TheoremCheck("fixed points differ from the roots of Phi".into()));
    }
    Ok(f)
}
