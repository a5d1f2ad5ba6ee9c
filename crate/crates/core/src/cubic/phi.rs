//! The sigma-invariant normal form for cubic polynomials.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::{homogeneous_resultant, q, QPoly, Rational};
use crate::projdyn::{multiplier_spectrum, RationalMap};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SigmaPair {
    pub sigma1: Rational,
    pub sigma3: Rational,
}

impl SigmaPair {
    pub fn new(sigma1: impl Into<Rational>, sigma3: impl Into<Rational>) -> Self {
        SigmaPair { sigma1: sigma1.into(), sigma3: sigma3.into() }
    }

    /// `(sigma1, 2 sigma1 - 3, sigma3, 0)`, the full invariant list of `phi(self)`.
    pub fn expected_sigma(&self) -> Vec<Rational> {
        vec![
            self.sigma1.clone(),
            &(&Rational::from_int(2) * &self.sigma1) - &Rational::from_int(3),
            self.sigma3.clone(),
            Rational::zero(),
        ]
    }
}

fn r(n: i64) -> Rational {
    Rational::from_int(n)
}

/// `4 s1^3 - 36 s1^2 + 81 s1 + 27 s3 - 54`.
pub fn curve_c_value(s: &SigmaPair) -> Rational {
    let s1 = &s.sigma1;
    let s1_2 = s1 * s1;
    let s1_3 = &s1_2 * s1;
    &(&(&(&r(4) * &s1_3) - &(&r(36) * &s1_2)) + &(&(&r(81) * s1) + &(&r(27) * &s.sigma3))) - &r(54)
}

pub fn curve_c_member(s: &SigmaPair) -> bool {
    curve_c_value(s).is_zero()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FormKind {
    First,
    Second,
}

/// Unscaled numerator and denominator of the two generic forms.
pub fn raw_form(s: &SigmaPair, which: FormKind) -> (QPoly, QPoly) {
    let (s1, s3) = (&s.sigma1, &s.sigma3);
    let s1_2 = s1 * s1;
    match which {
        FormKind::First => (
            QPoly::from_rationals(vec![
                &(&r(2) * &(s1 * s3)) - &(&r(3) * s3),
                Rational::zero(),
                &(&(&r(2) * &s1_2) - &(&r(15) * s1)) + &r(18),
                &r(12) - &(&r(2) * s1),
            ]),
            QPoly::from_rationals(vec![
                &(&(&(&r(4) * &s1_2) - &(&r(12) * s1)) + &(&r(3) * s3)) + &r(9),
                &r(27) - &(&r(18) * s1),
                &r(9) + &(&r(3) * s1),
                r(-3),
            ]),
        ),
        FormKind::Second => (
            QPoly::from_rationals(vec![
                Rational::zero(),
                Rational::zero(),
                Rational::zero(),
                &(&r(9) * s1) - &r(27),
            ]),
            QPoly::from_rationals(vec![
                &(&r(24) * s3) - &(&r(4) * &(s1 * s3)),
                &(&(&(&r(6) * &s1_2) - &(&r(45) * s1)) - &(&r(9) * s3)) + &r(54),
                -(&(&(&r(2) * &s1_2) - &(&r(33) * s1)) + &r(45)),
                &r(-6) - &(&r(2) * s1),
            ]),
        ),
    }
}

/// Resultant of the requested raw form, both parts read with formal degree 3.
pub fn form_degeneracy_check(s: &SigmaPair, which: FormKind) -> Rational {
    let (n, d) = raw_form(s, which);
    homogeneous_resultant(&n, &d, 3, 3).expect("formal degrees fit")
}

/// The normal form: a cubic map with sigma-invariants `(s1, 2 s1 - 3, s3, 0)`.
pub fn phi_normal_form(s: &SigmaPair) -> Result<RationalMap> {
    let (s1, s3) = (&s.sigma1, &s.sigma3);
    let build = |n: QPoly, d: QPoly| {
        let f = RationalMap::new(n, d)
            .map_err(|e| Error::TheoremCheck(format!("normal form at ({s1}, {s3}) degenerates: {e}")))?;
        if f.degree() != 3 {
            return Err(Error::TheoremCheck(format!("normal form at ({s1}, {s3}) has degree {}", f.degree())));
        }
        Ok(f)
    };
    if !curve_c_member(s) {
        let (n, d) = raw_form(s, FormKind::First);
        return build(n, d);
    }
    let special = |a: Rational, b: Rational| s1 == &a && s3 == &b;
    if special(r(6), r(0)) {
        return build(QPoly::from_ints(&[0, 0, 0, 1]), QPoly::from_ints(&[1]));
    }
    if special(r(3), r(1)) {
        return build(QPoly::from_ints(&[0, 1, 0, 1]), QPoly::from_ints(&[1]));
    }
    if special(q(3, 2), r(0)) {
        return build(
            QPoly::from_rationals(vec![r(0), q(3, 2), r(0), r(1)]),
            QPoly::from_ints(&[1]),
        );
    }
    if s1 == &r(3) || s1 == &r(6) || s3.is_zero() {
        return Err(Error::TheoremCheck(format!(
            "({s1}, {s3}) lies on the curve but misses every special case"
        )));
    }
    let (n, d) = raw_form(s, FormKind::Second);
    build(n, d)
}

/// `(sigma1, sigma3)` of a cubic polynomial map.
pub fn cubic_poly_to_sigma(f: &RationalMap) -> Result<SigmaPair> {
    if !f.is_polynomial() || f.degree() != 3 {
        return Err(Error::InvalidInput("expected a cubic polynomial".into()));
    }
    let sigma = multiplier_spectrum(f).sigma;
    Ok(SigmaPair { sigma1: sigma[0].clone(), sigma3: sigma[2].clone() })
}
