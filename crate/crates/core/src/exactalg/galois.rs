//! Galois groups of squarefree rational polynomials of degree at most four.

use std::fmt;

use serde::{Serialize, Serializer};

use super::factor::{factor_upto_quartic, rational_roots, resolvent_cubic};
use super::rational::Rational;
use super::resultant::discriminant;
use super::unipoly::QPoly;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GaloisLabel {
    Trivial,
    Z2,
    Z3,
    Z2xZ2,
    Z4,
    S3,
    D4,
    A4,
    S4,
}

impl GaloisLabel {
    pub fn order(self) -> usize {
        match self {
            GaloisLabel::Trivial => 1,
            GaloisLabel::Z2 => 2,
            GaloisLabel::Z3 => 3,
            GaloisLabel::Z2xZ2 | GaloisLabel::Z4 => 4,
            GaloisLabel::S3 => 6,
            GaloisLabel::D4 => 8,
            GaloisLabel::A4 => 12,
            GaloisLabel::S4 => 24,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            GaloisLabel::Trivial => "trivial",
            GaloisLabel::Z2 => "Z2",
            GaloisLabel::Z3 => "Z3",
            GaloisLabel::Z2xZ2 => "Z2xZ2",
            GaloisLabel::Z4 => "Z4",
            GaloisLabel::S3 => "S3",
            GaloisLabel::D4 => "D4",
            GaloisLabel::A4 => "A4",
            GaloisLabel::S4 => "S4",
        }
    }
}

impl fmt::Display for GaloisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for GaloisLabel {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

fn square_mod(x: &Rational, d: &Rational) -> bool {
    x.is_square() || (x * d).is_square()
}

fn irreducible_quartic_group(f: &QPoly) -> Result<GaloisLabel> {
    let f = f.monic();
    let disc = discriminant(&f)?;
    let res = resolvent_cubic(&f);
    let roots = rational_roots(&res);
    Ok(match roots.len() {
        0 if disc.is_square() => GaloisLabel::A4,
        0 => GaloisLabel::S4,
        1 => {
            let r = &roots[0].0;
            let (a, b, d) = (f.coeff(3), f.coeff(2), f.coeff(0));
            let four = Rational::from_int(4);
            let d1 = &(r * r) - &(&four * &d);
            let d2 = &(&a * &a) - &(&four * &(&b - r));
            if square_mod(&d1, &disc) && square_mod(&d2, &disc) {
                GaloisLabel::Z4
            } else {
                GaloisLabel::D4
            }
        }
        _ => GaloisLabel::Z2xZ2,
    })
}

/// Galois group of the splitting field of a squarefree `f`, `1 <= deg f <= 4`.
pub fn galois_group(f: &QPoly) -> Result<GaloisLabel> {
    let fac = factor_upto_quartic(f)?;
    if fac.factors.iter().any(|(_, m)| *m > 1) {
        return Err(Error::NotSquarefree);
    }
    let nonlinear: Vec<&QPoly> = fac
        .factors
        .iter()
        .map(|(g, _)| g)
        .filter(|g| g.deg0() > 1)
        .collect();
    match nonlinear.as_slice() {
        [] => Ok(GaloisLabel::Trivial),
        [g] if g.deg0() == 2 => Ok(GaloisLabel::Z2),
        [g] if g.deg0() == 3 => Ok(if discriminant(*g)?.is_square() {
            GaloisLabel::Z3
        } else {
            GaloisLabel::S3
        }),
        [g] => irreducible_quartic_group(g),
        [g, h] => {
            let ratio = &discriminant(*g)? * &discriminant(*h)?;
            Ok(if ratio.is_square() { GaloisLabel::Z2 } else { GaloisLabel::Z2xZ2 })
        }
        _ => unreachable!("degree at most four"),
    }
}
