//! Normalized bicritical Belyi polynomials and the bicritical family `a B + c`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::{QPoly, Rational, Q};
use crate::projdyn::RationalMap;

/// Degree `d >= 3` and `1 <= k <= d - 2`: the combinatorial type `(d; d - k, k + 1, d)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BelyiParams {
    pub d: usize,
    pub k: usize,
}

impl BelyiParams {
    pub fn new(d: usize, k: usize) -> Result<Self> {
        if d < 3 {
            return Err(Error::DegreeOutOfRange { degree: d, min: 3, max: usize::MAX });
        }
        if k < 1 || k > d - 2 {
            return Err(Error::InvalidInput(format!("k = {k} outside 1..={} for degree {d}", d - 2)));
        }
        Ok(BelyiParams { d, k })
    }

    /// `ceil((d - 2) / 2)`.
    pub fn canonical_bound(d: usize) -> usize {
        (d - 1) / 2
    }

    pub fn is_canonical(&self) -> bool {
        self.k <= Self::canonical_bound(self.d)
    }

    /// Ramification indices at 0, 1 and infinity.
    pub fn branch_type(&self) -> (usize, usize, usize) {
        (self.d - self.k, self.k + 1, self.d)
    }
}

fn factorial(n: usize) -> Rational {
    (1..=n as i64).fold(Rational::one(), |acc, i| &acc * &Rational::from_int(i))
}

/// `sum_i (-1)^(k-i) prod_{j != i} (d - j) / ((k - i)! i!) z^(d - i)`.
pub fn belyi_poly(bp: BelyiParams) -> QPoly {
    let BelyiParams { d, k } = bp;
    let mut coeffs = vec![Rational::zero(); d + 1];
    for i in 0..=k {
        let prod = (0..=k)
            .filter(|&j| j != i)
            .fold(Rational::one(), |acc, j| &acc * &Rational::from_int((d - j) as i64));
        let mut c = &prod / &(&factorial(k - i) * &factorial(i));
        if (k - i) % 2 == 1 {
            c = -c;
        }
        coeffs[d - i] = c;
    }
    QPoly::from_rationals(coeffs)
}

/// `a B_{d,k} + c`, critical at 0 and 1.
pub fn make_bicritical(a: &Rational, c: &Rational, bp: BelyiParams) -> Result<RationalMap> {
    if a.is_zero() {
        return Err(Error::InvalidInput("a = 0 collapses the degree".into()));
    }
    let p = &belyi_poly(bp).scale(a) + &QPoly::constant(c.clone(), Q);
    RationalMap::polynomial(p)
}

/// A member `a B_{d,k} + c` of the bicritical family.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Bicritical {
    pub a: Rational,
    pub c: Rational,
    pub d: usize,
    pub k: usize,
}

impl Bicritical {
    pub fn new(a: impl Into<Rational>, c: impl Into<Rational>, d: usize, k: usize) -> Result<Self> {
        let a = a.into();
        if a.is_zero() {
            return Err(Error::InvalidInput("a = 0 collapses the degree".into()));
        }
        BelyiParams::new(d, k)?;
        Ok(Bicritical { a, c: c.into(), d, k })
    }

    pub fn params(&self) -> BelyiParams {
        BelyiParams { d: self.d, k: self.k }
    }

    pub fn map(&self) -> RationalMap {
        make_bicritical(&self.a, &self.c, self.params()).expect("validated on construction")
    }

    /// The conjugate obtained by swapping the critical points 0 and 1.
    pub fn swapped(&self) -> Bicritical {
        Bicritical {
            a: self.a.clone(),
            c: &(&Rational::one() - &self.a) - &self.c,
            d: self.d,
            k: self.d - 1 - self.k,
        }
    }

    /// Representative with `k <= ceil((d - 2) / 2)`.
    pub fn canonical(&self) -> Bicritical {
        if self.params().is_canonical() {
            self.clone()
        } else {
            self.swapped()
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Conjugacy {
    Equal,
    Conjugate,
    Distinct,
}

pub fn bicritical_conjugacy(f0: &Bicritical, f1: &Bicritical) -> Conjugacy {
    if f0 == f1 {
        Conjugacy::Equal
    } else if f0.d == f1.d
        && f0.k + f1.k == f0.d - 1
        && f0.a == f1.a
        && f1.c == &(&Rational::one() - &f0.a) - &f0.c
    {
        Conjugacy::Conjugate
    } else {
        Conjugacy::Distinct
    }
}
