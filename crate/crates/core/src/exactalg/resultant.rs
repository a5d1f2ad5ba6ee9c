//! Resultants and discriminants.

use super::field::Field;
use super::linalg::determinant;
use super::field::Q;
use super::rational::Rational;
use super::unipoly::{QPoly, UniPoly};
use crate::error::{Error, Result};

/// Resultant of two nonzero polynomials, by the Euclidean remainder sequence.
pub fn resultant<F: Field>(a: &UniPoly<F>, b: &UniPoly<F>) -> Result<F> {
    if a.field() != b.field() {
        return Err(Error::FieldMismatch);
    }
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let tag = a.field().clone();
    let (mut f, mut g) = (a.clone(), b.clone());
    let mut acc = F::one(&tag);
    loop {
        let m = f.deg0();
        let n = g.deg0();
        if n == 0 {
            return Ok(acc.times(&g.leading().pow_u64(m as u64)));
        }
        if m == 0 {
            return Ok(acc.times(&f.leading().pow_u64(n as u64)));
        }
        // Res(f, g) = (-1)^{mn} lc(g)^{m - deg r} Res(g, r), r = f mod g
        let r = f.rem(&g)?;
        if r.is_zero() {
            return Ok(F::zero(&tag));
        }
        if (m * n) % 2 == 1 {
            acc = acc.negate();
        }
        acc = acc.times(&g.leading().pow_u64((m - r.deg0()) as u64));
        f = g;
        g = r;
    }
}

/// Sylvester matrix of `a`, `b` read as forms of formal degrees `m`, `n`.
pub fn sylvester_matrix<F: Field>(a: &UniPoly<F>, b: &UniPoly<F>, m: usize, n: usize) -> Vec<Vec<F>> {
    let tag = a.field().clone();
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for i in 0..n {
        let mut row = vec![F::zero(&tag); size];
        for j in 0..=m {
            row[i + j] = a.coeff(m - j);
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![F::zero(&tag); size];
        for j in 0..=n {
            row[i + j] = b.coeff(n - j);
        }
        rows.push(row);
    }
    rows
}

/// Resultant of binary forms of formal degrees `m >= deg a`, `n >= deg b`.
/// Vanishes iff the forms share a root on the projective line, including infinity.
pub fn homogeneous_resultant<F: Field>(a: &UniPoly<F>, b: &UniPoly<F>, m: usize, n: usize) -> Result<F> {
    if a.field() != b.field() {
        return Err(Error::FieldMismatch);
    }
    if a.degree().is_some_and(|d| d > m) || b.degree().is_some_and(|d| d > n) {
        return Err(Error::InvalidInput("formal degree below actual degree".into()));
    }
    Ok(determinant(sylvester_matrix(a, b, m, n), a.field()))
}

/// `(-1)^{n(n-1)/2} Res(f, f') / lc(f)`.
pub fn discriminant<F: Field>(f: &UniPoly<F>) -> Result<F> {
    let n = f.degree().ok_or(Error::ZeroPolynomial)?;
    if n == 0 {
        return Err(Error::DegreeOutOfRange { degree: 0, min: 1, max: usize::MAX });
    }
    if n == 1 {
        return Ok(F::one(f.field()));
    }
    let r = resultant(f, &f.derivative())?;
    let mut d = r.times(&f.leading().inverse().expect("nonzero leading coefficient"));
    if (n * (n - 1) / 2) % 2 == 1 {
        d = d.negate();
    }
    Ok(d)
}

/// `prod (lambda - num(x)/den(x))` over the roots `x` of `modulus`, with
/// multiplicity, as a monic polynomial in `lambda`. Needs `gcd(modulus, den) = 1`.
pub fn norm_polynomial(modulus: &QPoly, num: &QPoly, den: &QPoly) -> Result<QPoly> {
    let n = modulus.degree().ok_or(Error::ZeroPolynomial)?;
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    if n == 0 {
        return Ok(QPoly::one(Q));
    }
    if modulus.gcd(den).deg0() > 0 {
        return Err(Error::InvalidInput("denominator vanishes at a root".into()));
    }
    let lc = modulus.leading();
    let points: Vec<(Rational, Rational)> = (0..=n as i64)
        .map(|j| {
            let lam = Rational::from_int(j);
            // prod h(x) = Res(modulus, h) / lc^deg h
            let h = &den.scale(&lam) - num;
            let v = match h.degree() {
                None => Rational::zero(),
                Some(dh) => {
                    let r = resultant(modulus, &h).expect("nonzero inputs");
                    &r / &lc.pow(dh as i32)
                }
            };
            (lam, v)
        })
        .collect();
    let poly = QPoly::interpolate(&points);
    if poly.degree() != Some(n) {
        return Err(Error::TheoremCheck("norm polynomial lost degree".into()));
    }
    Ok(poly.monic())
}
