//! Normal form for polynomials with `n` critical points.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactalg::multipoly::Exponent;
use crate::exactalg::{QMultiPoly, QPoly, Rational, Var, Q};

/// A parameter that is either a number or a named indeterminate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Param {
    Value(Rational),
    Symbol(Var),
}

impl Param {
    pub fn value(x: impl Into<Rational>) -> Self {
        Param::Value(x.into())
    }

    pub fn as_value(&self) -> Option<&Rational> {
        match self {
            Param::Value(x) => Some(x),
            Param::Symbol(_) => None,
        }
    }

    pub fn to_poly(&self) -> QMultiPoly {
        match self {
            Param::Value(x) => QMultiPoly::q_const(x.clone()),
            Param::Symbol(v) => QMultiPoly::q_var(*v),
        }
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Param::Value(x) => write!(f, "{x}"),
            Param::Symbol(v) => f.write_str(v.name()),
        }
    }
}

impl FromStr for Param {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match Var::from_name(s.trim()) {
            Some(v) => Ok(Param::Symbol(v)),
            None => Ok(Param::Value(s.parse()?)),
        }
    }
}

impl Serialize for Param {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Param {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Degree, ramification data and critical values of an `n`-critical polynomial.
/// `0` is a critical point of index `d - sum k`, `gamma_i` one of index `k_i + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NCritSpec {
    pub d: usize,
    pub k_list: Vec<usize>,
    pub gamma_list: Vec<Param>,
    pub a: Param,
    pub c: Param,
}

impl NCritSpec {
    pub fn new(d: usize, k_list: Vec<usize>, gamma_list: Vec<Param>, a: Param, c: Param) -> Result<Self> {
        let s = NCritSpec { d, k_list, gamma_list, a, c };
        s.validate()?;
        Ok(s)
    }

    /// Number of critical points, 0 included.
    pub fn n(&self) -> usize {
        self.k_list.len() + 1
    }

    pub fn k_sum(&self) -> usize {
        self.k_list.iter().sum()
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidInput(m));
        if self.d < 2 {
            return Err(Error::DegreeOutOfRange { degree: self.d, min: 2, max: usize::MAX });
        }
        if self.k_list.is_empty() || self.k_list.len() != self.gamma_list.len() {
            return bad("need one k and one gamma per nonzero critical point".into());
        }
        if self.k_list.contains(&0) {
            return bad("every k must be at least 1".into());
        }
        let sk = self.k_sum();
        if sk < self.n() - 1 || sk + 2 > self.d {
            return bad(format!("sum of k = {sk} outside {}..={}", self.n() - 1, self.d as i64 - 2));
        }
        let mut symbols = Vec::new();
        for (i, g) in self.gamma_list.iter().enumerate() {
            match g {
                Param::Value(x) => {
                    if x.is_zero() {
                        return bad("critical points other than 0 must be nonzero".into());
                    }
                    if self.gamma_list[..i].contains(g) {
                        return bad(format!("repeated critical point {x}"));
                    }
                }
                Param::Symbol(v) => {
                    if !matches!(v, Var::G | Var::H) || symbols.contains(v) {
                        return bad(format!("critical point symbol {} must be a fresh g or h", v.name()));
                    }
                    symbols.push(*v);
                }
            }
        }
        match &self.a {
            Param::Value(x) if x.is_zero() => return bad("a = 0 collapses the degree".into()),
            Param::Symbol(v) if *v != Var::A => return bad("a may only be the symbol a".into()),
            _ => {}
        }
        if let Param::Symbol(v) = &self.c {
            if *v != Var::C {
                return bad("c may only be the symbol c".into());
            }
        }
        Ok(())
    }

    /// Numeric critical points, or `SymbolicGamma`.
    pub fn numeric_gammas(&self) -> Result<Vec<Rational>> {
        self.gamma_list.iter().map(|g| g.as_value().cloned().ok_or(Error::SymbolicGamma)).collect()
    }

    /// `d! / (d - sum k - 1)!`, the integer that clears every denominator.
    pub fn prefactor(&self) -> Rational {
        let lo = self.d - self.k_sum();
        (lo..=self.d).fold(Rational::one(), |acc, i| &acc * &Rational::from_int(i as i64))
    }
}

fn binomial(n: usize, k: usize) -> Rational {
    (0..k).fold(Rational::one(), |acc, i| &(&acc * &Rational::from_int((n - i) as i64)) / &Rational::from_int(i as i64 + 1))
}

fn z_power(e: usize) -> QMultiPoly {
    let mut x: Exponent = [0; 5];
    x[Var::Z.index()] = e as u32;
    QMultiPoly::monomial(Rational::one(), x, Q)
}

/// `a (P sum_j prod_i (-g_i)^(k_i - j_i) C(k_i, j_i) z^(d + |j| - K) / (d + |j| - K)) + c`
/// with `K = sum k` and `P = d! / (d - K - 1)!`.
pub fn ncrit_polynomial(spec: &NCritSpec) -> Result<QMultiPoly> {
    spec.validate()?;
    let big_k = spec.k_sum();
    let pre = spec.prefactor();
    let neg_gamma: Vec<QMultiPoly> = spec.gamma_list.iter().map(|g| -&g.to_poly()).collect();
    let mut body = QMultiPoly::zero(Q);
    let mut j = vec![0usize; spec.k_list.len()];
    loop {
        let js: usize = j.iter().sum();
        let e = spec.d + js - big_k;
        let mut term = QMultiPoly::q_const(&pre / &Rational::from_int(e as i64));
        for (i, &ki) in spec.k_list.iter().enumerate() {
            term = &term.scale(&binomial(ki, j[i])) * &neg_gamma[i].pow((ki - j[i]) as u64);
        }
        body = &body + &(&term * &z_power(e));
        // odometer over 0..=k_i
        let mut pos = 0;
        while pos < j.len() && j[pos] == spec.k_list[pos] {
            j[pos] = 0;
            pos += 1;
        }
        if pos == j.len() {
            break;
        }
        j[pos] += 1;
    }
    Ok(&(&spec.a.to_poly() * &body) + &spec.c.to_poly())
}

/// `P z^(d - K - 1) prod (z - g_i)^k_i` in z and the critical-point symbols.
pub fn ncrit_derivative_target(spec: &NCritSpec) -> QMultiPoly {
    let z = QMultiPoly::q_var(Var::Z);
    let mut t = z_power(spec.d - spec.k_sum() - 1).scale(&spec.prefactor());
    for (g, &k) in spec.gamma_list.iter().zip(&spec.k_list) {
        t = &t * &(&z - &g.to_poly()).pow(k as u64);
    }
    t
}

/// True iff `p' = alpha z^(d - K - 1) prod (z - g_i)^k_i` for some nonzero
/// `alpha` free of `z`, with numeric critical points.
pub fn verify_ramification(p: &QMultiPoly, spec: &NCritSpec) -> Result<bool> {
    spec.validate()?;
    let gammas = spec.numeric_gammas()?;
    if p.degree_in(Var::Z) != Some(spec.d as u32) {
        return Ok(false);
    }
    let mut t = QPoly::monomial(Rational::one(), spec.d - spec.k_sum() - 1);
    for (g, &k) in gammas.iter().zip(&spec.k_list) {
        t = &t * &QPoly::from_rationals(vec![-g.clone(), Rational::one()]).pow(k as u32);
    }
    let dp = p.derivative(Var::Z);
    // t is monic of degree d - 1, so alpha is the top coefficient
    let alpha = dp.coefficients_in(Var::Z).remove(&((spec.d - 1) as u32)).unwrap_or_else(|| QMultiPoly::zero(Q));
    if alpha.is_zero() {
        return Ok(false);
    }
    Ok(&alpha * &QMultiPoly::from_unipoly(&t, Var::Z) == dp)
}

/// [`verify_ramification`] for a polynomial in `z` alone.
pub fn verify_ramification_poly(p: &QPoly, spec: &NCritSpec) -> Result<bool> {
    verify_ramification(&QMultiPoly::from_unipoly(p, Var::Z), spec)
}
