//! Sparse multivariate polynomials in the fixed variables `z, a, c, g, h`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::field::{Field, Fp, PrimeField, Q};
use super::rational::Rational;
use super::unipoly::UniPoly;
use crate::error::{Error, Result};

pub const NVARS: usize = 5;

/// Default term cap for operations that can blow up.
pub const DEFAULT_TERM_CAP: usize = 1_000_000;

/// Variables: the dynamical coordinate `z`, the map parameters `a` and `c`,
/// a symbolic critical point `g`, and a spare `h`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    Z,
    A,
    C,
    G,
    H,
}

impl Var {
    pub const ALL: [Var; NVARS] = [Var::Z, Var::A, Var::C, Var::G, Var::H];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        ["z", "a", "c", "g", "h"][self.index()]
    }

    pub fn from_name(s: &str) -> Option<Var> {
        Var::ALL.into_iter().find(|v| v.name() == s)
    }
}

pub type Exponent = [u32; NVARS];

#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly<F: Field> {
    terms: BTreeMap<Exponent, F>,
    field: F::Tag,
}

pub type QMultiPoly = MultiPoly<Rational>;

fn unit(v: Var, e: u32) -> Exponent {
    let mut x = [0; NVARS];
    x[v.index()] = e;
    x
}

fn add_exp(a: &Exponent, b: &Exponent) -> Exponent {
    let mut x = *a;
    for i in 0..NVARS {
        x[i] += b[i];
    }
    x
}

impl<F: Field> MultiPoly<F> {
    pub fn zero(field: F::Tag) -> Self {
        MultiPoly { terms: BTreeMap::new(), field }
    }

    pub fn one(field: F::Tag) -> Self {
        Self::constant(F::one(&field), field)
    }

    pub fn constant(c: F, field: F::Tag) -> Self {
        Self::monomial(c, [0; NVARS], field)
    }

    pub fn monomial(c: F, exp: Exponent, field: F::Tag) -> Self {
        let mut p = Self::zero(field);
        if !c.is_zero() {
            p.terms.insert(exp, c);
        }
        p
    }

    pub fn var(v: Var, field: F::Tag) -> Self {
        Self::monomial(F::one(&field), unit(v, 1), field)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Exponent, F)>, field: F::Tag) -> Self {
        let mut p = Self::zero(field);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    /// Embed a univariate polynomial in the variable `v`.
    pub fn from_unipoly(p: &UniPoly<F>, v: Var) -> Self {
        Self::from_terms(
            p.coeffs().iter().enumerate().map(|(i, c)| (unit(v, i as u32), c.clone())),
            p.field().clone(),
        )
    }

    fn add_term(&mut self, e: Exponent, c: F) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(old) => {
                let s = old.plus(&c);
                if s.is_zero() {
                    self.terms.remove(&e);
                } else {
                    *old = s;
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn field(&self) -> &F::Tag {
        &self.field
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &F)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    pub fn coeff(&self, exp: &Exponent) -> F {
        self.terms.get(exp).cloned().unwrap_or_else(|| F::zero(&self.field))
    }

    pub fn constant_term(&self) -> F {
        self.coeff(&[0; NVARS])
    }

    pub fn degree_in(&self, v: Var) -> Option<u32> {
        self.terms.keys().map(|e| e[v.index()]).max()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Variables that actually occur.
    pub fn variables(&self) -> Vec<Var> {
        Var::ALL
            .into_iter()
            .filter(|v| self.terms.keys().any(|e| e[v.index()] > 0))
            .collect()
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.field != other.field {
            Err(Error::FieldMismatch)
        } else {
            Ok(())
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&-other)
    }

    pub fn scale(&self, c: &F) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, x)| (*e, x.times(c))), self.field.clone())
    }

    /// Product, failing if the result would exceed `cap` terms.
    pub fn checked_mul(&self, other: &Self, cap: usize) -> Result<Self> {
        self.check(other)?;
        let mut out = Self::zero(self.field.clone());
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term(add_exp(e1, e2), c1.times(c2));
            }
            if out.terms.len() > cap {
                return Err(Error::ResourceCap { terms: out.terms.len(), cap });
            }
        }
        Ok(out)
    }

    /// Raise every variable to the `p`-th power and every coefficient to the
    /// `p`-th power. In characteristic `p` this is `self^p`.
    pub fn frobenius(&self) -> Self {
        let p = F::characteristic(&self.field);
        assert!(p > 0, "Frobenius needs positive characteristic");
        Self::from_terms(
            self.terms.iter().map(|(e, c)| {
                let mut x = *e;
                for v in x.iter_mut() {
                    *v *= p as u32;
                }
                (x, c.pow_u64(p))
            }),
            self.field.clone(),
        )
    }

    pub fn checked_pow(&self, n: u64, cap: usize) -> Result<Self> {
        let p = F::characteristic(&self.field);
        if n == 0 {
            return Ok(Self::one(self.field.clone()));
        }
        if p > 0 && n % p == 0 {
            return Ok(self.checked_pow(n / p, cap)?.frobenius());
        }
        if self.terms.len() == 1 {
            let (e, c) = self.terms.iter().next().expect("one term");
            let mut x = *e;
            for v in x.iter_mut() {
                *v *= n as u32;
            }
            return Ok(Self::monomial(c.pow_u64(n), x, self.field.clone()));
        }
        let mut acc = Self::one(self.field.clone());
        let mut base = self.clone();
        let mut k = n;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.checked_mul(&base, cap)?;
            }
            k >>= 1;
            if k > 0 {
                base = base.checked_mul(&base, cap)?;
            }
        }
        Ok(acc)
    }

    pub fn pow(&self, n: u64) -> Self {
        self.checked_pow(n, usize::MAX).expect("uncapped power")
    }

    pub fn derivative(&self, v: Var) -> Self {
        let i = v.index();
        Self::from_terms(
            self.terms.iter().filter(|(e, _)| e[i] > 0).map(|(e, c)| {
                let mut x = *e;
                x[i] -= 1;
                (x, c.times(&F::from_i64(e[i] as i64, &self.field)))
            }),
            self.field.clone(),
        )
    }

    /// Replace `v` by `value`.
    pub fn substitute(&self, v: Var, value: &Self) -> Result<Self> {
        self.check(value)?;
        let i = v.index();
        let mut powers: BTreeMap<u32, Self> = BTreeMap::new();
        let mut out = Self::zero(self.field.clone());
        for (e, c) in &self.terms {
            let k = e[i];
            if !powers.contains_key(&k) {
                powers.insert(k, value.checked_pow(k as u64, DEFAULT_TERM_CAP)?);
            }
            let mut rest = *e;
            rest[i] = 0;
            let mono = Self::monomial(c.clone(), rest, self.field.clone());
            out = out.try_add(&mono.checked_mul(&powers[&k], DEFAULT_TERM_CAP)?)?;
        }
        Ok(out)
    }

    pub fn substitute_const(&self, v: Var, value: &F) -> Self {
        self.substitute(v, &Self::constant(value.clone(), self.field.clone()))
            .expect("constant substitution cannot blow up")
    }

    /// Evaluate into a field `E` reached through `embed`; `point` is indexed by [`Var::index`].
    pub fn eval_in<E: Field>(&self, point: &[E; NVARS], embed: impl Fn(&F) -> E) -> E {
        let tag = point[0].tag();
        let mut acc = E::zero(&tag);
        for (e, c) in &self.terms {
            let mut t = embed(c);
            for i in 0..NVARS {
                if e[i] > 0 {
                    t = t.times(&point[i].pow_u64(e[i] as u64));
                }
            }
            acc = acc.plus(&t);
        }
        acc
    }

    pub fn eval(&self, point: &[F; NVARS]) -> F {
        self.eval_in(point, |c| c.clone())
    }

    /// Coefficients of the powers of `v`, as polynomials in the other variables.
    pub fn coefficients_in(&self, v: Var) -> BTreeMap<u32, Self> {
        let i = v.index();
        let mut out: BTreeMap<u32, Self> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut rest = *e;
            rest[i] = 0;
            out.entry(e[i])
                .or_insert_with(|| Self::zero(self.field.clone()))
                .add_term(rest, c.clone());
        }
        out
    }

    /// The univariate polynomial in `v`, if no other variable occurs.
    pub fn to_unipoly(&self, v: Var) -> Option<UniPoly<F>> {
        let i = v.index();
        let deg = self.degree_in(v).unwrap_or(0) as usize;
        let mut coeffs = vec![F::zero(&self.field); deg + 1];
        for (e, c) in &self.terms {
            if e.iter().enumerate().any(|(j, &x)| j != i && x > 0) {
                return None;
            }
            coeffs[e[i] as usize] = c.clone();
        }
        Some(UniPoly::new(coeffs, self.field.clone()))
    }

    pub fn map_coeffs<G: Field>(&self, field: G::Tag, f: impl Fn(&F) -> G) -> MultiPoly<G> {
        MultiPoly::from_terms(self.terms.iter().map(|(e, c)| (*e, f(c))), field)
    }

    pub fn try_map_coeffs<G: Field>(
        &self,
        field: G::Tag,
        f: impl Fn(&F) -> Result<G>,
    ) -> Result<MultiPoly<G>> {
        let mut out = MultiPoly::zero(field);
        for (e, c) in &self.terms {
            out.add_term(*e, f(c)?);
        }
        Ok(out)
    }
}

impl MultiPoly<Rational> {
    /// Coefficientwise reduction to `F_p`; fails if `p` divides a denominator.
    pub fn reduce_mod(&self, field: &PrimeField) -> Result<MultiPoly<Fp>> {
        let p = field.modulus();
        self.try_map_coeffs(field.clone(), |c| {
            c.mod_p(p)
                .map(|v| field.elem(v as i64))
                .ok_or_else(|| Error::NotReducible(c.to_string(), p))
        })
    }

    pub fn q_var(v: Var) -> Self {
        Self::var(v, Q)
    }

    pub fn q_const(c: impl Into<Rational>) -> Self {
        Self::constant(c.into(), Q)
    }
}

pub fn monomial_key(e: &Exponent) -> String {
    let parts: Vec<String> = Var::ALL
        .into_iter()
        .filter(|v| e[v.index()] > 0)
        .map(|v| match e[v.index()] {
            1 => v.name().to_string(),
            k => format!("{}^{}", v.name(), k),
        })
        .collect();
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

pub fn parse_monomial_key(s: &str) -> Result<Exponent> {
    let mut e = [0; NVARS];
    if s.trim() == "1" {
        return Ok(e);
    }
    for part in s.split('*') {
        let part = part.trim();
        let (name, k) = match part.split_once('^') {
            Some((n, k)) => (
                n,
                k.parse::<u32>()
                    .map_err(|_| Error::InvalidInput(format!("bad exponent in {part:?}")))?,
            ),
            None => (part, 1),
        };
        let v = Var::from_name(name)
            .ok_or_else(|| Error::InvalidInput(format!("unknown variable {name:?}")))?;
        e[v.index()] += k;
    }
    Ok(e)
}

impl<F: Field> fmt::Display for MultiPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(e, c)| {
                let key = monomial_key(e);
                if key == "1" {
                    format!("{c}")
                } else if c.is_one() {
                    key
                } else {
                    format!("({c})*{key}")
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

impl<F: Field> fmt::Debug for MultiPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<F: Field> Serialize for MultiPoly<F> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let map: BTreeMap<String, String> = self
            .terms
            .iter()
            .map(|(e, c)| (monomial_key(e), c.to_string()))
            .collect();
        map.serialize(s)
    }
}

impl<'de> Deserialize<'de> for MultiPoly<Rational> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let map = BTreeMap::<String, Rational>::deserialize(d)?;
        let mut out = MultiPoly::zero(Q);
        for (k, c) in map {
            let e = parse_monomial_key(&k).map_err(D::Error::custom)?;
            out.add_term(e, c);
        }
        Ok(out)
    }
}

impl<F: Field> Add for &MultiPoly<F> {
    type Output = MultiPoly<F>;
    fn add(self, rhs: &MultiPoly<F>) -> MultiPoly<F> {
        self.try_add(rhs).expect("field mismatch")
    }
}

impl<F: Field> Sub for &MultiPoly<F> {
    type Output = MultiPoly<F>;
    fn sub(self, rhs: &MultiPoly<F>) -> MultiPoly<F> {
        self.try_sub(rhs).expect("field mismatch")
    }
}

impl<F: Field> Mul for &MultiPoly<F> {
    type Output = MultiPoly<F>;
    fn mul(self, rhs: &MultiPoly<F>) -> MultiPoly<F> {
        self.checked_mul(rhs, usize::MAX).expect("field mismatch")
    }
}

impl<F: Field> Neg for &MultiPoly<F> {
    type Output = MultiPoly<F>;
    fn neg(self) -> MultiPoly<F> {
        MultiPoly::from_terms(self.terms.iter().map(|(e, c)| (*e, c.negate())), self.field.clone())
    }
}
