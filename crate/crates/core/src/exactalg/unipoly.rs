//! Dense univariate polynomials over a [`Field`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::field::{Field, Q};
use super::rational::Rational;
use crate::error::{Error, Result};

/// Dense polynomial, coefficients lowest degree first, no trailing zeros.
#[derive(Clone, PartialEq, Eq)]
pub struct UniPoly<F: Field> {
    coeffs: Vec<F>,
    field: F::Tag,
}

pub type QPoly = UniPoly<Rational>;

impl<F: Field> UniPoly<F> {
    pub fn new(coeffs: Vec<F>, field: F::Tag) -> Self {
        debug_assert!(coeffs.iter().all(|c| c.tag() == field));
        let mut p = UniPoly { coeffs, field };
        p.trim();
        p
    }

    pub fn zero(field: F::Tag) -> Self {
        UniPoly { coeffs: Vec::new(), field }
    }

    pub fn one(field: F::Tag) -> Self {
        Self::constant(F::one(&field), field)
    }

    pub fn constant(c: F, field: F::Tag) -> Self {
        Self::new(vec![c], field)
    }

    /// `c * z^n`.
    pub fn monomial(c: F, n: usize) -> Self {
        let field = c.tag();
        let mut coeffs = vec![F::zero(&field); n];
        coeffs.push(c);
        Self::new(coeffs, field)
    }

    /// The identity polynomial `z`.
    pub fn x(field: F::Tag) -> Self {
        Self::monomial(F::one(&field), 1)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn field(&self) -> &F::Tag {
        &self.field
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<F> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> F {
        self.coeffs.get(i).cloned().unwrap_or_else(|| F::zero(&self.field))
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial counted as 0.
    pub fn deg0(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> F {
        self.coeffs.last().cloned().unwrap_or_else(|| F::zero(&self.field))
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    fn same_field(&self, other: &Self) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    fn assert_same_field(&self, other: &Self) {
        assert!(self.field == other.field, "polynomials over different fields");
    }

    pub fn scale(&self, c: &F) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.times(c)).collect(), self.field.clone())
    }

    /// Multiply by `z^n`.
    pub fn shift(&self, n: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![F::zero(&self.field); n];
        coeffs.extend(self.coeffs.iter().cloned());
        Self::new(coeffs, self.field.clone())
    }

    pub fn monic(&self) -> Self {
        match self.coeffs.last() {
            None => self.clone(),
            Some(lc) => self.scale(&lc.inverse().expect("nonzero leading coefficient")),
        }
    }

    pub fn eval(&self, x: &F) -> F {
        self.coeffs
            .iter()
            .rev()
            .fold(F::zero(&self.field), |acc, c| acc.times(x).plus(c))
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.times(&F::from_i64(i as i64, &self.field)))
            .collect();
        Self::new(coeffs, self.field.clone())
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.field.clone());
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            exp >>= 1;
        }
        acc
    }

    /// `self(inner(z))`.
    pub fn compose(&self, inner: &Self) -> Self {
        self.assert_same_field(inner);
        self.coeffs.iter().rev().fold(Self::zero(self.field.clone()), |acc, c| {
            &(&acc * inner) + &Self::constant(c.clone(), self.field.clone())
        })
    }

    /// Euclidean division; `deg(rem) < deg(divisor)`.
    pub fn divmod(&self, divisor: &Self) -> Result<(Self, Self)> {
        self.same_field(divisor)?;
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lc_inv = divisor.leading().inverse().expect("nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        let n = self.coeffs.len();
        if n <= dd {
            return Ok((Self::zero(self.field.clone()), self.clone()));
        }
        let mut quot = vec![F::zero(&self.field); n - dd];
        for i in (0..n - dd).rev() {
            let c = rem[i + dd].times(&lc_inv);
            if c.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[i + j] = rem[i + j].minus(&c.times(dc));
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        Ok((Self::new(quot, self.field.clone()), Self::new(rem, self.field.clone())))
    }

    pub fn rem(&self, divisor: &Self) -> Result<Self> {
        Ok(self.divmod(divisor)?.1)
    }

    /// Quotient when `divisor` divides `self` exactly.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        let (q, r) = self.divmod(divisor).ok()?;
        r.is_zero().then_some(q)
    }

    pub fn divides(&self, other: &Self) -> bool {
        !self.is_zero() && other.rem(self).map(|r| r.is_zero()).unwrap_or(false)
    }

    /// Monic gcd; zero only when both inputs are zero.
    pub fn gcd(&self, other: &Self) -> Self {
        self.assert_same_field(other);
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Returns `(g, s, t)` with `s*self + t*other = g` and `g` monic.
    pub fn ext_gcd(&self, other: &Self) -> (Self, Self, Self) {
        self.assert_same_field(other);
        let f = self.field.clone();
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Self::one(f.clone()), Self::zero(f.clone()));
        let (mut t0, mut t1) = (Self::zero(f.clone()), Self::one(f.clone()));
        while !r1.is_zero() {
            let (q, r) = r0.divmod(&r1).expect("nonzero divisor");
            r0 = std::mem::replace(&mut r1, r);
            let s = &s0 - &(&q * &s1);
            s0 = std::mem::replace(&mut s1, s);
            let t = &t0 - &(&q * &t1);
            t0 = std::mem::replace(&mut t1, t);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = r0.leading().inverse().expect("nonzero leading coefficient");
        (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
    }

    /// Inverse of `self` in `F[z]/(modulus)`, when coprime.
    pub fn inverse_mod(&self, modulus: &Self) -> Option<Self> {
        let (g, s, _) = self.ext_gcd(modulus);
        if g.degree() == Some(0) {
            s.rem(modulus).ok()
        } else {
            None
        }
    }

    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).deg0() == 0
    }

    /// Substitute a different field's values for the coefficients.
    pub fn map_coeffs<G: Field>(&self, field: G::Tag, f: impl Fn(&F) -> G) -> UniPoly<G> {
        UniPoly::new(self.coeffs.iter().map(f).collect(), field)
    }

    /// Formats with the given variable name, highest degree first.
    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            let cs = c.to_string();
            parts.push(if mono.is_empty() {
                cs
            } else if c.is_one() {
                mono
            } else if cs == "-1" {
                format!("-{mono}")
            } else {
                format!("({cs})*{mono}")
            });
        }
        parts.join(" + ")
    }
}

impl UniPoly<Rational> {
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Rational::from_int(c)).collect(), Q)
    }

    pub fn from_rationals(coeffs: Vec<Rational>) -> Self {
        Self::new(coeffs, Q)
    }

    /// Monic polynomial with the given roots.
    pub fn from_roots(roots: &[Rational]) -> Self {
        roots.iter().fold(Self::one(Q), |acc, r| {
            &acc * &Self::new(vec![-r, Rational::one()], Q)
        })
    }

    /// Lagrange interpolation through points with distinct abscissae.
    pub fn interpolate(points: &[(Rational, Rational)]) -> Self {
        let mut out = Self::zero(Q);
        for (i, (xi, yi)) in points.iter().enumerate() {
            if yi.is_zero() {
                continue;
            }
            let mut basis = Self::one(Q);
            let mut denom = Rational::one();
            for (j, (xj, _)) in points.iter().enumerate() {
                if i != j {
                    basis = &basis * &Self::new(vec![-xj, Rational::one()], Q);
                    denom = &denom * &(xi - xj);
                }
            }
            out = &out + &basis.scale(&(yi / &denom));
        }
        out
    }

    /// Squarefree part `a / gcd(a, a')`, made monic.
    pub fn squarefree_part(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        self.exact_div(&g).expect("gcd divides").monic()
    }

    /// Yun's algorithm: monic squarefree `(factor, multiplicity)` pairs, constants dropped.
    pub fn squarefree_decomposition(&self) -> Vec<(Self, usize)> {
        let mut out = Vec::new();
        if self.deg0() == 0 {
            return out;
        }
        let f = self.monic();
        let fp = f.derivative();
        let a0 = f.gcd(&fp);
        let mut b = f.exact_div(&a0).expect("gcd divides");
        let mut c = fp.exact_div(&a0).expect("gcd divides");
        let mut d = &c - &b.derivative();
        let mut i = 1;
        while b.deg0() > 0 {
            let a = b.gcd(&d);
            if a.deg0() > 0 {
                out.push((a.clone(), i));
            }
            b = b.exact_div(&a).expect("gcd divides");
            c = d.exact_div(&a).expect("gcd divides");
            d = &c - &b.derivative();
            i += 1;
        }
        out
    }
}

impl<F: Field> fmt::Display for UniPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("z"))
    }
}

impl<F: Field> fmt::Debug for UniPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly[{}]", self.display_in("z"))
    }
}

impl<F: Field> Add for &UniPoly<F> {
    type Output = UniPoly<F>;
    fn add(self, rhs: &UniPoly<F>) -> UniPoly<F> {
        self.assert_same_field(rhs);
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i).plus(&rhs.coeff(i))).collect();
        UniPoly::new(coeffs, self.field.clone())
    }
}

impl<F: Field> Sub for &UniPoly<F> {
    type Output = UniPoly<F>;
    fn sub(self, rhs: &UniPoly<F>) -> UniPoly<F> {
        self.assert_same_field(rhs);
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i).minus(&rhs.coeff(i))).collect();
        UniPoly::new(coeffs, self.field.clone())
    }
}

impl<F: Field> Mul for &UniPoly<F> {
    type Output = UniPoly<F>;
    fn mul(self, rhs: &UniPoly<F>) -> UniPoly<F> {
        self.assert_same_field(rhs);
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero(self.field.clone());
        }
        let mut coeffs = vec![F::zero(&self.field); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].plus(&a.times(b));
            }
        }
        UniPoly::new(coeffs, self.field.clone())
    }
}

impl<F: Field> Neg for &UniPoly<F> {
    type Output = UniPoly<F>;
    fn neg(self) -> UniPoly<F> {
        UniPoly::new(self.coeffs.iter().map(|c| c.negate()).collect(), self.field.clone())
    }
}

macro_rules! owned_binop {
    ($trait:ident, $method:ident) => {
        impl<F: Field> $trait for UniPoly<F> {
            type Output = UniPoly<F>;
            fn $method(self, rhs: UniPoly<F>) -> UniPoly<F> {
                (&self).$method(&rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

/// Which arithmetic operation [`UniPoly::try_op`] performs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PolyOp<F: Field> {
    Add(UniPoly<F>),
    Mul(UniPoly<F>),
    Compose(UniPoly<F>),
    DivMod(UniPoly<F>),
    Derivative,
    Eval(F),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PolyOpOutput<F: Field> {
    Poly(UniPoly<F>),
    QuotRem(UniPoly<F>, UniPoly<F>),
    Value(F),
}

impl<F: Field> UniPoly<F> {
    /// Checked form of the arithmetic operations: field mismatches and
    /// division by zero come back as errors instead of panics.
    pub fn try_op(&self, op: PolyOp<F>) -> Result<PolyOpOutput<F>> {
        Ok(match op {
            PolyOp::Add(b) => {
                self.same_field(&b)?;
                PolyOpOutput::Poly(self + &b)
            }
            PolyOp::Mul(b) => {
                self.same_field(&b)?;
                PolyOpOutput::Poly(self * &b)
            }
            PolyOp::Compose(b) => {
                self.same_field(&b)?;
                PolyOpOutput::Poly(self.compose(&b))
            }
            PolyOp::DivMod(b) => {
                let (q, r) = self.divmod(&b)?;
                PolyOpOutput::QuotRem(q, r)
            }
            PolyOp::Derivative => PolyOpOutput::Poly(self.derivative()),
            PolyOp::Eval(x) => {
                if x.tag() != self.field {
                    return Err(Error::FieldMismatch);
                }
                PolyOpOutput::Value(self.eval(&x))
            }
        })
    }
}

impl<F: Field> Serialize for UniPoly<F> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.coeffs.iter().map(|c| c.to_string()))
    }
}

impl<'de> Deserialize<'de> for UniPoly<Rational> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let coeffs = Vec::<Rational>::deserialize(deserializer)?;
        Ok(UniPoly::new(coeffs, Q))
    }
}
