//! Scalar fields: the rationals, prime fields `F_p` and quadratic extensions `F_{p^2}`.
//!
//! Elements carry a field tag so that polynomials can check that their operands
//! agree before combining them.

use std::fmt;

use serde::Serialize;

use super::rational::Rational;
use crate::error::{Error, Result};

/// Arithmetic shared by every coefficient field in the crate.
pub trait Field: Clone + PartialEq + Eq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    /// Identifies the field an element belongs to.
    type Tag: Clone + PartialEq + Eq + fmt::Debug + Send + Sync + 'static;

    fn tag(&self) -> Self::Tag;
    fn zero(tag: &Self::Tag) -> Self;
    fn one(tag: &Self::Tag) -> Self;
    fn from_i64(n: i64, tag: &Self::Tag) -> Self;
    /// 0 for the rationals.
    fn characteristic(tag: &Self::Tag) -> u64;

    fn is_zero(&self) -> bool;
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn negate(&self) -> Self;
    fn inverse(&self) -> Option<Self>;

    fn is_one(&self) -> bool {
        *self == Self::one(&self.tag())
    }

    fn pow_u64(&self, mut exp: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.tag());
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.times(&base);
            }
            base = base.times(&base);
            exp >>= 1;
        }
        acc
    }
}

/// Tag of the rational field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct Q;

impl Field for Rational {
    type Tag = Q;

    fn tag(&self) -> Q {
        Q
    }
    fn zero(_: &Q) -> Self {
        Rational::zero()
    }
    fn one(_: &Q) -> Self {
        Rational::one()
    }
    fn from_i64(n: i64, _: &Q) -> Self {
        Rational::from_int(n)
    }
    fn characteristic(_: &Q) -> u64 {
        0
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negate(&self) -> Self {
        -self
    }
    fn inverse(&self) -> Option<Self> {
        self.recip()
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut i = 2u64;
    while i * i <= n {
        if n % i == 0 {
            return false;
        }
        i += 1;
    }
    true
}

/// Primes in `lo..=hi`.
pub fn primes_between(lo: u64, hi: u64) -> Vec<u64> {
    (lo..=hi).filter(|&n| is_prime(n)).collect()
}

pub fn mod_inverse(a: u64, p: u64) -> Option<u64> {
    let (mut old_r, mut r) = (a as i128 % p as i128, p as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let quot = old_r / r;
        (old_r, r) = (r, old_r - quot * r);
        (old_s, s) = (s, old_s - quot * s);
    }
    if old_r != 1 {
        return None;
    }
    Some(old_s.rem_euclid(p as i128) as u64)
}

/// The prime field `F_p`, used as a tag.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct PrimeField(u64);

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(PrimeField(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn modulus(&self) -> u64 {
        self.0
    }

    pub fn elem(&self, v: i64) -> Fp {
        Fp {
            value: v.rem_euclid(self.0 as i64) as u64,
            modulus: self.0,
        }
    }

    /// All field elements in increasing order of representative.
    pub fn elements(&self) -> impl Iterator<Item = Fp> + '_ {
        (0..self.0).map(|v| Fp { value: v, modulus: self.0 })
    }
}

/// Element of `F_p`, stored as its representative in `[0, p)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fp {
    value: u64,
    modulus: u64,
}

impl Fp {
    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    fn check(&self, rhs: &Fp) {
        assert_eq!(self.modulus, rhs.modulus, "prime field elements with different moduli");
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl fmt::Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus)
    }
}

impl Field for Fp {
    type Tag = PrimeField;

    fn tag(&self) -> PrimeField {
        PrimeField(self.modulus)
    }
    fn zero(tag: &PrimeField) -> Self {
        tag.elem(0)
    }
    fn one(tag: &PrimeField) -> Self {
        tag.elem(1)
    }
    fn from_i64(n: i64, tag: &PrimeField) -> Self {
        tag.elem(n)
    }
    fn characteristic(tag: &PrimeField) -> u64 {
        tag.0
    }
    fn is_zero(&self) -> bool {
        self.value == 0
    }
    fn plus(&self, rhs: &Self) -> Self {
        self.check(rhs);
        let v = (self.value as u128 + rhs.value as u128) % self.modulus as u128;
        Fp { value: v as u64, modulus: self.modulus }
    }
    fn minus(&self, rhs: &Self) -> Self {
        self.check(rhs);
        let v = (self.value as u128 + self.modulus as u128 - rhs.value as u128) % self.modulus as u128;
        Fp { value: v as u64, modulus: self.modulus }
    }
    fn times(&self, rhs: &Self) -> Self {
        self.check(rhs);
        let v = (self.value as u128 * rhs.value as u128) % self.modulus as u128;
        Fp { value: v as u64, modulus: self.modulus }
    }
    fn negate(&self) -> Self {
        Fp {
            value: (self.modulus - self.value) % self.modulus,
            modulus: self.modulus,
        }
    }
    fn inverse(&self) -> Option<Self> {
        mod_inverse(self.value, self.modulus).map(|v| Fp { value: v, modulus: self.modulus })
    }
}

/// `F_p[t]/(t^2 + b t + c)` for an irreducible quadratic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct QuadraticExtension {
    base: PrimeField,
    b: u64,
    c: u64,
}

impl QuadraticExtension {
    /// Uses the lexicographically first irreducible `t^2 + b t + c`.
    pub fn new(base: PrimeField) -> Self {
        let p = base.modulus();
        for b in 0..p {
            for c in 0..p {
                let has_root = (0..p).any(|x| (x * x % p + b * x % p + c) % p == 0);
                if !has_root {
                    return QuadraticExtension { base, b, c };
                }
            }
        }
        unreachable!("every prime field has an irreducible quadratic")
    }

    pub fn base(&self) -> PrimeField {
        self.base
    }

    /// `(b, c)` of the defining polynomial `t^2 + b t + c`.
    pub fn defining_coefficients(&self) -> (u64, u64) {
        (self.b, self.c)
    }

    pub fn elem(&self, c0: Fp, c1: Fp) -> Fp2 {
        Fp2 { c0, c1, ext: *self }
    }

    pub fn embed(&self, x: &Fp) -> Fp2 {
        Fp2 { c0: *x, c1: self.base.elem(0), ext: *self }
    }

    /// All `p^2` elements.
    pub fn elements(&self) -> Vec<Fp2> {
        let mut out = Vec::new();
        for c1 in self.base.elements() {
            for c0 in self.base.elements() {
                out.push(self.elem(c0, c1));
            }
        }
        out
    }
}

/// Element `c0 + c1 t` of a quadratic extension of `F_p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Fp2 {
    c0: Fp,
    c1: Fp,
    ext: QuadraticExtension,
}

impl Fp2 {
    pub fn coefficients(&self) -> [Fp; 2] {
        [self.c0, self.c1]
    }

    /// True when the element lies in the prime subfield.
    pub fn in_base_field(&self) -> bool {
        self.c1.is_zero()
    }
}

impl fmt::Display for Fp2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.c1.is_zero() {
            write!(f, "{}", self.c0)
        } else {
            write!(f, "{}+{}t", self.c0, self.c1)
        }
    }
}

impl Field for Fp2 {
    type Tag = QuadraticExtension;

    fn tag(&self) -> QuadraticExtension {
        self.ext
    }
    fn zero(tag: &QuadraticExtension) -> Self {
        tag.embed(&tag.base.elem(0))
    }
    fn one(tag: &QuadraticExtension) -> Self {
        tag.embed(&tag.base.elem(1))
    }
    fn from_i64(n: i64, tag: &QuadraticExtension) -> Self {
        tag.embed(&tag.base.elem(n))
    }
    fn characteristic(tag: &QuadraticExtension) -> u64 {
        tag.base.modulus()
    }
    fn is_zero(&self) -> bool {
        self.c0.is_zero() && self.c1.is_zero()
    }
    fn plus(&self, rhs: &Self) -> Self {
        assert_eq!(self.ext, rhs.ext, "elements of different extensions");
        self.ext.elem(self.c0.plus(&rhs.c0), self.c1.plus(&rhs.c1))
    }
    fn minus(&self, rhs: &Self) -> Self {
        assert_eq!(self.ext, rhs.ext, "elements of different extensions");
        self.ext.elem(self.c0.minus(&rhs.c0), self.c1.minus(&rhs.c1))
    }
    fn times(&self, rhs: &Self) -> Self {
        assert_eq!(self.ext, rhs.ext, "elements of different extensions");
        // t^2 = -b t - c
        let base = self.ext.base;
        let b = base.elem(self.ext.b as i64);
        let c = base.elem(self.ext.c as i64);
        let hh = self.c1.times(&rhs.c1);
        let c0 = self.c0.times(&rhs.c0).minus(&hh.times(&c));
        let c1 = self
            .c0
            .times(&rhs.c1)
            .plus(&self.c1.times(&rhs.c0))
            .minus(&hh.times(&b));
        self.ext.elem(c0, c1)
    }
    fn negate(&self) -> Self {
        self.ext.elem(self.c0.negate(), self.c1.negate())
    }
    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        // x^(p^2 - 2) in a field of order p^2
        let p = self.ext.base.modulus();
        Some(self.pow_u64(p * p - 2))
    }
}
