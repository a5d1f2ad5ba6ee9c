//! Rational roots of arbitrary-degree polynomials and complete factorization
//! over the rationals up to degree four.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use super::field::Q;
use super::rational::Rational;
use super::unipoly::QPoly;
use crate::error::{Error, Result};

/// Primitive integer polynomial with the same roots, lowest degree first.
pub fn integer_model(f: &QPoly) -> Vec<BigInt> {
    let lcm = f
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = f
        .coeffs()
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();
    let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if content.is_zero() {
        return ints;
    }
    ints.into_iter().map(|c| c / &content).collect()
}

fn positive_divisors(n: &BigUint) -> Vec<BigUint> {
    let mut primes: Vec<(BigUint, u32)> = Vec::new();
    let mut m = n.clone();
    let mut p = BigUint::from(2u32);
    while &p * &p <= m {
        let mut e = 0;
        while (&m % &p).is_zero() {
            m /= &p;
            e += 1;
        }
        if e > 0 {
            primes.push((p.clone(), e));
        }
        p += 1u32;
    }
    if m > BigUint::one() {
        primes.push((m, 1));
    }
    let mut divs = vec![BigUint::one()];
    for (p, e) in primes {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for d in &divs {
            let mut pk = BigUint::one();
            for _ in 0..=e {
                next.push(d * &pk);
                pk *= &p;
            }
        }
        divs = next;
    }
    divs.sort();
    divs
}

fn eval_int(coeffs: &[BigInt], num: &BigInt, den: &BigInt) -> BigInt {
    // den^n f(num/den)
    let n = coeffs.len() - 1;
    let mut acc = BigInt::zero();
    let mut den_pow = BigInt::one();
    let mut terms = vec![BigInt::zero(); coeffs.len()];
    for i in (0..=n).rev() {
        terms[i] = den_pow.clone();
        den_pow *= den;
    }
    let mut num_pow = BigInt::one();
    for (i, c) in coeffs.iter().enumerate() {
        acc += c * &num_pow * &terms[i];
        num_pow *= num;
    }
    acc
}

/// Distinct rational roots with multiplicity, sorted increasingly.
pub fn rational_roots(f: &QPoly) -> Vec<(Rational, usize)> {
    if f.deg0() == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut g = f.monic();
    let mut zero_mult = 0;
    while g.coeff(0).is_zero() && g.deg0() > 0 {
        g = g.exact_div(&QPoly::x(Q)).expect("z divides");
        zero_mult += 1;
    }
    if zero_mult > 0 {
        out.push((Rational::zero(), zero_mult));
    }
    if g.deg0() > 0 {
        let model = integer_model(&g);
        let a0 = model[0].magnitude().clone();
        let an = model.last().expect("nonzero").magnitude().clone();
        let nums = positive_divisors(&a0);
        let dens = positive_divisors(&an);
        let mut candidates = Vec::new();
        for n in &nums {
            for d in &dens {
                if n.gcd(d) != BigUint::one() {
                    continue;
                }
                let (n, d) = (BigInt::from(n.clone()), BigInt::from(d.clone()));
                for s in [n.clone(), -n] {
                    if eval_int(&model, &s, &d).is_zero() {
                        candidates.push(Rational::new(s, d.clone()));
                    }
                }
            }
        }
        for r in candidates {
            let lin = QPoly::from_rationals(vec![-&r, Rational::one()]);
            let mut m = 0;
            while let Some(q) = g.exact_div(&lin) {
                g = q;
                m += 1;
            }
            out.push((r, m));
        }
    }
    out.sort();
    out
}

/// `content * prod factor^multiplicity`, factors monic and irreducible over Q.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Factorization {
    pub content: Rational,
    pub factors: Vec<(QPoly, usize)>,
}

impl Factorization {
    pub fn expand(&self) -> QPoly {
        self.factors.iter().fold(
            QPoly::constant(self.content.clone(), Q),
            |acc, (f, m)| &acc * &f.pow(*m as u32),
        )
    }

    pub fn is_irreducible(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].1 == 1
    }

    /// Degrees of the distinct irreducible factors, sorted.
    pub fn degree_pattern(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.factors.iter().map(|(f, _)| f.deg0()).collect();
        v.sort();
        v
    }
}

/// Resolvent cubic of a monic quartic `z^4 + a z^3 + b z^2 + c z + d`,
/// with roots `x1 x2 + x3 x4` and its conjugates.
pub fn resolvent_cubic(f: &QPoly) -> QPoly {
    assert_eq!(f.degree(), Some(4), "resolvent cubic needs a quartic");
    let f = f.monic();
    let (a, b, c, d) = (f.coeff(3), f.coeff(2), f.coeff(1), f.coeff(0));
    let four = Rational::from_int(4);
    QPoly::from_rationals(vec![
        -(&(&(&a * &a) * &d) - &(&(&four * &b) * &d) + &c * &c),
        &(&a * &c) - &(&four * &d),
        -b,
        Rational::one(),
    ])
}

/// Split a monic quartic without rational roots into two rational quadratics.
pub fn quadratic_split(f: &QPoly) -> Option<(QPoly, QPoly)> {
    let f = f.monic();
    let (a, b, d) = (f.coeff(3), f.coeff(2), f.coeff(0));
    let two = Rational::from_int(2);
    let four = Rational::from_int(4);
    for (r, _) in rational_roots(&resolvent_cubic(&f)) {
        let Some(sv) = (&(&r * &r) - &(&four * &d)).sqrt() else {
            continue;
        };
        let Some(su) = (&(&a * &a) - &(&four * &(&b - &r))).sqrt() else {
            continue;
        };
        let (v1, v2) = (&(&r + &sv) / &two, &(&r - &sv) / &two);
        let (u1, u2) = (&(&a + &su) / &two, &(&a - &su) / &two);
        for (va, vb) in [(&v1, &v2), (&v2, &v1)] {
            let q1 = QPoly::from_rationals(vec![va.clone(), u1.clone(), Rational::one()]);
            let q2 = QPoly::from_rationals(vec![vb.clone(), u2.clone(), Rational::one()]);
            if &q1 * &q2 == f {
                return Some((q1, q2));
            }
        }
    }
    None
}

fn sort_key(f: &QPoly) -> (usize, Vec<Rational>) {
    (f.deg0(), f.coeffs().to_vec())
}

/// Complete factorization over Q for `1 <= deg f <= 4`.
pub fn factor_upto_quartic(f: &QPoly) -> Result<Factorization> {
    let deg = f.degree().ok_or(Error::ZeroPolynomial)?;
    if !(1..=4).contains(&deg) {
        return Err(Error::DegreeOutOfRange { degree: deg, min: 1, max: 4 });
    }
    let content = f.leading();
    let mut rest = f.monic();
    let mut factors = Vec::new();
    for (r, m) in rational_roots(&rest) {
        let lin = QPoly::from_rationals(vec![-&r, Rational::one()]);
        rest = rest.exact_div(&lin.pow(m as u32)).expect("root divides");
        factors.push((lin, m));
    }
    match rest.deg0() {
        0 => {}
        4 => match quadratic_split(&rest) {
            Some((q1, q2)) if q1 == q2 => factors.push((q1, 2)),
            Some((q1, q2)) => {
                factors.push((q1, 1));
                factors.push((q2, 1));
            }
            None => factors.push((rest, 1)),
        },
        _ => factors.push((rest, 1)),
    }
    factors.sort_by_key(|(f, _)| sort_key(f));
    Ok(Factorization { content, factors })
}

/// Irreducible-factor check for a polynomial of degree at most four.
pub fn is_irreducible(f: &QPoly) -> Result<bool> {
    Ok(factor_upto_quartic(f)?.is_irreducible())
}
