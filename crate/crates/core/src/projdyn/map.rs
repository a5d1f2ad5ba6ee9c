//! Rational maps of the projective line: construction, conjugation, iteration.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize};

use super::mobius::Mobius;
use super::point::Point;
use crate::error::{Error, Result};
use crate::exactalg::{homogeneous_resultant, QPoly, Q};

/// `P/Q` of degree `d = max(deg P, deg Q) >= 2` with no common root on the
/// projective line. The denominator is scaled to be monic.
#[derive(Clone, PartialEq, Eq, Serialize)]
pub struct RationalMap {
    num: QPoly,
    den: QPoly,
    #[serde(skip)]
    degree: usize,
}

pub fn make_rational_map(p: QPoly, q: QPoly) -> Result<RationalMap> {
    if q.is_zero() {
        return Err(Error::DegenerateMap("zero denominator".into()));
    }
    let d = p.deg0().max(q.deg0());
    if d < 2 {
        return Err(Error::DegreeOutOfRange { degree: d, min: 2, max: usize::MAX });
    }
    if p.is_zero() || homogeneous_resultant(&p, &q, d, d)?.is_zero() {
        return Err(Error::DegenerateMap("numerator and denominator share a root".into()));
    }
    let lc = q.leading().recip().expect("nonzero");
    Ok(RationalMap { num: p.scale(&lc), den: q.scale(&lc), degree: d })
}

/// `sum p_i l1^i l2^(d-i)`.
pub fn homogeneous_substitute(p: &QPoly, d: usize, l1: &QPoly, l2: &QPoly) -> QPoly {
    let mut pow1 = vec![QPoly::one(Q)];
    let mut pow2 = vec![QPoly::one(Q)];
    for i in 1..=d {
        pow1.push(&pow1[i - 1] * l1);
        pow2.push(&pow2[i - 1] * l2);
    }
    p.coeffs().iter().enumerate().fold(QPoly::zero(Q), |acc, (i, c)| {
        &acc + &(&pow1[i] * &pow2[d - i]).scale(c)
    })
}

impl RationalMap {
    pub fn new(p: QPoly, q: QPoly) -> Result<Self> {
        make_rational_map(p, q)
    }

    pub fn polynomial(p: QPoly) -> Result<Self> {
        make_rational_map(p, QPoly::one(Q))
    }

    pub fn num(&self) -> &QPoly {
        &self.num
    }

    pub fn den(&self) -> &QPoly {
        &self.den
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    /// `P'Q - PQ'`, the numerator of the derivative.
    pub fn wronskian(&self) -> QPoly {
        &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative())
    }

    pub fn apply(&self, x: &Point) -> Point {
        match x {
            Point::Finite(x) => {
                Point::from_homogeneous(self.num.eval(x), self.den.eval(x))
            }
            Point::Infinity => {
                Point::from_homogeneous(self.num.coeff(self.degree), self.den.coeff(self.degree))
            }
        }
    }

    pub fn conjugate(&self, m: &Mobius) -> RationalMap {
        conjugate(self, m)
    }
}

/// `m^{-1} ∘ f ∘ m`, same degree, canonically scaled.
pub fn conjugate(f: &RationalMap, m: &Mobius) -> RationalMap {
    let [a, b, c, d] = m.entries();
    let d_ = f.degree();
    let l1 = QPoly::from_rationals(vec![b.clone(), a.clone()]);
    let l2 = QPoly::from_rationals(vec![d.clone(), c.clone()]);
    let n = homogeneous_substitute(f.num(), d_, &l1, &l2);
    let e = homogeneous_substitute(f.den(), d_, &l1, &l2);
    // m^{-1}(w) = (d w - b) / (-c w + a)
    let num = &n.scale(d) - &e.scale(b);
    let den = &e.scale(a) - &n.scale(c);
    let g = make_rational_map(num, den).expect("conjugation preserves nondegeneracy");
    assert_eq!(g.degree(), d_, "conjugation preserves degree");
    g
}

/// `x, f(x), ..., f^n(x)`.
pub fn orbit(f: &RationalMap, x: &Point, n: usize) -> Vec<Point> {
    let mut out = Vec::with_capacity(n + 1);
    out.push(x.clone());
    for i in 0..n {
        let next = f.apply(&out[i]);
        out.push(next);
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Preperiodicity {
    Preperiodic { tail: usize, period: usize },
    Escaped,
    Undecided,
}

/// Iterate until a point repeats, the naive height passes `height_bound`, or
/// `max_iter` steps are used up.
pub fn preperiodic_bounded(
    f: &RationalMap,
    x: &Point,
    max_iter: usize,
    height_bound: &BigInt,
) -> Preperiodicity {
    let mut seen: HashMap<Point, usize> = HashMap::new();
    let mut cur = x.clone();
    for i in 0..=max_iter {
        if let Some(&j) = seen.get(&cur) {
            return Preperiodicity::Preperiodic { tail: j, period: i - j };
        }
        if &cur.height() > height_bound {
            return Preperiodicity::Escaped;
        }
        let next = f.apply(&cur);
        seen.insert(cur, i);
        cur = next;
    }
    Preperiodicity::Undecided
}

impl fmt::Display for RationalMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == QPoly::one(Q) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<'de> Deserialize<'de> for RationalMap {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            num: QPoly,
            den: QPoly,
        }
        let r = Raw::deserialize(d)?;
        make_rational_map(r.num, r.den).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::q;

    fn p(c: &[i64]) -> QPoly {
        QPoly::from_ints(c)
    }

    fn poly_map(c: &[i64]) -> RationalMap {
        RationalMap::polynomial(p(c)).unwrap()
    }

    fn pts(v: &[i64]) -> Vec<Point> {
        v.iter().map(|&x| Point::finite(x)).collect()
    }

    #[test]
    fn construction() {
        let f = poly_map(&[0, 0, 0, 1]);
        assert_eq!(f.degree(), 3);
        assert!(f.is_polynomial());
        let g = RationalMap::new(p(&[0, 0, 18, 12]), p(&[9, 27, 9, -3])).unwrap();
        assert_eq!(g.degree(), 3);
        assert_eq!(g.den(), &p(&[-3, -9, -3, 1]));
        assert!(matches!(
            RationalMap::new(p(&[0, 0, 1]), p(&[0, 0, 1])),
            Err(Error::DegenerateMap(_))
        ));
        assert!(RationalMap::new(p(&[0, 1]), p(&[1])).is_err());
        assert!(RationalMap::new(p(&[0, 0, 1]), p(&[0, 0, 0, 1])).is_err());
    }

    #[test]
    fn conjugation_examples() {
        let f = poly_map(&[0, 0, 0, 1]);
        let neg = Mobius::from_ints(-1, 0, 0, 1).unwrap();
        assert_eq!(conjugate(&f, &neg), f);
        let g = poly_map(&[0, 1, 0, 1]);
        let dbl = Mobius::from_ints(2, 0, 0, 1).unwrap();
        assert_eq!(conjugate(&g, &dbl), poly_map(&[0, 1, 0, 4]));
        // inversion turns z^3 into 1/(1/z)^3 = z^3
        let inv = Mobius::from_ints(0, 1, 1, 0).unwrap();
        assert_eq!(conjugate(&f, &inv), f);
    }

    #[test]
    fn orbits() {
        assert_eq!(orbit(&poly_map(&[0, 1, 0, 1]), &Point::finite(0), 5), pts(&[0; 6]));
        assert_eq!(orbit(&poly_map(&[0, 0, 1]), &Point::finite(2), 3), pts(&[2, 4, 16, 256]));
        assert_eq!(orbit(&poly_map(&[0, 0, 0, 1]), &Point::finite(-1), 2), pts(&[-1, -1, -1]));
        let f = RationalMap::new(p(&[1, 0, 1]), p(&[0, 1])).unwrap();
        assert_eq!(
            orbit(&f, &Point::finite(0), 2),
            vec![Point::finite(0), Point::Infinity, Point::Infinity]
        );
        assert_eq!(f.apply(&Point::finite(q(1, 2))), Point::finite(q(5, 2)));
    }

    #[test]
    fn preperiodicity() {
        let bound = BigInt::from(1_000_000);
        assert_eq!(
            preperiodic_bounded(&poly_map(&[0, 1, 0, 1]), &Point::finite(0), 10, &bound),
            Preperiodicity::Preperiodic { tail: 0, period: 1 }
        );
        assert_eq!(
            preperiodic_bounded(&poly_map(&[0, 0, 1]), &Point::finite(2), 10, &bound),
            Preperiodicity::Escaped
        );
        assert_eq!(
            preperiodic_bounded(&poly_map(&[-1, 0, 1]), &Point::finite(0), 10, &bound),
            Preperiodicity::Preperiodic { tail: 0, period: 2 }
        );
        assert_eq!(
            preperiodic_bounded(&poly_map(&[-2, 0, 1]), &Point::finite(1), 10, &bound),
            Preperiodicity::Preperiodic { tail: 1, period: 1 }
        );
        assert_eq!(
            preperiodic_bounded(&poly_map(&[0, 0, 1]), &Point::finite(2), 2, &bound),
            Preperiodicity::Undecided
        );
    }

    #[test]
    fn json() {
        let f: RationalMap = serde_json::from_str(r#"{"num":["0","1","0","1"],"den":["1"]}"#).unwrap();
        assert_eq!(f, poly_map(&[0, 1, 0, 1]));
        assert_eq!(serde_json::to_string(&f).unwrap(), r#"{"num":["0","1","0","1"],"den":["1"]}"#);
        assert!(serde_json::from_str::<RationalMap>(r#"{"num":["0","0","1"],"den":["0","0","1"]}"#).is_err());
    }
}
