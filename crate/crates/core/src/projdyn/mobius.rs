//! Mobius transformations with rational entries.

use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize};

use super::point::Point;
use crate::error::{Error, Result};
use crate::exactalg::Rational;

/// `z -> (a z + b) / (c z + d)`, stored projectively normalized so that the
/// first nonzero entry is 1 and structural equality is equality in PGL2.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Mobius {
    a: Rational,
    b: Rational,
    c: Rational,
    d: Rational,
}

impl Mobius {
    pub fn new(a: Rational, b: Rational, c: Rational, d: Rational) -> Result<Self> {
        if (&(&a * &d) - &(&b * &c)).is_zero() {
            return Err(Error::SingularMobius);
        }
        let lead = [&a, &b, &c, &d]
            .into_iter()
            .find(|x| !x.is_zero())
            .expect("nonzero determinant")
            .clone();
        Ok(Mobius { a: &a / &lead, b: &b / &lead, c: &c / &lead, d: &d / &lead })
    }

    pub fn from_ints(a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        Self::new(a.into(), b.into(), c.into(), d.into())
    }

    pub fn identity() -> Self {
        Self::from_ints(1, 0, 0, 1).expect("identity")
    }

    /// `z -> s z + t`.
    pub fn affine(s: Rational, t: Rational) -> Result<Self> {
        Self::new(s, t, Rational::zero(), Rational::one())
    }

    pub fn entries(&self) -> [&Rational; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn determinant(&self) -> Rational {
        &(&self.a * &self.d) - &(&self.b * &self.c)
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    pub fn apply(&self, x: &Point) -> Point {
        let (u, v) = x.homogeneous();
        Point::from_homogeneous(
            &(&self.a * &u) + &(&self.b * &v),
            &(&self.c * &u) + &(&self.d * &v),
        )
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Mobius) -> Mobius {
        Mobius::new(
            &(&self.a * &other.a) + &(&self.b * &other.c),
            &(&self.a * &other.b) + &(&self.b * &other.d),
            &(&self.c * &other.a) + &(&self.d * &other.c),
            &(&self.c * &other.b) + &(&self.d * &other.d),
        )
        .expect("product of invertible matrices")
    }

    pub fn inverse(&self) -> Mobius {
        Mobius::new(self.d.clone(), -&self.b, -&self.c, self.a.clone()).expect("invertible")
    }

    /// The map sending `inf, 0, 1` to `p[0], p[1], p[2]`.
    fn from_standard(p: &[Point; 3]) -> Result<Mobius> {
        let (x1, y1) = p[0].homogeneous();
        let (x2, y2) = p[1].homogeneous();
        let (x3, y3) = p[2].homogeneous();
        // v3 = l1 v1 + l2 v2
        let det = &(&x1 * &y2) - &(&x2 * &y1);
        if det.is_zero() {
            return Err(Error::InvalidInput("points must be distinct".into()));
        }
        let l1 = &(&(&x3 * &y2) - &(&x2 * &y3)) / &det;
        let l2 = &(&(&x1 * &y3) - &(&x3 * &y1)) / &det;
        Mobius::new(&l1 * &x1, &l2 * &x2, &l1 * &y1, &l2 * &y2)
            .map_err(|_| Error::InvalidInput("points must be distinct".into()))
    }

    /// The unique transformation with `src[i] -> dst[i]`.
    pub fn from_three_points(src: &[Point; 3], dst: &[Point; 3]) -> Result<Mobius> {
        let s = Self::from_standard(src)?;
        let t = Self::from_standard(dst)?;
        Ok(t.compose(&s.inverse()))
    }
}

impl fmt::Display for Mobius {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "z -> ({}*z + {})/({}*z + {})", self.a, self.b, self.c, self.d)
    }
}

impl fmt::Debug for Mobius {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<'de> Deserialize<'de> for Mobius {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            a: Rational,
            b: Rational,
            c: Rational,
            d: Rational,
        }
        let r = Raw::deserialize(d)?;
        Mobius::new(r.a, r.b, r.c, r.d).map_err(D::Error::custom)
    }
}
