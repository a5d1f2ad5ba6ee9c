//! Points of the rational projective line.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactalg::Rational;

/// A finite rational point or infinity. Infinity sorts last.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Point {
    Finite(Rational),
    Infinity,
}

impl Point {
    pub fn finite(x: impl Into<Rational>) -> Self {
        Point::Finite(x.into())
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, Point::Infinity)
    }

    pub fn as_finite(&self) -> Option<&Rational> {
        match self {
            Point::Finite(x) => Some(x),
            Point::Infinity => None,
        }
    }

    /// Naive height `max(|n|, d)`; infinity has height 1.
    pub fn height(&self) -> BigInt {
        match self {
            Point::Finite(x) => x.height(),
            Point::Infinity => BigInt::from(1),
        }
    }

    /// Homogeneous coordinates `[x : y]`.
    pub fn homogeneous(&self) -> (Rational, Rational) {
        match self {
            Point::Finite(x) => (x.clone(), Rational::one()),
            Point::Infinity => (Rational::one(), Rational::zero()),
        }
    }

    pub fn from_homogeneous(x: Rational, y: Rational) -> Self {
        assert!(!(x.is_zero() && y.is_zero()), "[0:0] is not a point");
        if y.is_zero() {
            Point::Infinity
        } else {
            Point::Finite(&x / &y)
        }
    }
}

impl From<Rational> for Point {
    fn from(x: Rational) -> Self {
        Point::Finite(x)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::Finite(x) => write!(f, "{x}"),
            Point::Infinity => f.write_str("inf"),
        }
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Point {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "inf" | "infinity" | "∞" => Ok(Point::Infinity),
            t => Ok(Point::Finite(t.parse()?)),
        }
    }
}

impl Serialize for Point {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Point {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Str(String),
            Int(i64),
        }
        match Raw::deserialize(d)? {
            Raw::Str(s) => s.parse().map_err(D::Error::custom),
            Raw::Int(n) => Ok(Point::finite(n)),
        }
    }
}
