//! Fixed points, multipliers and sigma-invariants.

use serde::Serialize;

use super::map::RationalMap;
use super::point::Point;
use crate::exactalg::resultant::norm_polynomial;
use crate::exactalg::{rational_roots, QPoly, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FixedPointData {
    /// `P - z Q`.
    pub dynatomic: QPoly,
    pub infinity_fixed: bool,
    /// `d + 1 - deg(P - zQ)`; zero when infinity is not fixed.
    pub infinity_multiplicity: usize,
    pub rational_fixed_points: Vec<(Rational, usize)>,
}

impl FixedPointData {
    /// True when every fixed point, counted with multiplicity, is rational or infinity.
    pub fn all_rational(&self, degree: usize) -> bool {
        let finite: usize = self.rational_fixed_points.iter().map(|(_, m)| m).sum();
        finite + self.infinity_multiplicity == degree + 1
    }

    /// Distinct rational fixed points, infinity last.
    pub fn distinct_points(&self) -> Vec<Point> {
        let mut v: Vec<Point> =
            self.rational_fixed_points.iter().map(|(x, _)| Point::Finite(x.clone())).collect();
        if self.infinity_fixed {
            v.push(Point::Infinity);
        }
        v
    }
}

pub fn fixed_point_data(f: &RationalMap) -> FixedPointData {
    let dynatomic = f.num() - &f.den().shift(1);
    let infinity_multiplicity = f.degree() + 1 - dynatomic.deg0();
    FixedPointData {
        infinity_fixed: f.num().deg0() > f.den().deg0(),
        infinity_multiplicity,
        rational_fixed_points: rational_roots(&dynatomic),
        dynatomic,
    }
}

/// Multiplier at infinity, when infinity is fixed.
pub fn infinity_multiplier(f: &RationalMap) -> Option<Rational> {
    let (p, q) = (f.num(), f.den());
    let d = p.deg0();
    if d <= q.deg0() {
        return None;
    }
    // in the chart w = 1/z the map is w -> w^(d - e) q_e/p_d + ...
    Some(&q.coeff(d - 1) / &p.leading())
}

/// `f'(x)` at a fixed point. Panics if `x` is not fixed.
pub fn multiplier_at(f: &RationalMap, x: &Point) -> Rational {
    assert_eq!(&f.apply(x), x, "multiplier requested at a non-fixed point");
    match x {
        Point::Infinity => infinity_multiplier(f).expect("infinity is fixed"),
        Point::Finite(x) => {
            let qx = f.den().eval(x);
            &f.wronskian().eval(x) / &(&qx * &qx)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultiplierSpectrum {
    /// Monic, degree `d + 1`, roots the fixed-point multipliers with multiplicity.
    pub monic_poly_in_lambda: QPoly,
    /// `sigma_1, ..., sigma_{d+1}`.
    pub sigma: Vec<Rational>,
}

impl MultiplierSpectrum {
    pub fn from_poly(t: QPoly) -> Self {
        let n = t.deg0();
        let sigma = (1..=n)
            .map(|i| {
                let c = t.coeff(n - i);
                if i % 2 == 1 {
                    -c
                } else {
                    c
                }
            })
            .collect();
        MultiplierSpectrum { monic_poly_in_lambda: t, sigma }
    }

    /// Distinct multipliers, as the degree of the squarefree part.
    pub fn distinct_count(&self) -> usize {
        self.monic_poly_in_lambda.squarefree_part().deg0()
    }
}

pub fn multiplier_spectrum(f: &RationalMap) -> MultiplierSpectrum {
    let dynatomic = f.num() - &f.den().shift(1);
    let infinity_multiplicity = f.degree() + 1 - dynatomic.deg0();
    let q2 = f.den() * f.den();
    let affine = norm_polynomial(&dynatomic, &f.wronskian(), &q2)
        .expect("fixed points are never poles");
    let t = match infinity_multiplier(f) {
        Some(l) if infinity_multiplicity > 0 => {
            let lin = QPoly::from_rationals(vec![-l, Rational::one()]);
            &affine * &lin.pow(infinity_multiplicity as u32)
        }
        _ => affine,
    };
    assert_eq!(t.deg0(), f.degree() + 1, "one multiplier per fixed point");
    MultiplierSpectrum::from_poly(t)
}

/// `T'(1) = T(1)`, the holomorphic index relation, for spectra without
/// multiplier 1.
pub fn index_relation_holds(s: &MultiplierSpectrum) -> Option<bool> {
    let one = Rational::one();
    let t1 = s.monic_poly_in_lambda.eval(&one);
    if t1.is_zero() {
        return None;
    }
    Some(s.monic_poly_in_lambda.derivative().eval(&one) == t1)
}
