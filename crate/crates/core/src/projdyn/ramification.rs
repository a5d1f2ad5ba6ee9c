//! Critical points and ramification indices.

use serde::Serialize;

use super::map::RationalMap;
use super::point::Point;
use crate::exactalg::{rational_roots, QPoly, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RamificationProfile {
    /// Rational critical points (infinity last) with their ramification indices.
    pub points: Vec<(Point, usize)>,
    /// Products of the non-rational critical points sharing an index.
    pub irrational_blocks: Vec<(QPoly, usize)>,
    /// `P'Q - PQ'` as squarefree pieces with multiplicity.
    pub wronskian_factors: Vec<(QPoly, usize)>,
}

impl RamificationProfile {
    /// `sum (e - 1)` over all critical points of the algebraic closure.
    pub fn total_ramification(&self) -> usize {
        let rational: usize = self.points.iter().map(|(_, e)| e - 1).sum();
        let irrational: usize = self.irrational_blocks.iter().map(|(b, e)| b.deg0() * (e - 1)).sum();
        rational + irrational
    }

    pub fn index_at(&self, x: &Point) -> usize {
        self.points.iter().find(|(p, _)| p == x).map(|(_, e)| *e).unwrap_or(1)
    }
}

/// Local degree of `f` at infinity.
pub fn infinity_index(f: &RationalMap) -> usize {
    let (p, q, d) = (f.num(), f.den(), f.degree());
    if p.deg0() > q.deg0() {
        return d - q.deg0();
    }
    // f(inf) = v finite: ord of the reversed P - vQ at w = 0
    let v = &p.coeff(d) / &q.coeff(d);
    let g = p - &q.scale(&v);
    d - g.deg0()
}

pub fn ramification_profile(f: &RationalMap) -> RamificationProfile {
    let w = f.wronskian();
    let wronskian_factors = w.squarefree_decomposition();
    let mut points = Vec::new();
    let mut irrational_blocks = Vec::new();
    for (piece, mult) in &wronskian_factors {
        let mut rest = piece.clone();
        for (r, _) in rational_roots(piece) {
            points.push((Point::Finite(r.clone()), mult + 1));
            let lin = QPoly::from_rationals(vec![-r, Rational::one()]);
            rest = rest.exact_div(&lin).expect("root divides");
        }
        if rest.deg0() > 0 {
            irrational_blocks.push((rest, mult + 1));
        }
    }
    points.sort();
    let e = infinity_index(f);
    if e > 1 {
        points.push((Point::Infinity, e));
    }
    RamificationProfile { points, irrational_blocks, wronskian_factors }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> QPoly {
        QPoly::from_ints(c)
    }

    fn pt(x: i64) -> Point {
        Point::finite(x)
    }

    #[test]
    fn belyi_cubic() {
        // 5 (-2z^3 + 3z^2) + 7
        let f = RationalMap::polynomial(p(&[7, 0, 15, -10])).unwrap();
        let r = ramification_profile(&f);
        assert_eq!(r.points, vec![(pt(0), 2), (pt(1), 2), (Point::Infinity, 3)]);
        assert_eq!(r.total_ramification(), 4);
    }

    #[test]
    fn z_cubed() {
        let r = ramification_profile(&RationalMap::polynomial(p(&[0, 0, 0, 1])).unwrap());
        assert_eq!(r.points, vec![(pt(0), 3), (Point::Infinity, 3)]);
    }

    #[test]
    fn tricritical_quartic() {
        // 6z^4 - 24z^3 + 24z^2, derivative 24 z (z-1)(z-2)
        let r = ramification_profile(&RationalMap::polynomial(p(&[0, 0, 24, -24, 6])).unwrap());
        assert_eq!(
            r.points,
            vec![(pt(0), 2), (pt(1), 2), (pt(2), 2), (Point::Infinity, 4)]
        );
    }

    #[test]
    fn poles_and_irrational_critical_points() {
        // (z^2 + 1)/z: critical at +-1, infinity unramified (simple pole at 0)
        let f = RationalMap::new(p(&[1, 0, 1]), p(&[0, 1])).unwrap();
        let r = ramification_profile(&f);
        assert_eq!(r.points, vec![(pt(-1), 2), (pt(1), 2)]);
        // 1/(z^2 + 2): critical at infinity (double zero) and at 0
        let g = RationalMap::new(p(&[1]), p(&[2, 0, 1])).unwrap();
        let r = ramification_profile(&g);
        assert_eq!(r.points, vec![(pt(0), 2), (Point::Infinity, 2)]);
        // z^3 - 6z has critical points +-sqrt 2
        let h = RationalMap::polynomial(p(&[0, -6, 0, 1])).unwrap();
        let r = ramification_profile(&h);
        assert_eq!(r.irrational_blocks, vec![(p(&[-2, 0, 1]), 2)]);
        assert_eq!(r.total_ramification(), 4);
    }
}
