//! Rational automorphisms of maps whose fixed points are all rational.

use super::fixed::{fixed_point_data, multiplier_at};
use super::map::{conjugate, RationalMap};
use super::mobius::Mobius;
use super::point::Point;
use crate::error::{Error, Result};

/// Every Mobius `m` with `m^{-1} f m = f`, identity first.
///
/// An automorphism permutes the fixed points and preserves multipliers, and
/// is determined by where it sends three of them.
pub fn automorphisms_rational(f: &RationalMap) -> Result<Vec<Mobius>> {
    let fp = fixed_point_data(f);
    if !fp.all_rational(f.degree()) {
        return Err(Error::Unsupported("fixed points are not all rational".into()));
    }
    let pts = fp.distinct_points();
    if pts.len() < 3 {
        return Err(Error::Unsupported("fewer than three distinct fixed points".into()));
    }
    let mults: Vec<_> = pts.iter().map(|x| multiplier_at(f, x)).collect();
    let base = [pts[0].clone(), pts[1].clone(), pts[2].clone()];
    let mut out = vec![Mobius::identity()];
    let n = pts.len();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if i == j || j == k || i == k {
                    continue;
                }
                if mults[i] != mults[0] || mults[j] != mults[1] || mults[k] != mults[2] {
                    continue;
                }
                let image: [Point; 3] = [pts[i].clone(), pts[j].clone(), pts[k].clone()];
                let m = Mobius::from_three_points(&base, &image)?;
                if !out.contains(&m) && conjugate(f, &m) == *f {
                    out.push(m);
                }
            }
        }
    }
    Ok(out)
}
