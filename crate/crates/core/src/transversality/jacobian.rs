//! Critical orbits of `a s z^(tp) + c` over `F_p[a, c]` and their Jacobian.

use serde::Serialize;

use super::sylvester::{belyi_reduce_mod_p, SylvesterDatum};
use crate::critforms::BelyiParams;
use crate::error::{Error, Result};
use crate::exactalg::multipoly::{Exponent, DEFAULT_TERM_CAP, NVARS};
use crate::exactalg::{Field, Fp, MultiPoly, QuadraticExtension, Var};

type FpPoly = MultiPoly<Fp>;

/// `x, f(x), ..., f^m(x)` as polynomials in `a` and `c`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitPolys {
    pub base: u8,
    pub iterates: Vec<FpPoly>,
}

fn exp(v: Var, e: u32) -> Exponent {
    let mut x = [0; NVARS];
    x[v.index()] = e;
    x
}

/// The reduced map `a s z^(tp) + c`.
pub fn reduced_map(sd: &SylvesterDatum) -> FpPoly {
    let field = sd.field();
    let mut e = exp(Var::Z, sd.exponent() as u32);
    e[Var::A.index()] = 1;
    let lead = FpPoly::monomial(sd.s_elem(), e, field);
    &lead + &FpPoly::var(Var::C, field)
}

/// Iterates at `base` (0 or 1), stopping with `ResourceCap` past `cap` terms.
pub fn orbit_polys(sd: &SylvesterDatum, base: u8, m: usize, cap: usize) -> Result<OrbitPolys> {
    assert!(base <= 1, "critical points are 0 and 1");
    let field = sd.field();
    let a_s = FpPoly::var(Var::A, field).scale(&sd.s_elem());
    let c = FpPoly::var(Var::C, field);
    let mut iterates = vec![FpPoly::constant(field.elem(base as i64), field)];
    for i in 0..m {
        let x = iterates[i].checked_pow(sd.exponent(), cap)?.checked_mul(&a_s, cap)?.try_add(&c)?;
        iterates.push(x);
    }
    Ok(OrbitPolys { base, iterates })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntersectionPoint {
    pub a: String,
    pub c: String,
    pub j: String,
    pub a_nonzero: bool,
    pub transverse: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JacobianReport {
    pub datum: SylvesterDatum,
    pub m: usize,
    pub n: usize,
    /// `f^m(0)` and `f^n(1)`.
    pub fm0: FpPoly,
    pub fn1: FpPoly,
    /// Determinant of the partials of `(f^m(0), f^n(1))` in `(c, a)`.
    pub jacobian: FpPoly,
    /// `B_{d,k}` reduces to `s z^(tp)` mod `p`.
    pub reduction_holds: bool,
    /// Both `c`-partials equal 1.
    pub partial_c_holds: bool,
    /// Each `a`-partial equals `s` times the previous iterate to the `tp`.
    pub partial_a_holds: bool,
    /// `a J = f^n(1) - f^m(0)`.
    pub identity_holds: bool,
    /// Degree of the field scanned for intersection points over `F_p`.
    pub scan_degree: u32,
    pub intersection_points: Vec<IntersectionPoint>,
    pub all_transverse: bool,
}

impl JacobianReport {
    /// Every symbolic identity holds and every scanned point is transverse with `a != 0`.
    pub fn certified(&self) -> bool {
        self.reduction_holds
            && self.partial_c_holds
            && self.partial_a_holds
            && self.identity_holds
            && self.all_transverse
            && self.intersection_points.iter().all(|p| p.a_nonzero)
    }
}

fn scan<E: Field>(
    report: &[&FpPoly; 3],
    elements: &[E],
    embed: impl Fn(&Fp) -> E + Copy,
) -> Vec<IntersectionPoint> {
    let [fm0, fn1, jac] = report;
    let zero = E::zero(&elements[0].tag());
    let one = E::one(&elements[0].tag());
    let mut out = Vec::new();
    for a in elements {
        for c in elements {
            let mut pt = [zero.clone(), zero.clone(), zero.clone(), zero.clone(), zero.clone()];
            pt[Var::A.index()] = a.clone();
            pt[Var::C.index()] = c.clone();
            if !fm0.eval_in(&pt, embed).is_zero() || fn1.eval_in(&pt, embed) != one {
                continue;
            }
            let j = jac.eval_in(&pt, embed);
            out.push(IntersectionPoint {
                a: a.to_string(),
                c: c.to_string(),
                j: j.to_string(),
                a_nonzero: !a.is_zero(),
                transverse: !j.is_zero(),
            });
        }
    }
    out
}

/// Symbolic and pointwise transversality of `f^m(0) = 0` and `f^n(1) = 1`.
/// `scan_degree` 1 scans `F_p`, 2 scans `F_{p^2}`.
pub fn jacobian_certify(sd: &SylvesterDatum, m: usize, n: usize, scan_degree: u32) -> Result<JacobianReport> {
    jacobian_certify_capped(sd, m, n, scan_degree, DEFAULT_TERM_CAP)
}

pub fn jacobian_certify_capped(
    sd: &SylvesterDatum,
    m: usize,
    n: usize,
    scan_degree: u32,
    cap: usize,
) -> Result<JacobianReport> {
    assert!(m >= 1 && n >= 1, "periods start at 1");
    assert!(matches!(scan_degree, 1 | 2), "scans cover F_p and F_(p^2)");
    let field = sd.field();
    let reduction_holds = match belyi_reduce_mod_p(BelyiParams::new(sd.d, sd.k)?, sd) {
        Ok(_) => true,
        Err(Error::TheoremCheck(_)) => false,
        Err(e) => return Err(e),
    };
    let o0 = orbit_polys(sd, 0, m, cap)?;
    let o1 = orbit_polys(sd, 1, n, cap)?;
    let (fm0, fn1) = (o0.iterates[m].clone(), o1.iterates[n].clone());
    let one = FpPoly::one(field);
    let (dc0, dc1) = (fm0.derivative(Var::C), fn1.derivative(Var::C));
    let (da0, da1) = (fm0.derivative(Var::A), fn1.derivative(Var::A));
    let partial_c_holds = dc0 == one && dc1 == one;
    let prev0 = o0.iterates[m - 1].checked_pow(sd.exponent(), cap)?.scale(&sd.s_elem());
    let prev1 = o1.iterates[n - 1].checked_pow(sd.exponent(), cap)?.scale(&sd.s_elem());
    let partial_a_holds = da0 == prev0 && da1 == prev1;
    let jacobian = dc0.checked_mul(&da1, cap)?.try_sub(&dc1.checked_mul(&da0, cap)?)?;
    let identity_holds = FpPoly::var(Var::A, field).checked_mul(&jacobian, cap)? == fn1.try_sub(&fm0)?;
    let polys = [&fm0, &fn1, &jacobian];
    let elements: Vec<Fp> = field.elements().collect();
    let intersection_points = if scan_degree == 1 {
        scan(&polys, &elements, |x: &Fp| *x)
    } else {
        let ext = QuadraticExtension::new(field);
        scan(&polys, &ext.elements(), move |x: &Fp| ext.embed(x))
    };
    let all_transverse = intersection_points.iter().all(|p| p.transverse);
    Ok(JacobianReport {
        datum: *sd,
        m,
        n,
        fm0,
        fn1,
        jacobian,
        reduction_holds,
        partial_c_holds,
        partial_a_holds,
        identity_holds,
        scan_degree,
        intersection_points,
        all_transverse,
    })
}
