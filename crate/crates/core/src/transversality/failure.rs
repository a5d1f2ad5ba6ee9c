//! Where the reduction argument stops working for three critical points.

use serde::Serialize;

use crate::critforms::{ncrit_polynomial, NCritSpec, Param};
use crate::error::{Error, Result};
use crate::exactalg::field::primes_between;
use crate::exactalg::multipoly::DEFAULT_TERM_CAP;
use crate::exactalg::{Field, Fp, MultiPoly, PrimeField, Var};

type FpPoly = MultiPoly<Fp>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ReductionClass {
    /// Only the constant term survives.
    KillsEverything,
    KeepsMonomial,
    KeepsMultipleTerms,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NCritReduction {
    pub p: u64,
    pub poly: FpPoly,
    /// Powers of `z` with a nonzero coefficient, constant term excluded.
    pub z_powers: Vec<u32>,
    pub class: ReductionClass,
}

pub fn ncrit_reduce_mod_p(spec: &NCritSpec, p: u64) -> Result<NCritReduction> {
    let field = PrimeField::new(p)?;
    let poly = ncrit_polynomial(spec)?.reduce_mod(&field)?;
    let z_powers: Vec<u32> = poly.coefficients_in(Var::Z).into_keys().filter(|&e| e > 0).collect();
    let class = match z_powers.len() {
        0 => ReductionClass::KillsEverything,
        1 => ReductionClass::KeepsMonomial,
        _ => ReductionClass::KeepsMultipleTerms,
    };
    Ok(NCritReduction { p, poly, z_powers, class })
}

/// Degree 10 with critical points 0, -1 (index 8) and `g` (index 2).
pub fn d10_spec() -> NCritSpec {
    NCritSpec::new(
        10,
        vec![7, 1],
        vec![Param::value(-1), Param::Symbol(Var::G)],
        Param::Symbol(Var::A),
        Param::Symbol(Var::C),
    )
    .expect("valid spec")
}

/// Degree 4 with critical points 0, `gamma0` and `g`, all simple.
pub fn d4_spec(gamma0: i64) -> NCritSpec {
    NCritSpec::new(
        4,
        vec![1, 1],
        vec![Param::value(gamma0), Param::Symbol(Var::G)],
        Param::Symbol(Var::A),
        Param::Symbol(Var::C),
    )
    .expect("valid spec")
}

/// Reductions of the degree-10 family at every prime up to `max_prime`.
pub fn d10_failure_report(max_prime: u64) -> Result<Vec<NCritReduction>> {
    let spec = d10_spec();
    primes_between(2, max_prime).into_iter().map(|p| ncrit_reduce_mod_p(&spec, p)).collect()
}

fn compose(f: &FpPoly, x: &FpPoly, cap: usize) -> Result<FpPoly> {
    let out = f.substitute(Var::Z, x)?;
    if out.num_terms() > cap {
        return Err(Error::ResourceCap { terms: out.num_terms(), cap });
    }
    Ok(out)
}

fn iterate(f: &FpPoly, x: &FpPoly, times: usize, cap: usize) -> Result<FpPoly> {
    let mut cur = x.clone();
    for _ in 0..times {
        cur = compose(f, &cur, cap)?;
    }
    Ok(cur)
}

fn det3(m: &[[FpPoly; 3]; 3]) -> FpPoly {
    let minor = |r1: usize, r2: usize, c1: usize, c2: usize| &(&m[r1][c1] * &m[r2][c2]) - &(&m[r1][c2] * &m[r2][c1]);
    let t0 = &m[0][0] * &minor(1, 2, 1, 2);
    let t1 = &m[0][1] * &minor(1, 2, 0, 2);
    let t2 = &m[0][2] * &minor(1, 2, 0, 1);
    &(&t0 - &t1) + &t2
}

/// Determinant of the partials of `(f^m(0), f^n(1), f^k(g))` in `(c, a, g)`.
pub fn tricritical_jacobian(f: &FpPoly, m: usize, n: usize, k: usize, cap: usize) -> Result<FpPoly> {
    let field = *f.field();
    let orbits = [
        iterate(f, &FpPoly::zero(field), m, cap)?,
        iterate(f, &FpPoly::one(field), n, cap)?,
        iterate(f, &FpPoly::var(Var::G, field), k, cap)?,
    ];
    let rows = [Var::C, Var::A, Var::G].map(|v| {
        [orbits[0].derivative(v), orbits[1].derivative(v), orbits[2].derivative(v)]
    });
    Ok(det3(&rows))
}

/// The degree-4 tricritical family reduced mod 3, `a (1 + g) z^3 + c`, and
/// its Jacobian determinant.
pub fn tricritical_jacobian_mod3(m: usize, n: usize, k: usize) -> Result<FpPoly> {
    let f = ncrit_reduce_mod_p(&d4_spec(1), 3)?.poly;
    let expected = {
        let field = *f.field();
        let mut e = [0u32; 5];
        e[Var::A.index()] = 1;
        e[Var::Z.index()] = 3;
        let az3 = FpPoly::monomial(Fp::one(&field), e, field);
        &(&az3 * &(&FpPoly::one(field) + &FpPoly::var(Var::G, field))) + &FpPoly::var(Var::C, field)
    };
    if f != expected {
        return Err(Error::TheoremCheck(format!("degree-4 family mod 3 is {f}, expected {expected}")));
    }
    tricritical_jacobian(&f, m, n, k, DEFAULT_TERM_CAP)
}
