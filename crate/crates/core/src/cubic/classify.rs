//! Decide whether a map of degree 2 or 3 over the rationals has a rational
//! conjugate in (partial) fixed-point multiplier form.
//!
//! Everything is exact over Q. In a chart where infinity is not fixed, the
//! function `L = W / Q^2 mod Phi` sends each fixed point to its multiplier, so a
//! Mobius `rho = (a z + b)/(c z + d)` moves fixed points onto their multipliers
//! exactly when `a z + b - L (c z + d) = 0 mod Phi`, a linear system in
//! `(a, b, c, d)`. Restricting `Phi` to a product of irreducible factors gives
//! the same test on a Galois-invariant subset.

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactalg::linalg::null_space;
use crate::exactalg::resultant::norm_polynomial;
use crate::exactalg::{factor_upto_quartic, galois_group, GaloisLabel, QPoly, Rational, Q};
use crate::projdyn::{conjugate, fixed_point_data, multiplier_spectrum, Mobius, RationalMap};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum FpmOutcome {
    FixedPointMultiplierForm,
    PartialViaGaloisInvariantSet,
    PartialViaAutomorphism,
    NoFormExists,
    Unsupported,
}

impl FpmOutcome {
    pub fn form_exists(self) -> bool {
        matches!(
            self,
            FpmOutcome::FixedPointMultiplierForm
                | FpmOutcome::PartialViaGaloisInvariantSet
                | FpmOutcome::PartialViaAutomorphism
        )
    }
}

/// Number of distinct `rho` giving a conjugate in partial fixed-point
/// multiplier form.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConjugateCount {
    Exactly(usize),
    NotApplicable,
    Indeterminate,
}

impl Serialize for ConjugateCount {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            ConjugateCount::Exactly(n) => s.serialize_u64(*n as u64),
            ConjugateCount::NotApplicable => s.serialize_str("not-applicable"),
            ConjugateCount::Indeterminate => s.serialize_str("indeterminate"),
        }
    }
}

/// The four criteria of the degree-3 existence corollary, each decided separately.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CriteriaSummary {
    pub conjugate_in_full_form: bool,
    pub denominator_degree_at_most_2: bool,
    pub quartic_fixed_point_equation_with_rational_root: bool,
    pub unique_nontrivial_automorphism: bool,
}

impl CriteriaSummary {
    pub fn any(&self) -> bool {
        self.conjugate_in_full_form
            || self.denominator_degree_at_most_2
            || self.quartic_fixed_point_equation_with_rational_root
            || self.unique_nontrivial_automorphism
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FpmEvidence {
    pub degree: usize,
    pub distinct_fixed_points: usize,
    pub distinct_multipliers: usize,
    pub infinity_fixed: bool,
    /// Irreducible factors of `P - zQ` with multiplicity.
    pub dynatomic_factors: Vec<(QPoly, usize)>,
    pub multiplier_polynomial: QPoly,
    pub sigma: Vec<Rational>,
    /// `tau` with `g = tau^{-1} f tau` free of fixed points at infinity.
    pub chart: Mobius,
    /// Galois-invariant sets (as polynomials in the chart) whose multipliers are distinct.
    pub invariant_sets: Vec<QPoly>,
    /// Extra `(source, target)` pairs used when there are fewer than three fixed points.
    pub padding: Vec<(Rational, Rational)>,
    /// Order-2 automorphism of `f`, in the original coordinate.
    pub automorphism: Option<Mobius>,
    /// `rho` in the chart, sending fixed points to their multipliers.
    pub rho: Option<Mobius>,
    /// `m` with `normal_form = m^{-1} f m`.
    pub conjugator: Option<Mobius>,
    pub normal_form: Option<RationalMap>,
    /// Fixed points of `normal_form` equal to their own multiplier.
    pub matched_fixed_points: Option<usize>,
    pub failed_condition: Option<String>,
    pub criteria: CriteriaSummary,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FpmClassification {
    pub outcome: FpmOutcome,
    pub evidence: FpmEvidence,
    pub conjugate_count: ConjugateCount,
    pub dynatomic_galois: GaloisLabel,
}

fn smallest_avoiding(count: usize, avoid: impl Fn(&Rational) -> bool) -> Vec<Rational> {
    (0..)
        .map(Rational::from_int)
        .filter(|x| !avoid(x))
        .take(count)
        .collect()
}

/// Solve `rho(x) = L(x)` on the roots of `phi_s` plus `rho(z) = t` on the padding pairs.
fn solve_rho(phi_s: &QPoly, l: &QPoly, pads: &[(Rational, Rational)]) -> Option<Mobius> {
    let z = QPoly::x(Q);
    let cols = [
        z.rem(phi_s).ok()?,
        QPoly::one(Q).rem(phi_s).ok()?,
        -&(&z * l).rem(phi_s).ok()?,
        -&l.rem(phi_s).ok()?,
    ];
    let mut rows: Vec<Vec<Rational>> = (0..phi_s.deg0())
        .map(|i| cols.iter().map(|c| c.coeff(i)).collect())
        .collect();
    for (s, t) in pads {
        rows.push(vec![s.clone(), Rational::one(), -&(t * s), -t]);
    }
    let ns = null_space(rows, 4, &Q);
    if ns.len() != 1 {
        return None;
    }
    let v = &ns[0];
    Mobius::new(v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone()).ok()
}

/// Fixed points of `h` that equal their multipliers (infinity never does).
pub fn matched_fixed_points(h: &RationalMap) -> usize {
    let phi = (h.num() - &h.den().shift(1)).squarefree_part();
    if phi.deg0() == 0 {
        return 0;
    }
    let eq = &h.wronskian() - &(h.den() * h.den()).shift(1);
    phi.gcd(&eq).deg0()
}

fn multiplier_function(g: &RationalMap, phi: &QPoly) -> QPoly {
    let q2 = g.den() * g.den();
    let inv = q2.inverse_mod(phi).expect("fixed points are not poles");
    (&g.wronskian() * &inv).rem(phi).expect("nonzero modulus")
}

fn order_two_automorphism(g: &RationalMap, phi: &QPoly, spectrum: &QPoly) -> Option<Mobius> {
    let rep = spectrum.gcd(&spectrum.derivative());
    if rep.degree() != Some(1) {
        return None;
    }
    let mu = -rep.coeff(0);
    let q2 = g.den() * g.den();
    let pair = phi.gcd(&(&g.wronskian() - &q2.scale(&mu)));
    if pair.degree() != Some(2) {
        return None;
    }
    let fixed_pair = phi.exact_div(&pair)?;
    let (c, b, a) = (fixed_pair.coeff(0), fixed_pair.coeff(1), fixed_pair.coeff(2));
    // the involution whose fixed points are the roots of a z^2 + b z + c
    let two = Rational::from_int(2);
    let alpha = Mobius::new(-&b, -&(&two * &c), &two * &a, b.clone()).ok()?;
    (conjugate(g, &alpha) == *g).then_some(alpha)
}

pub fn classify_partial_fpm(f: &RationalMap) -> Result<FpmClassification> {
    let d = f.degree();
    let fp = fixed_point_data(f);
    let spec = multiplier_spectrum(f);
    let sqf = fp.dynatomic.squarefree_part();
    let dynatomic_galois = if sqf.deg0() == 0 { GaloisLabel::Trivial } else { galois_group(&sqf)? };
    let dynatomic_factors = if fp.dynatomic.deg0() == 0 {
        Vec::new()
    } else {
        factor_upto_quartic(&fp.dynatomic)?.factors
    };
    let nfix = sqf.deg0() + usize::from(fp.infinity_fixed);
    let nmult = spec.distinct_count();
    let mut ev = FpmEvidence {
        degree: d,
        distinct_fixed_points: nfix,
        distinct_multipliers: nmult,
        infinity_fixed: fp.infinity_fixed,
        dynatomic_factors,
        multiplier_polynomial: spec.monic_poly_in_lambda.clone(),
        sigma: spec.sigma.clone(),
        chart: Mobius::identity(),
        invariant_sets: Vec::new(),
        padding: Vec::new(),
        automorphism: None,
        rho: None,
        conjugator: None,
        normal_form: None,
        matched_fixed_points: None,
        failed_condition: None,
        criteria: CriteriaSummary {
            denominator_degree_at_most_2: d == 3 && f.den().deg0() <= 2,
            quartic_fixed_point_equation_with_rational_root: fp.dynatomic.deg0() == 4
                && !fp.rational_fixed_points.is_empty(),
            ..Default::default()
        },
        notes: Vec::new(),
    };
    let done = |outcome, ev, conjugate_count| {
        Ok(FpmClassification { outcome, evidence: ev, conjugate_count, dynatomic_galois })
    };
    if d != 2 && d != 3 {
        ev.notes.push("only degrees 2 and 3 are classified".into());
        return done(FpmOutcome::Unsupported, ev, ConjugateCount::NotApplicable);
    }
    let k = nfix.min(3);
    if nmult < k {
        ev.failed_condition = Some("1: fewer distinct multipliers than min(#Fix, 3)".into());
        return done(FpmOutcome::NoFormExists, ev, ConjugateCount::NotApplicable);
    }

    // move infinity off the fixed points
    let tau = if fp.infinity_fixed {
        let t = smallest_avoiding(1, |x| fp.dynatomic.eval(x).is_zero()).remove(0);
        Mobius::new(t, Rational::one(), Rational::one(), Rational::zero())?
    } else {
        Mobius::identity()
    };
    let g = conjugate(f, &tau);
    let phi = (g.num() - &g.den().shift(1)).squarefree_part();
    if phi.deg0() != nfix {
        return Err(Error::TheoremCheck("chart change lost a fixed point".into()));
    }
    ev.chart = tau.clone();
    let l = multiplier_function(&g, &phi);
    let t_poly = &spec.monic_poly_in_lambda;

    let pads: Vec<(Rational, Rational)> = if nfix < 3 {
        let src = smallest_avoiding(3 - nfix, |x| phi.eval(x).is_zero());
        let dst = smallest_avoiding(3 - nfix, |x| t_poly.eval(x).is_zero());
        src.into_iter().zip(dst).collect()
    } else {
        Vec::new()
    };
    ev.padding = pads.clone();

    // condition 2a: unions of irreducible factors of size k with distinct multipliers
    let blocks: Vec<QPoly> = factor_upto_quartic(&phi)?.factors.into_iter().map(|(b, _)| b).collect();
    let q2 = g.den() * g.den();
    let mut rhos: Vec<Mobius> = Vec::new();
    for mask in 1u32..(1 << blocks.len()) {
        let chosen: Vec<&QPoly> =
            blocks.iter().enumerate().filter(|(i, _)| mask & (1 << i) != 0).map(|(_, b)| b).collect();
        if chosen.iter().map(|b| b.deg0()).sum::<usize>() != k {
            continue;
        }
        let phi_s = chosen.iter().fold(QPoly::one(Q), |acc, b| &acc * *b);
        let mults = norm_polynomial(&phi_s, &g.wronskian(), &q2)?;
        if !mults.is_squarefree() {
            continue;
        }
        if let Some(rho) = solve_rho(&phi_s, &l, &pads) {
            ev.invariant_sets.push(phi_s);
            if !rhos.contains(&rho) {
                rhos.push(rho);
            }
        } else {
            return Err(Error::TheoremCheck("invariant set admits no rational rho".into()));
        }
    }

    let full_rho = if nfix == 4 && nmult == 4 { solve_rho(&phi, &l, &[]) } else { None };
    let alpha = if nfix == 4 && nmult == 3 { order_two_automorphism(&g, &phi, t_poly) } else { None };
    if nfix == 4 && nmult == 3 && alpha.is_none() {
        ev.notes.push("three distinct multipliers but the pair-swapping involution does not commute with f".into());
    }
    ev.criteria.conjugate_in_full_form = full_rho.is_some();
    ev.criteria.unique_nontrivial_automorphism = alpha.is_some();
    ev.automorphism = alpha.as_ref().map(|a| tau.compose(a).compose(&tau.inverse()));

    let (outcome, witness, count) = if let Some(rho) = full_rho {
        (FpmOutcome::FixedPointMultiplierForm, Some(rho), ConjugateCount::Exactly(1))
    } else if alpha.is_some() {
        ev.notes.push(
            "automorphism case read as: every Galois element fixes or swaps the pair exchanged by the automorphism"
                .into(),
        );
        if rhos.len() != 2 {
            ev.notes.push("count 2 from the order-2 automorphism case; the swapped pair is not rational so rho is not exhibited".into());
        }
        (FpmOutcome::PartialViaAutomorphism, rhos.first().cloned(), ConjugateCount::Exactly(2))
    } else if let Some(rho) = rhos.first() {
        let count = if nfix < 3 { ConjugateCount::NotApplicable } else { ConjugateCount::Exactly(rhos.len()) };
        (FpmOutcome::PartialViaGaloisInvariantSet, Some(rho.clone()), count)
    } else {
        ev.failed_condition = Some("2: no invariant set, no order-2 automorphism, not in full form".into());
        (FpmOutcome::NoFormExists, None, ConjugateCount::NotApplicable)
    };

    if let Some(rho) = witness {
        let m = tau.compose(&rho.inverse());
        let h = conjugate(f, &m);
        let matched = matched_fixed_points(&h);
        let need = if outcome == FpmOutcome::FixedPointMultiplierForm { 4 } else { k };
        if matched < need {
            return Err(Error::TheoremCheck(format!(
                "conjugate matches {matched} fixed points with their multipliers, expected {need}"
            )));
        }
        ev.rho = Some(rho);
        ev.conjugator = Some(m);
        ev.normal_form = Some(h);
        ev.matched_fixed_points = Some(matched);
    }
    done(outcome, ev, count)
}
