use proptest::prelude::*;

use normforms::critforms::{
    belyi_poly, bicritical_conjugacy, ncrit_derivative_target, ncrit_polynomial, BelyiParams, Bicritical, Conjugacy,
    NCritSpec, Param,
};
use normforms::cubic::{
    curve_c_member, form_degeneracy_check, lemma4_construct, phi_normal_form, FormKind, SigmaPair,
};
use normforms::exactalg::{
    factor_upto_quartic, galois_group, q, resultant, QMultiPoly, QPoly, Rational, Var,
};
use normforms::projdyn::{
    conjugate, multiplier_at, multiplier_spectrum, orbit, ramification_profile, Mobius, Point, RationalMap,
};
use normforms::transversality::{jacobian_certify, sylvester_datum};

fn rat() -> impl Strategy<Value = Rational> {
    (-30i64..=30, 1i64..=7).prop_map(|(n, d)| q(n, d))
}

fn small_int_poly(deg: usize) -> impl Strategy<Value = QPoly> {
    prop::collection::vec(-6i64..=6, deg + 1).prop_filter_map("degree", move |mut c| {
        if c[deg] == 0 {
            c[deg] = 1;
        }
        Some(QPoly::from_ints(&c))
    })
}

fn roots(n: usize) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec(rat(), n)
}

fn mobius() -> impl Strategy<Value = Mobius> {
    (-4i64..=4, -4i64..=4, -4i64..=4, -4i64..=4)
        .prop_filter_map("singular", |(a, b, c, d)| Mobius::from_ints(a, b, c, d).ok())
}

fn cubic_map() -> impl Strategy<Value = RationalMap> {
    (small_int_poly(3), prop::collection::vec(-6i64..=6, 4))
        .prop_filter_map("degenerate", |(p, d)| RationalMap::new(p, QPoly::from_ints(&d)).ok())
}

/// `lc(a)^deg b lc(b)^deg a prod (x - y)` over the given roots.
fn resultant_from_roots(la: &Rational, ra: &[Rational], lb: &Rational, rb: &[Rational]) -> Rational {
    let mut r = &la.pow(rb.len() as i32) * &lb.pow(ra.len() as i32);
    for x in ra {
        for y in rb {
            r = &r * &(x - y);
        }
    }
    r
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn resultant_matches_root_products(ra in roots(3), rb in roots(2), la in 1i64..5, lb in -4i64..=-1) {
        let (la, lb) = (Rational::from_int(la), Rational::from_int(lb));
        let a = QPoly::from_roots(&ra).scale(&la);
        let b = QPoly::from_roots(&rb).scale(&lb);
        prop_assert_eq!(resultant(&a, &b).unwrap(), resultant_from_roots(&la, &ra, &lb, &rb));
    }

    #[test]
    fn resultant_antisymmetry_and_multiplicativity(a in small_int_poly(3), b in small_int_poly(2), c in small_int_poly(2)) {
        // (-1)^(3 * 2) = 1
        prop_assert_eq!(resultant(&a, &b).unwrap(), resultant(&b, &a).unwrap());
        let bc = &b * &c;
        prop_assert_eq!(resultant(&a, &bc).unwrap(), &resultant(&a, &b).unwrap() * &resultant(&a, &c).unwrap());
    }

    #[test]
    fn factorization_reassembles(lin in roots(1), quad in small_int_poly(2), scale in 1i64..6) {
        let f = (&QPoly::from_roots(&lin) * &quad).scale(&Rational::from_int(scale));
        let fac = factor_upto_quartic(&f).unwrap();
        prop_assert_eq!(fac.expand(), f);
        let g = &quad * &quad.compose(&QPoly::from_ints(&[1, 1]));
        prop_assert_eq!(factor_upto_quartic(&g).unwrap().expand(), g);
    }

    #[test]
    fn galois_order_divides_24(f in small_int_poly(4)) {
        if let Ok(g) = galois_group(&f) {
            prop_assert_eq!(24 % g.order(), 0);
            if factor_upto_quartic(&f).unwrap().is_irreducible() {
                prop_assert_eq!(g.order() % 4, 0);
            }
        }
    }

    #[test]
    fn sigma_is_conjugation_invariant(f in cubic_map(), m in mobius()) {
        let g = conjugate(&f, &m);
        prop_assert_eq!(multiplier_spectrum(&f).sigma, multiplier_spectrum(&g).sigma);
    }

    #[test]
    fn riemann_hurwitz(f in cubic_map()) {
        prop_assert_eq!(ramification_profile(&f).total_ramification(), 2 * f.degree() - 2);
    }

    #[test]
    fn orbits_extend_as_prefixes(f in cubic_map(), x in -3i64..=3, n in 0usize..4, extra in 0usize..3) {
        let x = Point::finite(x);
        let short = orbit(&f, &x, n);
        let long = orbit(&f, &x, n + extra);
        prop_assert_eq!(&long[..=n], &short[..]);
    }

    #[test]
    fn phi_has_the_requested_sigma(s1 in rat(), s3 in rat()) {
        let s = SigmaPair::new(s1, s3);
        let f = phi_normal_form(&s).unwrap();
        prop_assert_eq!(multiplier_spectrum(&f).sigma, s.expected_sigma());
    }

    #[test]
    fn first_form_degenerates_exactly_on_the_curve(s1 in rat(), s3 in rat()) {
        let s = SigmaPair::new(s1.clone(), s3);
        prop_assert_eq!(form_degeneracy_check(&s, FormKind::First).is_zero(), curve_c_member(&s));
        // the point of the curve above s1
        let r = |n: i64| Rational::from_int(n);
        let s1_2 = &s1 * &s1;
        let on = &(&(&r(54) - &(&r(4) * &(&s1_2 * &s1))) + &(&r(36) * &s1_2)) - &(&r(81) * &s1);
        let t = SigmaPair::new(s1, &on / &r(27));
        prop_assert!(curve_c_member(&t));
        prop_assert!(form_degeneracy_check(&t, FormKind::First).is_zero());
    }

    #[test]
    fn lemma4_maps_fix_their_multipliers(xs in roots(3)) {
        let one = Rational::one();
        let mut sum = Rational::zero();
        for x in &xs {
            match (&one - x).recip() {
                Some(v) => sum = &sum + &v,
                None => return Ok(()),
            }
        }
        // 1/(1 - x4) = 1 - sum
        let Some(inv) = (&one - &sum).recip() else { return Ok(()) };
        let x4 = &one - &inv;
        let mut all = xs.clone();
        all.push(x4);
        let phi = QPoly::from_roots(&all);
        prop_assume!(phi.is_squarefree());
        match lemma4_construct(&phi) {
            Ok(f) => {
                for x in &all {
                    let p = Point::Finite(x.clone());
                    prop_assert_eq!(f.apply(&p), p.clone());
                    prop_assert_eq!(&multiplier_at(&f, &p), x);
                }
            }
            Err(e) => prop_assert!(!e.is_theorem_violation(), "{e}"),
        }
    }

    #[test]
    fn ncrit_derivative_identity(d in 4usize..=12, ks in prop::collection::vec(1usize..=4, 1..=3), g0 in 1i64..=5) {
        prop_assume!(ks.iter().sum::<usize>() <= d - 2);
        let syms = [Var::G, Var::H];
        let mut gammas = vec![Param::value(g0)];
        for i in 1..ks.len() {
            gammas.push(Param::Symbol(syms[i - 1]));
        }
        let spec = NCritSpec::new(d, ks, gammas, Param::Symbol(Var::A), Param::Symbol(Var::C)).unwrap();
        let f = ncrit_polynomial(&spec).unwrap();
        let target = &QMultiPoly::q_var(Var::A) * &ncrit_derivative_target(&spec);
        prop_assert_eq!(f.derivative(Var::Z), target);
        prop_assert_eq!(f.degree_in(Var::Z), Some(d as u32));
    }

    #[test]
    fn belyi_is_normalized(d in 3usize..=12, k in 1usize..=10) {
        prop_assume!(k <= d - 2);
        let b = belyi_poly(BelyiParams::new(d, k).unwrap());
        prop_assert!(b.coeffs().iter().all(Rational::is_integer));
        prop_assert!(b.eval(&Rational::zero()).is_zero());
        prop_assert!(b.eval(&Rational::one()).is_one());
        let (e0, e1, einf) = BelyiParams::new(d, k).unwrap().branch_type();
        prop_assert_eq!((e0 - 1) + (e1 - 1) + (einf - 1), 2 * d - 2);
    }

    #[test]
    fn bicritical_conjugacy_is_symmetric(a in rat(), c in rat(), d in 3usize..=7, k in 1usize..=5, flip in any::<bool>()) {
        prop_assume!(!a.is_zero() && k <= d - 2);
        let f = Bicritical::new(a, c, d, k).unwrap();
        let g = if flip { f.swapped() } else { Bicritical::new(f.a.clone(), &f.c + &Rational::one(), d, k).unwrap() };
        prop_assert_eq!(bicritical_conjugacy(&f, &g), bicritical_conjugacy(&g, &f));
        prop_assert_eq!(f.canonical().canonical(), f.canonical());
        let swap = Mobius::from_ints(-1, 1, 0, 1).unwrap();
        let conj = conjugate(&f.map(), &swap) == g.map();
        let rel = bicritical_conjugacy(&f, &g);
        prop_assert_eq!(rel != Conjugacy::Distinct, conj || f == g);
    }

    #[test]
    fn transversality_identity(d in 3usize..=8, k in 1usize..=3, m in 1usize..=3, n in 1usize..=3) {
        prop_assume!(k <= BelyiParams::canonical_bound(d));
        let sd = sylvester_datum(d, k).unwrap();
        let r = jacobian_certify(&sd, m, n, 1).unwrap();
        prop_assert!(r.identity_holds && r.partial_a_holds && r.partial_c_holds && r.certified());
    }

    #[test]
    fn json_round_trips(f in cubic_map()) {
        let text = serde_json::to_string(&f).unwrap();
        prop_assert_eq!(&serde_json::from_str::<RationalMap>(&text).unwrap(), &f);
        let p = QMultiPoly::from_unipoly(f.num(), Var::Z);
        let text = serde_json::to_string(&p).unwrap();
        prop_assert_eq!(serde_json::from_str::<QMultiPoly>(&text).unwrap(), p);
    }
}
