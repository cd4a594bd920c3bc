//! Randomized invariants over exact fields.

use bcinterp::afamilies::{a_type_polynomial, spectral_point, ATypeFamily, ATypeParams};
use bcinterp::bcfamilies::{bc_interp_polynomial, bc_spectral_point, koornwinder_polynomial, BCInterpParams, KoornwinderParams};
use bcinterp::cli::{run, CommandSpec, ResultDocument, Subcommand};
use bcinterp::combinatorics::{enumerate_partitions, Partition};
use bcinterp::error::Error;
use bcinterp::exactalg::{monomial_expansion, rat, Exponent, Field, LaurentPoly, RatFunc, Rational, UPoly};
use proptest::prelude::*;

/// Nonzero rationals away from the roots of unity that make the families degenerate.
fn generic() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=9)
        .prop_map(|(p, d)| rat(p, d))
        .prop_filter("generic", |r| !r.is_zero() && *r != rat(1, 1) && *r != rat(-1, 1))
}

fn partition(max_weight: usize, n: usize) -> impl Strategy<Value = Partition> {
    let all = enumerate_partitions(max_weight, n);
    (0..all.len()).prop_map(move |i| all[i].clone())
}

fn laurent(nvars: usize) -> impl Strategy<Value = LaurentPoly<Rational>> {
    prop::collection::vec((prop::collection::vec(-2i32..=2, nvars), -5i64..=5), 0..6).prop_map(move |terms| {
        LaurentPoly::from_terms(nvars, terms.into_iter().map(|(e, c)| (Exponent(e), rat(c, 1))))
    })
}

fn upoly() -> impl Strategy<Value = UPoly> {
    prop::collection::vec(-4i64..=4, 0..4).prop_map(|c| UPoly::from_coeffs(c.into_iter().map(|k| rat(k, 1)).collect()))
}

/// Allow parameter draws the library rejects as non-generic.
fn generic_only<T>(r: Result<T, Error>) -> Result<Option<T>, TestCaseError> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(Error::NonGeneric { .. }) => Ok(None),
        Err(e) => Err(TestCaseError::fail(e.to_string())),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn evaluation_is_a_ring_homomorphism(a in laurent(2), b in laurent(2), x in generic(), y in generic()) {
        let pt = [x, y];
        let lhs = (&a * &b).evaluate(&pt).unwrap();
        prop_assert_eq!(lhs, a.evaluate(&pt).unwrap() * b.evaluate(&pt).unwrap());
        let sum = (&a + &b).evaluate(&pt).unwrap();
        prop_assert_eq!(sum, a.evaluate(&pt).unwrap() + b.evaluate(&pt).unwrap());
    }

    #[test]
    fn inverting_variables_is_an_involution(a in laurent(3)) {
        prop_assert_eq!(a.invert_vars().invert_vars(), a);
    }

    #[test]
    fn rational_functions_reduce_canonically(n in upoly(), d in upoly(), k in upoly()) {
        prop_assume!(!d.is_zero() && !k.is_zero());
        let r = RatFunc::new(n.clone(), d.clone()).unwrap();
        let scaled = RatFunc::new(&n * &k, &d * &k).unwrap();
        prop_assert_eq!(&r, &scaled);
        prop_assert_eq!(RatFunc::parse_canonical(&r.to_string()).unwrap(), r.clone());
        if !r.is_zero() {
            prop_assert!((r.clone() * r.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn conjugation_is_an_involution(l in partition(8, 8)) {
        prop_assert_eq!(l.conjugate().conjugate(), l.clone());
        prop_assert_eq!(l.conjugate().weight(), l.weight());
    }

    #[test]
    fn macdonald_polynomials_are_symmetric_and_monic(l in partition(4, 3), q in generic(), t in generic()) {
        let params = ATypeParams::q_case(q, t, 3);
        if let Some(p) = generic_only(a_type_polynomial(ATypeFamily::Macdonald, &l, &params))? {
            prop_assert!(p.is_symmetric());
            prop_assert!(p.is_homogeneous() || p.is_zero());
            let exp = monomial_expansion(&p, false).unwrap();
            prop_assert_eq!(exp.last().map(|(mu, c)| (mu.clone(), c.is_one())), Some((l.clone(), true)));
        }
    }

    #[test]
    fn interpolation_polynomials_vanish_off_the_upper_set(l in partition(3, 2), mu in partition(4, 2), q in generic(), t in generic(), a in generic()) {
        prop_assume!(!l.is_contained_in(&mu));
        let ap = ATypeParams::q_case(q.clone(), t.clone(), 2);
        if let Some(p) = generic_only(a_type_polynomial(ATypeFamily::InterpMacdonald, &l, &ap))? {
            prop_assert!(p.evaluate(&spectral_point(&mu, &ap).unwrap()).unwrap().is_zero());
        }
        let bp = BCInterpParams::q_case(q, t, a, 2);
        if let Some(p) = generic_only(bc_interp_polynomial(&l, &bp))? {
            prop_assert!(p.evaluate(&bc_spectral_point(&mu, &bp).unwrap()).unwrap().is_zero());
        }
    }

    #[test]
    fn koornwinder_polynomials_are_invariant(l in partition(3, 2), v in prop::collection::vec(generic(), 6)) {
        let (q, t, a1, d1, a2, a3) = (&v[0], &v[1], &v[2], &v[3], &v[4], &v[5]);
        let a4 = q.clone() * d1.clone() * d1.clone() / (a1.clone() * a2.clone() * a3.clone());
        let kp = KoornwinderParams::new(q.clone(), t.clone(), [a1.clone(), a2.clone(), a3.clone(), a4], d1.clone(), 2).unwrap();
        if let Some(p) = generic_only(koornwinder_polynomial(&l, &kp))? {
            prop_assert!(p.is_hyperoctahedral_invariant());
            prop_assert!(p.coefficient(&[l.part(1) as i32, l.part(2) as i32]).is_one());
        }
    }

    #[test]
    fn result_documents_round_trip(l in partition(3, 2), q in generic(), t in generic()) {
        let mut spec = CommandSpec::new(Subcommand::Compute);
        spec.family = Some("macdonald".into());
        spec.partition = l.parts().to_vec();
        spec.n = Some(2);
        spec.params.insert("q".into(), q.to_string());
        spec.params.insert("t".into(), t.to_string());
        let doc = run(&spec).unwrap();
        let json = doc.to_json();
        prop_assert_eq!(&ResultDocument::from_json(&json).unwrap(), &doc);
        prop_assert_eq!(run(&spec).unwrap().to_json(), json);
    }
}
