use super::*;
use crate::afamilies::{a_type_polynomial, ATypeFamily, ATypeParams};
use crate::bcfamilies::{
    bc_interp_polynomial, jacobi_binomial_terms, jacobi_polynomial, koornwinder_binomial_terms, koornwinder_polynomial,
    orthogonal_bc_evaluation, BCInterpParams, OrthogonalBCParams,
};
use crate::combinatorics::Partition;
use crate::exactalg::{rat, Rational};

const SHAPES: [(usize, usize); 9] = [(0, 0), (1, 0), (2, 0), (1, 1), (3, 0), (2, 1), (3, 1), (2, 2), (4, 1)];

fn lam(m1: usize, m2: usize) -> Partition {
    Partition::from_slice(&[m1, m2])
}

fn qt() -> (Rational, Rational) {
    (rat(1, 3), rat(2, 7))
}

fn kp() -> KoornwinderParams<Rational> {
    let q = rat(1, 3);
    let (a1, d1) = (rat(3, 2), rat(2, 3));
    let (a2, a3) = (rat(2, 5), rat(-1, 4));
    let a4 = q.clone() * d1.clone() * d1.clone() / (a1.clone() * a2.clone() * a3.clone());
    KoornwinderParams::new(q, rat(2, 7), [a1, a2, a3, a4], d1, 2).unwrap()
}

fn jp() -> JacobiParams<Rational> {
    JacobiParams::new(rat(3, 2), rat(1, 3), rat(2, 5), 2)
}

#[test]
fn bc_interp_macdonald_forms_match_tableau_sum() {
    let (q, t) = qt();
    let a = rat(5, 4);
    let params = BCInterpParams::q_case(q.clone(), t.clone(), a.clone(), 2);
    for (m1, m2) in SHAPES {
        let expect = bc_interp_polynomial(&lam(m1, m2), &params).unwrap();
        let f = TwoVarFormula::BcInterpMacdonald { q: q.clone(), t: t.clone(), a: a.clone() };
        assert_eq!(two_var_formula(&f, m1, m2).unwrap(), expect, "({m1},{m2})");
        assert_eq!(bc_interp_macdonald_double_sum(m1, m2, &q, &t, &a).unwrap(), expect, "double ({m1},{m2})");
        if m2 == 0 {
            let f = TwoVarFormula::BcInterpMacdonaldOneRow { q: q.clone(), t: t.clone(), a: a.clone() };
            assert_eq!(two_var_formula(&f, m1, 0).unwrap(), expect);
        }
    }
}

#[test]
fn interp_macdonald_forms_match_tableau_sum() {
    let (q, t) = qt();
    let params = ATypeParams::q_case(q.clone(), t.clone(), 2);
    for (m1, m2) in SHAPES {
        let expect = a_type_polynomial(ATypeFamily::InterpMacdonald, &lam(m1, m2), &params).unwrap();
        let f = TwoVarFormula::InterpMacdonald { q: q.clone(), t: t.clone() };
        assert_eq!(two_var_formula(&f, m1, m2).unwrap(), expect, "({m1},{m2})");
        assert_eq!(interp_macdonald_before_inversion(m1, m2, &q, &t).unwrap(), expect, "pre ({m1},{m2})");
    }
}

#[test]
fn macdonald_and_jack_forms_match_tableau_sum() {
    let (q, t) = qt();
    let tau = rat(3, 2);
    let qp = ATypeParams::q_case(q.clone(), t.clone(), 2);
    let jp = ATypeParams::one_case(tau.clone(), 2);
    for (m1, m2) in SHAPES {
        let mac = a_type_polynomial(ATypeFamily::Macdonald, &lam(m1, m2), &qp).unwrap();
        let jack = a_type_polynomial(ATypeFamily::Jack, &lam(m1, m2), &jp).unwrap();
        for form in [SeriesForm::Hypergeometric, SeriesForm::ExplicitSum, SeriesForm::Ultraspherical] {
            let f = TwoVarFormula::Macdonald { q: q.clone(), t: t.clone(), form };
            assert_eq!(two_var_formula(&f, m1, m2).unwrap(), mac, "{form:?} ({m1},{m2})");
            let f = TwoVarFormula::Jack { tau: tau.clone(), form };
            assert_eq!(two_var_formula(&f, m1, m2).unwrap(), jack, "{form:?} ({m1},{m2})");
        }
    }
}

#[test]
fn interp_jack_and_bc_interp_jack_match_tableau_sum() {
    let (tau, alpha) = (rat(3, 2), rat(1, 3));
    let ap = ATypeParams::one_case(tau.clone(), 2);
    let bp = BCInterpParams::one_case(tau.clone(), alpha.clone(), 2);
    for (m1, m2) in SHAPES {
        let f = TwoVarFormula::InterpJack { tau: tau.clone() };
        let expect = a_type_polynomial(ATypeFamily::InterpJack, &lam(m1, m2), &ap).unwrap();
        assert_eq!(two_var_formula(&f, m1, m2).unwrap(), expect, "({m1},{m2})");
        let f = TwoVarFormula::BcInterpJack { tau: tau.clone(), alpha: alpha.clone() };
        let expect = bc_interp_polynomial(&lam(m1, m2), &bp).unwrap();
        assert_eq!(two_var_formula(&f, m1, m2).unwrap(), expect, "({m1},{m2})");
    }
}

#[test]
fn koornwinder_quotient_and_evaluation_match_general_code() {
    let p = kp();
    for (m1, m2) in SHAPES {
        let e_m = koornwinder_two_var_evaluation(m1, m2, &p).unwrap();
        assert_eq!(e_m, orthogonal_bc_evaluation(&lam(m1, m2), &OrthogonalBCParams::Koornwinder(p.clone())).unwrap());
        for (mu, c) in koornwinder_binomial_terms(&lam(m1, m2), &p).unwrap() {
            let k = (mu.part(1), mu.part(2));
            let e_k = koornwinder_two_var_evaluation(k.0, k.1, &p).unwrap();
            let q = koornwinder_two_var_quotient((m1, m2), k, &p).unwrap();
            assert_eq!(q * e_m.clone() / e_k, c, "({m1},{m2}) at {k:?}");
        }
        let f = TwoVarFormula::Koornwinder(p.clone());
        assert_eq!(two_var_formula(&f, m1, m2).unwrap(), koornwinder_polynomial(&lam(m1, m2), &p).unwrap());
    }
}

#[test]
fn jacobi_quotient_and_evaluation_match_general_code() {
    let p = jp();
    for (m1, m2) in SHAPES {
        let e_m = jacobi_two_var_evaluation(m1, m2, &p).unwrap();
        assert_eq!(e_m, orthogonal_bc_evaluation(&lam(m1, m2), &OrthogonalBCParams::Jacobi(p.clone())).unwrap());
        for (mu, c) in jacobi_binomial_terms(&lam(m1, m2), &p).unwrap() {
            let k = (mu.part(1), mu.part(2));
            let e_k = jacobi_two_var_evaluation(k.0, k.1, &p).unwrap();
            let q = jacobi_two_var_quotient((m1, m2), k, &p).unwrap();
            assert_eq!(q * e_m.clone() / e_k, c, "({m1},{m2}) at {k:?}");
        }
        let f = TwoVarFormula::Jacobi(p.clone());
        assert_eq!(two_var_formula(&f, m1, m2).unwrap(), jacobi_polynomial(&lam(m1, m2), &p).unwrap());
    }
}

#[test]
fn ultraspherical_is_palindromic() {
    let k = UltrasphericalKind::QCase { t: rat(2, 7), q: rat(1, 3) };
    for m in 0..5 {
        let c = ultraspherical(&k, m).unwrap();
        assert_eq!(c.invert_vars(), c);
    }
    assert!(ultraspherical_to_two_vars(&ultraspherical(&k, 1).unwrap(), 2).is_err());
}

#[test]
fn rejects_decreasing_shape() {
    let (q, t) = qt();
    assert!(two_var_formula(&TwoVarFormula::InterpMacdonald { q, t }, 1, 2).is_err());
}
