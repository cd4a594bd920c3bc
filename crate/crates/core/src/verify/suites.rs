use super::{par_cases, random_rational, rng, Bounds, SuiteConfig, Tally};
use crate::afamilies::{
    a_type_evaluation, a_type_polynomial, interpolation_node_value, spectral_point, tableau_weight, ATypeFamily,
    ATypeMode, ATypeParams,
};
use crate::bcfamilies::{
    bc_interp_evaluation, bc_interp_polynomial, bc_interp_reduction, bc_spectral_point, jacobi_binomial_terms,
    jacobi_expansion_coefficient, jacobi_polynomial, koornwinder_binomial_terms, koornwinder_polynomial,
    orthogonal_bc_evaluation, BCInterpParams, EvaluationForm, InterpolationRoute, JacobiParams, KoornwinderParams,
    OrthogonalBCParams,
};
use crate::combinatorics::{enumerate_partitions, Partition, ReverseTableau};
use crate::error::{Error, Result};
use crate::exactalg::symmetric::is_triangular_monic;
use crate::exactalg::{
    apply_moment, monomial_expansion, q_pochhammer, rat, rational_limit, ConstantTermWeight, Field, LaurentPoly,
    LimitMode, MomentFunctional, MomentFunctionalSpec, RatFunc, Rational,
};
use crate::limits::{check_limit, LimitId, LimitParams};
use crate::twovar::{self, prelude, SeriesForm, TwoVarFormula, UltrasphericalKind};

/// Fixed generic parameters for suites that do not sample.
struct Generic {
    q: Rational,
    t: Rational,
    a: Rational,
    tau: Rational,
    alpha: Rational,
    beta: Rational,
}

const GENERIC: fn() -> Generic = || Generic {
    q: rat(1, 3),
    t: rat(2, 7),
    a: rat(5, 4),
    tau: rat(3, 2),
    alpha: rat(1, 3),
    beta: rat(2, 5),
};

/// `a_1 = 3/2`, `a'_1 = 2/3`, `a_2 = 2/5`, `a_3 = -1/4` and `a_4` fixed by the square-root condition.
fn koornwinder_params(q: &Rational, t: &Rational, n: usize) -> Result<KoornwinderParams<Rational>> {
    koornwinder_from(q.clone(), t.clone(), [rat(3, 2), rat(2, 3), rat(2, 5), rat(-1, 4)], n)
}

fn koornwinder_from(q: Rational, t: Rational, [a1, d1, a2, a3]: [Rational; 4], n: usize) -> Result<KoornwinderParams<Rational>> {
    let a4 = crate::exactalg::checked_div(q.clone() * d1.clone() * d1.clone(), &(a1.clone() * a2.clone() * a3.clone()), || {
        "a_1 a_2 a_3".into()
    })?;
    KoornwinderParams::new(q, t, [a1, a2, a3, a4], d1, n)
}

fn shapes(b: Bounds) -> Vec<Partition> {
    enumerate_partitions(b.max_weight, b.n)
}

fn lam(parts: &[usize]) -> Partition {
    Partition::from_slice(parts)
}

pub(super) fn vanishing(b: Bounds) -> Result<Tally> {
    let g = GENERIC();
    let n = b.n;
    let mac = ATypeParams::q_case(g.q.clone(), g.t.clone(), n);
    let jack = ATypeParams::one_case(g.tau.clone(), n);
    let bcq = BCInterpParams::q_case(g.q.clone(), g.t.clone(), g.a.clone(), n);
    let bcj = BCInterpParams::one_case(g.tau.clone(), g.alpha.clone(), n);
    par_cases(&shapes(b), |lambda| {
        let mut tally = Tally::default();
        let a_polys = [
            (ATypeFamily::InterpMacdonald, &mac, a_type_polynomial(ATypeFamily::InterpMacdonald, lambda, &mac)?),
            (ATypeFamily::InterpJack, &jack, a_type_polynomial(ATypeFamily::InterpJack, lambda, &jack)?),
        ];
        let bc_polys = [(&bcq, bc_interp_polynomial(lambda, &bcq)?), (&bcj, bc_interp_polynomial(lambda, &bcj)?)];
        for mu in enumerate_partitions(lambda.weight() + 2, n) {
            let contains = lambda.is_contained_in(&mu);
            if !contains || mu == *lambda {
                for (family, params, p) in &a_polys {
                    let v = p.evaluate(&spectral_point(&mu, params)?)?;
                    let ctx = || format!("{family:?} λ={lambda} μ={mu} n={n}");
                    if contains {
                        tally.check(!v.is_zero(), "nonzero at own node", ctx);
                        tally.eq(&v, &interpolation_node_value(lambda, params)?, "A-type node value", ctx);
                    } else {
                        tally.check(v.is_zero(), "vanishing at non-containing node", ctx);
                    }
                }
                for (params, p) in &bc_polys {
                    let v = p.evaluate(&bc_spectral_point(&mu, params)?)?;
                    let ctx = || format!("BC interpolation {:?} λ={lambda} μ={mu} n={n}", params.mode);
                    if contains {
                        tally.check(!v.is_zero(), "nonzero at own node", ctx);
                        for form in [EvaluationForm::BoxProduct, EvaluationForm::Factored] {
                            tally.eq(&v, &bc_interp_evaluation(lambda, params, form)?, "BC node value", ctx);
                        }
                    } else {
                        tally.check(v.is_zero(), "vanishing at non-containing node", ctx);
                    }
                }
            }
        }
        Ok(tally)
    })
}

pub(super) fn evaluation(b: Bounds) -> Result<Tally> {
    let g = GENERIC();
    let n = b.n;
    let mac = ATypeParams::q_case(g.q.clone(), g.t.clone(), n);
    let jack = ATypeParams::one_case(g.tau.clone(), n);
    let kp = koornwinder_params(&g.q, &g.t, n)?;
    let jp = JacobiParams::new(g.tau.clone(), g.alpha.clone(), g.beta.clone(), n);
    let bcq = BCInterpParams::q_case(g.q.clone(), g.t.clone(), g.a.clone(), n);
    let bcj = BCInterpParams::one_case(g.tau.clone(), g.alpha.clone(), n);
    par_cases(&shapes(b), |lambda| {
        let mut tally = Tally::default();
        let ctx = || format!("λ={lambda} n={n}");

        let p = a_type_polynomial(ATypeFamily::Macdonald, lambda, &mac)?;
        let e = a_type_evaluation(ATypeFamily::Macdonald, lambda, &mac)?;
        tally.eq(&p.evaluate(&spectral_point(&Partition::empty(), &mac)?)?, &e, "Macdonald principal value", ctx);
        let p = a_type_polynomial(ATypeFamily::Jack, lambda, &jack)?;
        let e = a_type_evaluation(ATypeFamily::Jack, lambda, &jack)?;
        tally.eq(&p.evaluate(&vec![Rational::one(); n])?, &e, "Jack value at 1^n", ctx);

        let e = orthogonal_bc_evaluation(lambda, &OrthogonalBCParams::Koornwinder(kp.clone()))?;
        let node = bc_spectral_point(&Partition::empty(), &kp.interp(&kp.a[0]))?;
        tally.eq(&koornwinder_polynomial(lambda, &kp)?.evaluate(&node)?, &e, "Koornwinder value at t^δ a_1", ctx);
        let e_j = orthogonal_bc_evaluation(lambda, &OrthogonalBCParams::Jacobi(jp.clone()))?;
        tally.eq(&jacobi_polynomial(lambda, &jp)?.constant_term(), &e_j, "BC-Jacobi value at 0", ctx);
        if n == 2 {
            let (m1, m2) = (lambda.part(1), lambda.part(2));
            tally.eq(&twovar::koornwinder_two_var_evaluation(m1, m2, &kp)?, &e, "Koornwinder two-variable value", ctx);
            tally.eq(&twovar::jacobi_two_var_evaluation(m1, m2, &jp)?, &e_j, "BC-Jacobi two-variable value", ctx);
        }

        for params in [&bcq, &bcj] {
            let direct = bc_interp_polynomial(lambda, params)?.evaluate(&bc_spectral_point(lambda, params)?)?;
            for form in [EvaluationForm::BoxProduct, EvaluationForm::Factored] {
                let v = bc_interp_evaluation(lambda, params, form)?;
                tally.eq(&v, &direct, "BC interpolation value at own node", || format!("{form:?} {:?} {}", params.mode, ctx()));
            }
        }
        Ok(tally)
    })
}

/// Retry `f` with fresh draws while it reports non-generic parameters.
fn with_generic_draw<T>(rng: &mut rand_chacha::ChaCha8Rng, mut f: impl FnMut(&mut rand_chacha::ChaCha8Rng) -> Result<T>) -> Result<T> {
    let mut last = None;
    for _ in 0..64 {
        match f(rng) {
            Err(e @ Error::NonGeneric { .. }) => last = Some(e),
            other => return other,
        }
    }
    Err(last.expect("at least one attempt"))
}

pub(super) fn duality(b: Bounds, config: SuiteConfig) -> Result<Tally> {
    let n = b.n;
    let ps = shapes(b);
    let mut rng = rng(config.seed);
    let mut tally = Tally::default();
    for draw in 0..config.draws {
        let part = with_generic_draw(&mut rng, |r| {
            let (q, t) = (random_rational(r), random_rational(r));
            let mac = ATypeParams::q_case(q.clone(), t.clone(), n);
            let rows = ps
                .iter()
                .map(|lambda| {
                    let p = a_type_polynomial(ATypeFamily::Macdonald, lambda, &mac)?;
                    let e = a_type_evaluation(ATypeFamily::Macdonald, lambda, &mac)?;
                    ps.iter()
                        .map(|nu| {
                            let v = p.evaluate(&spectral_point(nu, &mac)?)?;
                            crate::exactalg::checked_div(v, &e, || format!("P_{lambda}(t^δ)"))
                        })
                        .collect::<Result<Vec<_>>>()
                })
                .collect::<Result<Vec<_>>>()?;
            let mut acc = Tally::default();
            for i in 0..ps.len() {
                for j in 0..ps.len() {
                    acc.eq(&rows[i][j], &rows[j][i], "Macdonald duality", || {
                        format!("λ={} ν={} q={q} t={t} draw {draw}", ps[i], ps[j])
                    });
                }
            }
            Ok(acc)
        })?;
        tally.merge(part);

        let part = with_generic_draw(&mut rng, |r| {
            let (q, t) = (random_rational(r), random_rational(r));
            let a = [random_rational(r), random_rational(r), random_rational(r), random_rational(r)];
            let kp = koornwinder_from(q, t, a, n)?;
            let table = |p: &KoornwinderParams<Rational>| -> Result<Vec<Vec<Rational>>> {
                let own = p.interp(&p.a[0]);
                ps.iter()
                    .map(|lambda| {
                        let f = koornwinder_polynomial(lambda, p)?;
                        let e = orthogonal_bc_evaluation(lambda, &OrthogonalBCParams::Koornwinder(p.clone()))?;
                        ps.iter()
                            .map(|nu| {
                                let v = f.evaluate(&bc_spectral_point(nu, &own)?)?;
                                crate::exactalg::checked_div(v, &e, || format!("P_{lambda}(t^δ a_1)"))
                            })
                            .collect()
                    })
                    .collect()
            };
            let (v, w) = (table(&kp)?, table(&kp.dual())?);
            let mut acc = Tally::default();
            for i in 0..ps.len() {
                for j in 0..ps.len() {
                    acc.eq(&v[i][j], &w[j][i], "Koornwinder duality", || {
                        format!("λ={} ν={} params {:?} draw {draw}", ps[i], ps[j], kp)
                    });
                }
            }
            Ok(acc)
        })?;
        tally.merge(part);
    }
    Ok(tally)
}

pub(super) fn binomial(b: Bounds) -> Result<Tally> {
    let g = GENERIC();
    let n = b.n;
    let mac = ATypeParams::q_case(g.q.clone(), g.t.clone(), n);
    let jack = ATypeParams::one_case(g.tau.clone(), n);
    let kp = koornwinder_params(&g.q, &g.t, n)?;
    let jp = JacobiParams::new(g.tau.clone(), g.alpha.clone(), g.beta.clone(), n);
    par_cases(&shapes(b), |lambda| {
        let mut tally = Tally::default();
        let ctx = || format!("λ={lambda} n={n}");

        // Interpolation values at spectral points, normalized by the node value.
        let ratio = |family: ATypeFamily, params: &ATypeParams<Rational>, mu: &Partition| -> Result<Rational> {
            let ip = a_type_polynomial(family, mu, params)?;
            let top = ip.evaluate(&spectral_point(lambda, params)?)?;
            crate::exactalg::checked_div(top, &ip.evaluate(&spectral_point(mu, params)?)?, || format!("P^ip_{mu}"))
        };

        let e = a_type_evaluation(ATypeFamily::Macdonald, lambda, &mac)?;
        let lhs = a_type_polynomial(ATypeFamily::Macdonald, lambda, &mac)?.scale(&e.inv().expect("generic"));
        let mut rhs = LaurentPoly::zero(n);
        for mu in lambda.subpartitions() {
            let c = ratio(ATypeFamily::InterpMacdonald, &mac, &mu)?;
            let e_mu = a_type_evaluation(ATypeFamily::Macdonald, &mu, &mac)?;
            let ip = a_type_polynomial(ATypeFamily::InterpMacdonald, &mu, &mac)?;
            rhs = rhs + ip.scale(&(c / e_mu));
        }
        tally.eq(&lhs, &rhs, "Macdonald binomial formula", ctx);

        let e = a_type_evaluation(ATypeFamily::Jack, lambda, &jack)?;
        let shift: Vec<_> = (0..n).map(|i| LaurentPoly::var(n, i) + LaurentPoly::one(n)).collect();
        let lhs = a_type_polynomial(ATypeFamily::Jack, lambda, &jack)?.substitute(&shift)?.scale(&e.inv().expect("generic"));
        let mut rhs = LaurentPoly::zero(n);
        for mu in lambda.subpartitions() {
            let c = ratio(ATypeFamily::InterpJack, &jack, &mu)?;
            let e_mu = a_type_evaluation(ATypeFamily::Jack, &mu, &jack)?;
            rhs = rhs + a_type_polynomial(ATypeFamily::Jack, &mu, &jack)?.scale(&(c / e_mu));
        }
        tally.eq(&lhs, &rhs, "Jack binomial formula", ctx);

        let f = koornwinder_polynomial(lambda, &kp)?;
        let exp = monomial_expansion(&f, true)?;
        tally.check(is_triangular_monic(&exp, lambda, n), "Koornwinder monic and triangular", || format!("{} {exp:?}", ctx()));
        tally.check(f.is_hyperoctahedral_invariant(), "Koornwinder invariance", ctx);
        for (i, j) in [(0, 1), (0, 2), (0, 3), (1, 2)] {
            let mut a = kp.a.clone();
            a.swap(i, j);
            let swapped = KoornwinderParams::new(kp.q.clone(), kp.t.clone(), a, kp.a_dual_1.clone(), n)?;
            tally.eq(&koornwinder_polynomial(lambda, &swapped)?, &f, "Koornwinder parameter symmetry", || {
                format!("swap a_{} a_{} {}", i + 1, j + 1, ctx())
            });
        }

        let f = jacobi_polynomial(lambda, &jp)?;
        let exp = monomial_expansion(&f, false)?;
        tally.check(is_triangular_monic(&exp, lambda, n), "BC-Jacobi monic and triangular", || format!("{} {exp:?}", ctx()));
        tally.check(f.is_symmetric(), "BC-Jacobi symmetry", ctx);
        let jack_basis = jp.a_type();
        let mut sum = LaurentPoly::zero(n);
        for mu in lambda.subpartitions() {
            let c = jacobi_expansion_coefficient(lambda, &mu, &jp, InterpolationRoute::TableauSum)?;
            sum = sum + a_type_polynomial(ATypeFamily::Jack, &mu, &jack_basis)?.scale(&c);
        }
        tally.eq(&sum, &f, "BC-Jacobi expansion in Jack polynomials", ctx);
        Ok(tally)
    })
}

/// A bilinear pairing of two polynomials.
type Pairing<'a> = dyn Fn(&LaurentPoly<Rational>, &LaurentPoly<Rational>) -> Result<Rational> + Sync + 'a;

pub(super) fn orthogonality(b: Bounds) -> Result<Tally> {
    let n = b.n;
    let ps = shapes(b);
    let q = rat(1, 3);
    let mut tally = Tally::default();

    let gram = |polys: &[LaurentPoly<Rational>], apply: &Pairing<'_>, name: &str| -> Result<Tally> {
        let idx: Vec<usize> = (0..polys.len()).collect();
        par_cases(&idx, |&i| {
            let mut t = Tally::default();
            for j in 0..polys.len() {
                let v = apply(&polys[i], &polys[j])?;
                let ctx = || format!("{name} λ={} μ={} n={n}", ps[i], ps[j]);
                if i == j {
                    t.check(!v.is_zero(), "nonzero norm", ctx);
                } else {
                    t.check(v.is_zero(), "orthogonality", || format!("{} value {v}", ctx()));
                }
            }
            Ok(t)
        })
    };

    let t = q.clone() * q.clone();
    let mac = ATypeParams::q_case(q.clone(), t.clone(), n);
    let polys = ps.iter().map(|l| a_type_polynomial(ATypeFamily::Macdonald, l, &mac)).collect::<Result<Vec<_>>>()?;
    let ct = MomentFunctional::new(MomentFunctionalSpec::ConstantTerm(ConstantTermWeight::macdonald(&q, &t)?), n);
    tally.merge(gram(&polys, &|a, b| ct.apply(&(a * &b.invert_vars())), "Macdonald at t = q^2")?);

    let tau = rat(2, 1);
    let jack = ATypeParams::one_case(tau.clone(), n);
    let polys = ps.iter().map(|l| a_type_polynomial(ATypeFamily::Jack, l, &jack)).collect::<Result<Vec<_>>>()?;
    let ct = MomentFunctional::new(MomentFunctionalSpec::ConstantTerm(ConstantTermWeight::jack(&tau)?), n);
    tally.merge(gram(&polys, &|a, b| ct.apply(&(a * &b.invert_vars())), "Jack at τ = 2")?);

    for tau in [rat(1, 1), rat(2, 1)] {
        let jp = JacobiParams::new(tau.clone(), rat(1, 3), rat(2, 5), n);
        let polys = ps.iter().map(|l| jacobi_polynomial(l, &jp)).collect::<Result<Vec<_>>>()?;
        let spec = MomentFunctionalSpec::jacobi_beta(jp.alpha.clone(), jp.beta.clone(), &tau)?;
        let beta = MomentFunctional::new(spec, n);
        tally.merge(gram(&polys, &|a, b| beta.apply(&(a * b)), &format!("BC-Jacobi at τ = {tau}"))?);
    }
    Ok(tally)
}

pub(super) fn reduction(b: Bounds) -> Result<Tally> {
    let g = GENERIC();
    let n = b.n;
    let cases: Vec<Partition> = shapes(b).into_iter().filter(|l| matches!(l.part(n), 1 | 2)).collect();
    let bcq = BCInterpParams::q_case(g.q.clone(), g.t.clone(), g.a.clone(), n);
    let bcj = BCInterpParams::one_case(g.tau.clone(), g.alpha.clone(), n);
    par_cases(&cases, |lambda| {
        let mut tally = Tally::default();
        for params in [&bcq, &bcj] {
            let r = bc_interp_reduction(lambda, params)?;
            let rebuilt = &r.prefactor * &bc_interp_polynomial(&r.reduced, &r.shifted)?;
            tally.eq(&rebuilt, &bc_interp_polynomial(lambda, params)?, "column reduction", || {
                format!("λ={lambda} {:?}", params.mode)
            });
        }
        Ok(tally)
    })
}

pub(super) fn oracle_n2(b: Bounds) -> Result<Tally> {
    let g = GENERIC();
    let (q, t, a, tau, alpha) = (g.q.clone(), g.t.clone(), g.a.clone(), g.tau.clone(), g.alpha.clone());
    let mac = ATypeParams::q_case(q.clone(), t.clone(), 2);
    let jack = ATypeParams::one_case(tau.clone(), 2);
    let bcq = BCInterpParams::q_case(q.clone(), t.clone(), a.clone(), 2);
    let bcj = BCInterpParams::one_case(tau.clone(), alpha.clone(), 2);
    let kp = koornwinder_params(&q, &t, 2)?;
    let jp = JacobiParams::new(tau.clone(), alpha.clone(), g.beta.clone(), 2);
    let cases: Vec<(usize, usize)> = (0..=b.max_weight)
        .flat_map(|m1| (0..=m1.min(b.max_weight / 2)).map(move |m2| (m1, m2)))
        .collect();
    par_cases(&cases, |&(m1, m2)| {
        let mut tally = Tally::default();
        let l = lam(&[m1, m2]);
        let ctx = || format!("(m_1,m_2)=({m1},{m2})");
        let eval = |f: TwoVarFormula<Rational>| twovar::two_var_formula(&f, m1, m2);

        let p = bc_interp_polynomial(&l, &bcq)?;
        let f = eval(TwoVarFormula::BcInterpMacdonald { q: q.clone(), t: t.clone(), a: a.clone() })?;
        tally.eq(&f, &p, "BC interpolation Macdonald closed form", ctx);
        tally.eq(&twovar::bc_interp_macdonald_double_sum(m1, m2, &q, &t, &a)?, &p, "BC interpolation Macdonald double sum", ctx);
        if m2 == 0 {
            let f = eval(TwoVarFormula::BcInterpMacdonaldOneRow { q: q.clone(), t: t.clone(), a: a.clone() })?;
            tally.eq(&f, &p, "BC interpolation Macdonald one row", ctx);
        }

        let p = a_type_polynomial(ATypeFamily::InterpMacdonald, &l, &mac)?;
        tally.eq(&eval(TwoVarFormula::InterpMacdonald { q: q.clone(), t: t.clone() })?, &p, "interpolation Macdonald", ctx);
        tally.eq(&twovar::interp_macdonald_before_inversion(m1, m2, &q, &t)?, &p, "series inversion", ctx);

        let pm = a_type_polynomial(ATypeFamily::Macdonald, &l, &mac)?;
        let pj = a_type_polynomial(ATypeFamily::Jack, &l, &jack)?;
        for form in [SeriesForm::Hypergeometric, SeriesForm::ExplicitSum, SeriesForm::Ultraspherical] {
            let f = eval(TwoVarFormula::Macdonald { q: q.clone(), t: t.clone(), form })?;
            tally.eq(&f, &pm, "Macdonald closed form", || format!("{form:?} {}", ctx()));
            let f = eval(TwoVarFormula::Jack { tau: tau.clone(), form })?;
            tally.eq(&f, &pj, "Jack closed form", || format!("{form:?} {}", ctx()));
        }

        let p = a_type_polynomial(ATypeFamily::InterpJack, &l, &jack)?;
        tally.eq(&eval(TwoVarFormula::InterpJack { tau: tau.clone() })?, &p, "interpolation Jack", ctx);
        let p = bc_interp_polynomial(&l, &bcj)?;
        let f = eval(TwoVarFormula::BcInterpJack { tau: tau.clone(), alpha: alpha.clone() })?;
        tally.eq(&f, &p, "BC interpolation Jack", ctx);

        let e_m = twovar::koornwinder_two_var_evaluation(m1, m2, &kp)?;
        for (mu, c) in koornwinder_binomial_terms(&l, &kp)? {
            let k = (mu.part(1), mu.part(2));
            let v = twovar::koornwinder_two_var_quotient((m1, m2), k, &kp)? * e_m.clone()
                / twovar::koornwinder_two_var_evaluation(k.0, k.1, &kp)?;
            tally.eq(&v, &c, "Koornwinder binomial coefficient", || format!("k={k:?} {}", ctx()));
        }
        tally.eq(&eval(TwoVarFormula::Koornwinder(kp.clone()))?, &koornwinder_polynomial(&l, &kp)?, "Koornwinder closed form", ctx);

        let e_m = twovar::jacobi_two_var_evaluation(m1, m2, &jp)?;
        for (mu, c) in jacobi_binomial_terms(&l, &jp)? {
            let k = (mu.part(1), mu.part(2));
            let v = twovar::jacobi_two_var_quotient((m1, m2), k, &jp)? * e_m.clone()
                / twovar::jacobi_two_var_evaluation(k.0, k.1, &jp)?;
            tally.eq(&v, &c, "BC-Jacobi binomial coefficient", || format!("k={k:?} {}", ctx()));
        }
        tally.eq(&eval(TwoVarFormula::Jacobi(jp.clone()))?, &jacobi_polynomial(&l, &jp)?, "BC-Jacobi closed form", ctx);
        Ok(tally)
    })
}

pub(super) fn prelude(b: Bounds) -> Result<Tally> {
    let g = GENERIC();
    let d = b.max_weight;
    let mut tally = Tally::default();
    let (q, a) = (g.q.clone(), g.a.clone());
    let x0 = rat(-7, 3);
    for n in 0..=d {
        let c = prelude::q_binomial_coefficients(n, &q)?;
        tally.eq(&c, &prelude::q_binomial_coefficients_by_ratio(n, &q)?, "q-binomial coefficients as value ratios", || format!("n={n}"));
        let sum = c.iter().enumerate().fold(LaurentPoly::zero(1), |acc, (k, ck)| acc + prelude::interp_macdonald_one_var(k, &q).scale(ck));
        tally.eq(&sum, &LaurentPoly::var_power(1, 0, n as i32, Rational::one()), "q-binomial expansion of x^n", || format!("n={n}"));
        let v = prelude::q_binomial_series_at(n, &q, &x0)?;
        tally.eq(&v, &x0.powi(n as i64).expect("nonzero"), "terminating 2φ0 at a point", || format!("n={n}"));

        let pascal: Vec<Rational> = (0..=n).map(|k| Rational::from_int(num_integer::binomial(n as i64, k as i64))).collect();
        tally.eq(&prelude::binomial_coefficients_by_ratio::<Rational>(n)?, &pascal, "binomial coefficients as value ratios", || format!("n={n}"));
        let at_one = prelude::q_binomial_coefficients(n, &RatFunc::s())?
            .iter()
            .map(|c| rational_limit(c, LimitMode::AtOne))
            .collect::<Result<Vec<_>>>()?;
        tally.eq(&at_one, &pascal, "q-binomial coefficients at q = 1", || format!("n={n}"));

        let l = lam(&[n]);
        let mp = ATypeParams::q_case(q.clone(), g.t.clone(), 1);
        tally.eq(&a_type_polynomial(ATypeFamily::InterpMacdonald, &l, &mp)?, &prelude::interp_macdonald_one_var(n, &q), "one-variable interpolation Macdonald", || format!("k={n}"));
        let jp1 = ATypeParams::one_case(g.tau.clone(), 1);
        tally.eq(&a_type_polynomial(ATypeFamily::InterpJack, &l, &jp1)?, &prelude::interp_jack_one_var(n), "one-variable interpolation Jack", || format!("k={n}"));
        let aw = prelude::askey_wilson_interp(n, &q, &a)?;
        tally.eq(&bc_interp_polynomial(&l, &BCInterpParams::q_case(q.clone(), g.t.clone(), a.clone(), 1))?, &aw, "one-variable Askey-Wilson interpolation", || format!("k={n}"));
        for j in 0..n {
            let node = a.clone() * q.powi(j as i64).expect("nonzero");
            tally.check(aw.evaluate(&[node])?.is_zero(), "Askey-Wilson interpolation vanishing", || format!("k={n} j={j}"));
        }
        let bj = BCInterpParams::one_case(g.tau.clone(), g.alpha.clone(), 1);
        tally.eq(&bc_interp_polynomial(&l, &bj)?, &prelude::jacobi_interp_one_var(n, &g.alpha), "one-variable Jacobi interpolation", || format!("k={n}"));

        let kp = koornwinder_params(&q, &g.t, 1)?;
        let e = orthogonal_bc_evaluation(&l, &OrthogonalBCParams::Koornwinder(kp.clone()))?;
        tally.eq(&prelude::askey_wilson(n, &q, &kp.a)?.scale(&e), &koornwinder_polynomial(&l, &kp)?, "Askey-Wilson 4φ3", || format!("n={n}"));
        let jp = JacobiParams::new(g.tau.clone(), g.alpha.clone(), g.beta.clone(), 1);
        let e = orthogonal_bc_evaluation(&l, &OrthogonalBCParams::Jacobi(jp.clone()))?;
        tally.eq(&prelude::jacobi_one_var(n, &g.alpha, &g.beta)?.scale(&e), &jacobi_polynomial(&l, &jp)?, "Jacobi 2F1", || format!("n={n}"));
        let spec = MomentFunctionalSpec::jacobi_beta(g.alpha.clone(), g.beta.clone(), &Rational::one())?;
        for m in 0..n {
            let v = apply_moment(&spec, &(&prelude::jacobi_one_var(n, &g.alpha, &g.beta)? * &LaurentPoly::var_power(1, 0, m as i32, Rational::one())))?;
            tally.check(v.is_zero(), "Jacobi 2F1 orthogonal to lower powers", || format!("n={n} m={m}"));
        }
    }
    for m in 0..=d {
        for kind in [UltrasphericalKind::QCase { t: g.t.clone(), q: q.clone() }, UltrasphericalKind::OneCase { tau: g.tau.clone() }] {
            let c = twovar::ultraspherical(&kind, m)?;
            tally.eq(&c.invert_vars(), &c, "ultraspherical palindromic", || format!("m={m} {kind:?}"));
        }
    }
    Ok(tally)
}

pub(super) fn limits(b: Bounds) -> Result<Tally> {
    let params = LimitParams::default();
    let cases: Vec<(LimitId, Partition)> = LimitId::ALL
        .into_iter()
        .flat_map(|id| shapes(b).into_iter().map(move |l| (id, l)))
        .collect();
    par_cases(&cases, |(id, lambda)| {
        let mut tally = Tally::default();
        let c = check_limit(*id, lambda, b.n, &params)?;
        tally.check(c.holds(), id.name(), || format!("λ={lambda} n={}: {:?} vs {:?}", b.n, c.lhs, c.rhs));
        Ok(tally)
    })
}

/// Largest row length for the one-row tableau weights.
const ONE_ROW_MAX: usize = 6;

pub(super) fn anchors(b: Bounds) -> Result<Tally> {
    let g = GENERIC();
    let modes = [
        ATypeMode::QCase { q: g.q.clone(), t: g.t.clone() },
        ATypeMode::OneCase { tau: g.tau.clone() },
    ];
    let mut tally = Tally::default();
    for n in 1..=b.n {
        for lambda in enumerate_partitions(b.max_weight, n) {
            let tab = ReverseTableau::canonical(&lambda, n).expect("length within n");
            for mode in &modes {
                let w = tableau_weight(&tab, mode)?;
                tally.check(w.is_one(), "canonical tableau weight", || format!("λ={lambda} n={n} {mode:?}: {w}"));
            }
        }
    }
    let (q, t) = (&g.q, &g.t);
    let mode = ATypeMode::QCase { q: q.clone(), t: t.clone() };
    for m in 0..=ONE_ROW_MAX {
        for k in 0..=m {
            let row: Vec<usize> = std::iter::repeat_n(2, k).chain(std::iter::repeat_n(1, m - k)).collect();
            let tab = ReverseTableau::from_rows(if m == 0 { vec![] } else { vec![row] }, 2).expect("valid tableau");
            let qm = q.powi(-(m as i64)).expect("nonzero");
            let b1 = q.powi(1 - m as i64).expect("nonzero") / t.clone();
            let closed = q_pochhammer(t, q, k) * q_pochhammer(&qm, q, k) / (q_pochhammer(q, q, k) * q_pochhammer(&b1, q, k))
                * (q.clone() / t.clone()).powi(k as i64).expect("nonzero");
            tally.eq(&tableau_weight(&tab, &mode)?, &closed, "one-row tableau weight", || format!("m={m} k={k}"));
        }
    }
    Ok(tally)
}
