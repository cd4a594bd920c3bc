//! Koornwinder and BC-Jacobi polynomials assembled from binomial sums.

use super::{bc_interp_evaluation, bc_interp_polynomial, bc_interp_value, bc_spectral_point, BCInterpParams, EvaluationForm};
use crate::afamilies::{a_type_polynomial, a_type_value, tableau_weight, ATypeFamily, ATypeMode, ATypeParams};
use crate::combinatorics::{enumerate_reverse_tableaux, Partition};
use crate::error::{Error, Result};
use crate::exactalg::{checked_div, checked_pow, q_pochhammer, shifted_factorial, Field, LaurentPoly};

/// `(q, t; a_1..a_4)` together with a chosen square root `a'_1` of `q^{-1} a_1 a_2 a_3 a_4`.
#[derive(Clone, Debug, PartialEq)]
pub struct KoornwinderParams<F> {
    pub q: F,
    pub t: F,
    pub a: [F; 4],
    pub a_dual_1: F,
    pub n: usize,
}

impl<F: Field> KoornwinderParams<F> {
    /// Rejects an `a_dual_1` whose square is not `q^{-1} a_1 a_2 a_3 a_4`.
    pub fn new(q: F, t: F, a: [F; 4], a_dual_1: F, n: usize) -> Result<Self> {
        dual_parameters(&q, &a, &a_dual_1)?;
        Ok(KoornwinderParams { q, t, a, a_dual_1, n })
    }

    /// `a'_i` for `i = 1..4`.
    pub fn dual_a(&self) -> [F; 4] {
        dual_parameters(&self.q, &self.a, &self.a_dual_1).expect("checked at construction")
    }

    /// The parameters `(q, t; a'_1..a'_4)` with square root `a_1`, so dualizing twice is the identity.
    pub fn dual(&self) -> Self {
        KoornwinderParams {
            q: self.q.clone(),
            t: self.t.clone(),
            a: self.dual_a(),
            a_dual_1: self.a[0].clone(),
            n: self.n,
        }
    }

    /// BC-type interpolation parameters `(q, t, c)`.
    pub fn interp(&self, c: &F) -> BCInterpParams<F> {
        BCInterpParams::q_case(self.q.clone(), self.t.clone(), c.clone(), self.n)
    }

    pub fn a_type(&self) -> ATypeParams<F> {
        ATypeParams::q_case(self.q.clone(), self.t.clone(), self.n)
    }
}

/// `a'_1 = a_dual_1` and `a'_i = a_1 a_i / a'_1`.
pub fn dual_parameters<F: Field>(q: &F, a: &[F; 4], a_dual_1: &F) -> Result<[F; 4]> {
    let prod = a[0].clone() * a[1].clone() * a[2].clone() * a[3].clone();
    if a_dual_1.clone() * a_dual_1.clone() * q.clone() != prod {
        return Err(Error::SquareRoot(format!(
            "a'_1 = {a_dual_1} does not square to q^-1 a_1 a_2 a_3 a_4"
        )));
    }
    let inv = a_dual_1
        .inv()
        .ok_or_else(|| Error::SquareRoot("a'_1 = 0".into()))?;
    let f = |i: usize| a[0].clone() * a[i].clone() * inv.clone();
    Ok([a_dual_1.clone(), f(1), f(2), f(3)])
}

/// BC-Jacobi parameters `(τ; α, β)`.
#[derive(Clone, Debug, PartialEq)]
pub struct JacobiParams<F> {
    pub tau: F,
    pub alpha: F,
    pub beta: F,
    pub n: usize,
}

impl<F: Field> JacobiParams<F> {
    pub fn new(tau: F, alpha: F, beta: F, n: usize) -> Self {
        JacobiParams { tau, alpha, beta, n }
    }

    /// `α' = (α + β + 1) / 2`.
    pub fn alpha_dual(&self) -> F {
        (self.alpha.clone() + self.beta.clone() + F::one()) * F::from_int(2).inv().expect("2 ≠ 0")
    }

    pub fn interp(&self) -> BCInterpParams<F> {
        BCInterpParams::one_case(self.tau.clone(), self.alpha_dual(), self.n)
    }

    pub fn a_type(&self) -> ATypeParams<F> {
        ATypeParams::one_case(self.tau.clone(), self.n)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum OrthogonalBCParams<F> {
    Koornwinder(KoornwinderParams<F>),
    Jacobi(JacobiParams<F>),
}

pub fn orthogonal_bc_polynomial<F: Field>(lambda: &Partition, params: &OrthogonalBCParams<F>) -> Result<LaurentPoly<F>> {
    match params {
        OrthogonalBCParams::Koornwinder(p) => koornwinder_polynomial(lambda, p),
        OrthogonalBCParams::Jacobi(p) => jacobi_polynomial(lambda, p),
    }
}

/// `P_λ(t^δ a_1)` for Koornwinder, `P_λ(0)` for BC-Jacobi, as closed products.
pub fn orthogonal_bc_evaluation<F: Field>(lambda: &Partition, params: &OrthogonalBCParams<F>) -> Result<F> {
    match params {
        OrthogonalBCParams::Koornwinder(p) => koornwinder_evaluation(lambda, p),
        OrthogonalBCParams::Jacobi(p) => jacobi_evaluation(lambda, p),
    }
}

fn koornwinder_evaluation<F: Field>(lambda: &Partition, p: &KoornwinderParams<F>) -> Result<F> {
    let (q, t, n) = (&p.q, &p.t, p.n);
    if lambda.length() > n {
        return Err(Error::DegreeBound(format!("{lambda} has more than {n} parts")));
    }
    let tp = |k: usize| checked_pow(t, k as i64, "t");
    let d2 = p.a_dual_1.clone() * p.a_dual_1.clone();
    let a1 = &p.a[0];
    let mut acc = checked_pow(t, -(lambda.dot_delta(n) as i64), "t")? * checked_pow(a1, -(lambda.weight() as i64), "a_1")?;
    for j in 1..=n {
        let lj = lambda.part(j);
        let tj = tp(n - j)?;
        let mut num = q_pochhammer(&(tj.clone() * d2.clone()), q, lj);
        for ai in &p.a[1..] {
            num = num * q_pochhammer(&(tj.clone() * a1.clone() * ai.clone()), q, lj);
        }
        let den = q_pochhammer(&(tp(2 * n - 2 * j)? * d2.clone()), q, 2 * lj);
        acc = checked_div(acc * num, &den, || format!("(t^{} a'_1^2;q)_{}", 2 * n - 2 * j, 2 * lj))?;
    }
    for i in 1..=n {
        for j in i + 1..=n {
            let (sum, diff) = (lambda.part(i) + lambda.part(j), lambda.part(i) - lambda.part(j));
            let num = q_pochhammer(&(tp(2 * n - i - j + 1)? * d2.clone()), q, sum)
                * q_pochhammer(&tp(j - i + 1)?, q, diff);
            let den = q_pochhammer(&(tp(2 * n - i - j)? * d2.clone()), q, sum) * q_pochhammer(&tp(j - i)?, q, diff);
            acc = checked_div(acc * num, &den, || {
                format!("(t^{} a'_1^2;q)_{sum} (t^{};q)_{diff}", 2 * n - i - j, j - i)
            })?;
        }
    }
    Ok(acc)
}

fn jacobi_evaluation<F: Field>(lambda: &Partition, p: &JacobiParams<F>) -> Result<F> {
    let n = p.n;
    if lambda.length() > n {
        return Err(Error::DegreeBound(format!("{lambda} has more than {n} parts")));
    }
    let tk = |k: usize| p.tau.clone() * F::from_int(k as i64);
    let ad = p.alpha_dual();
    let two_ad = ad.clone() + ad;
    let mut acc = if lambda.weight().is_multiple_of(2) { F::one() } else { -F::one() };
    for j in 1..=n {
        let lj = lambda.part(j);
        let num = shifted_factorial(&(tk(n - j) + two_ad.clone()), lj)
            * shifted_factorial(&(tk(n - j) + p.alpha.clone() + F::one()), lj);
        let den = shifted_factorial(&(tk(2 * n - 2 * j) + two_ad.clone()), 2 * lj);
        acc = checked_div(acc * num, &den, || format!("({}τ+2α')_{}", 2 * n - 2 * j, 2 * lj))?;
    }
    for i in 1..=n {
        for j in i + 1..=n {
            let (sum, diff) = (lambda.part(i) + lambda.part(j), lambda.part(i) - lambda.part(j));
            let num = shifted_factorial(&(tk(2 * n - i - j + 1) + two_ad.clone()), sum)
                * shifted_factorial(&tk(j - i + 1), diff);
            let den = shifted_factorial(&(tk(2 * n - i - j) + two_ad.clone()), sum) * shifted_factorial(&tk(j - i), diff);
            acc = checked_div(acc * num, &den, || {
                format!("({}τ+2α')_{sum} ({}τ)_{diff}", 2 * n - i - j, j - i)
            })?;
        }
    }
    Ok(acc)
}

/// Coefficients `c_μ` with `P_λ(x) = Σ_{μ⊆λ} c_μ P^ip_μ(x; q, t, a_1)`.
pub fn koornwinder_binomial_terms<F: Field>(lambda: &Partition, p: &KoornwinderParams<F>) -> Result<Vec<(Partition, F)>> {
    let dual = p.interp(&p.a_dual_1);
    let node = bc_spectral_point(lambda, &dual)?;
    let e_lambda = koornwinder_evaluation(lambda, p)?;
    lambda
        .subpartitions()
        .into_iter()
        .map(|mu| {
            let num = bc_interp_value(&mu, &dual, &node)? * e_lambda.clone();
            let den = bc_interp_evaluation(&mu, &dual, EvaluationForm::Factored)? * koornwinder_evaluation(&mu, p)?;
            let c = checked_div(num, &den, || format!("binomial denominator at μ = {mu}"))?;
            Ok((mu, c))
        })
        .collect()
}

pub fn koornwinder_polynomial<F: Field>(lambda: &Partition, p: &KoornwinderParams<F>) -> Result<LaurentPoly<F>> {
    let basis = p.interp(&p.a[0]);
    let mut acc = LaurentPoly::zero(p.n);
    for (mu, c) in koornwinder_binomial_terms(lambda, p)? {
        if !c.is_zero() {
            acc = acc + bc_interp_polynomial(&mu, &basis)?.scale(&c);
        }
    }
    Ok(acc)
}

/// `P_λ(point)` from the binomial sum, without expanding any polynomial.
pub fn koornwinder_value<F: Field>(lambda: &Partition, p: &KoornwinderParams<F>, point: &[F]) -> Result<F> {
    let basis = p.interp(&p.a[0]);
    let mut acc = F::zero();
    for (mu, c) in koornwinder_binomial_terms(lambda, p)? {
        if !c.is_zero() {
            acc = acc + c * bc_interp_value(&mu, &basis, point)?;
        }
    }
    Ok(acc)
}

/// How the interpolation value in a BC-Jacobi expansion coefficient is computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InterpolationRoute {
    /// Evaluate the level-by-level sum at the spectral point.
    PointEvaluation,
    /// Sum the explicit per-tableau products over all reverse tableaux.
    TableauSum,
}

/// `b_{λ,μ}` in `P_λ(x; τ; α, β) = Σ_{μ⊆λ} b_{λ,μ} P_μ(x; τ)`.
pub fn jacobi_expansion_coefficient<F: Field>(
    lambda: &Partition,
    mu: &Partition,
    p: &JacobiParams<F>,
    route: InterpolationRoute,
) -> Result<F> {
    let interp = p.interp();
    let num = match route {
        InterpolationRoute::PointEvaluation => bc_interp_value(mu, &interp, &bc_spectral_point(lambda, &interp)?)?,
        InterpolationRoute::TableauSum => explicit_tableau_value(lambda, mu, p)?,
    };
    let num = num * jacobi_evaluation(lambda, p)?;
    let den = bc_interp_evaluation(mu, &interp, EvaluationForm::BoxProduct)? * jacobi_evaluation(mu, p)?;
    checked_div(num, &den, || format!("binomial denominator at μ = {mu}"))
}

/// `Σ_T ψ_T(τ) ∏_{s∈μ} ((λ_k + τδ_k + α')^2 - (τδ_k + α' + a'(s) - τ l'(s))^2)` with `k = T(s)`.
fn explicit_tableau_value<F: Field>(lambda: &Partition, mu: &Partition, p: &JacobiParams<F>) -> Result<F> {
    let n = p.n;
    let mode = ATypeMode::OneCase { tau: p.tau.clone() };
    let ad = p.alpha_dual();
    let mut total = F::zero();
    for tab in enumerate_reverse_tableaux(mu, n) {
        let mut term = tableau_weight(&tab, &mode)?;
        for s in mu.cells() {
            let k = tab.entry(s);
            let shift = p.tau.clone() * F::from_int((n - k) as i64) + ad.clone();
            let x = F::from_int(lambda.part(k) as i64) + shift.clone();
            let c = shift + F::from_int(s.col as i64 - 1) - p.tau.clone() * F::from_int(s.row as i64 - 1);
            term = term * (x.clone() * x - c.clone() * c);
        }
        total = total + term;
    }
    Ok(total)
}

/// Pairs `(μ, b_{λ,μ})` for all `μ ⊆ λ`.
pub fn jacobi_binomial_terms<F: Field>(lambda: &Partition, p: &JacobiParams<F>) -> Result<Vec<(Partition, F)>> {
    lambda
        .subpartitions()
        .into_iter()
        .map(|mu| {
            let b = jacobi_expansion_coefficient(lambda, &mu, p, InterpolationRoute::PointEvaluation)?;
            Ok((mu, b))
        })
        .collect()
}

pub fn jacobi_polynomial<F: Field>(lambda: &Partition, p: &JacobiParams<F>) -> Result<LaurentPoly<F>> {
    let basis = p.a_type();
    let mut acc = LaurentPoly::zero(p.n);
    for (mu, b) in jacobi_binomial_terms(lambda, p)? {
        if !b.is_zero() {
            acc = acc + a_type_polynomial(ATypeFamily::Jack, &mu, &basis)?.scale(&b);
        }
    }
    Ok(acc)
}

pub fn jacobi_value<F: Field>(lambda: &Partition, p: &JacobiParams<F>, point: &[F]) -> Result<F> {
    let basis = p.a_type();
    let mut acc = F::zero();
    for (mu, b) in jacobi_binomial_terms(lambda, p)? {
        if !b.is_zero() {
            acc = acc + b * a_type_value(ATypeFamily::Jack, &mu, &basis, point)?;
        }
    }
    Ok(acc)
}
