//! Closed forms in two variables for `λ = (m_1, m_2)`, the (q-)ultraspherical
//! polynomials, and the one-variable objects.
//!
//! Everything here is written out from hypergeometric expressions and never calls
//! the tableau machinery, so it serves as an independent oracle for it.
//!
//! Quotients of Pochhammer symbols with `x` in both numerator and denominator
//! are cancelled before expansion, e.g. `(c x;q)_m / (c x;q)_k = (c q^k x;q)_{m-k}`.

pub mod prelude;

use crate::bcfamilies::{JacobiParams, KoornwinderParams};
use crate::error::{Error, Result};
use crate::exactalg::qseries::{laurent_q_pochhammer, laurent_shifted_factorial};
use crate::exactalg::{
    checked_div, checked_pow, factorial, hypergeometric_terminating, q_pochhammer, shifted_factorial, Exponent, Field,
    HyperKind, LaurentPoly,
};

/// How a two-variable Macdonald or Jack polynomial is written out.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SeriesForm {
    /// `x_1^{m_1} x_2^{m_2}` times a `2φ1` (resp. `2F1`) in `x_2 / x_1`.
    Hypergeometric,
    /// The explicit binomial-type sum over `x_1^{m_1-j} x_2^{m_2+j}`.
    ExplicitSum,
    /// `(x_1 x_2)^{(m_1+m_2)/2}` times an ultraspherical polynomial.
    Ultraspherical,
}

/// A two-variable closed form together with its parameters.
#[derive(Clone, Debug, PartialEq)]
pub enum TwoVarFormula<F> {
    /// BC interpolation Macdonald for `(m, 0)` as a single `4φ3`.
    BcInterpMacdonaldOneRow { q: F, t: F, a: F },
    /// BC interpolation Macdonald for `(m_1, m_2)` after stripping `m_2` columns.
    BcInterpMacdonald { q: F, t: F, a: F },
    /// Interpolation Macdonald as the `3φ2` obtained by series inversion.
    InterpMacdonald { q: F, t: F },
    Macdonald { q: F, t: F, form: SeriesForm },
    InterpJack { tau: F },
    BcInterpJack { tau: F, alpha: F },
    Jack { tau: F, form: SeriesForm },
    /// Koornwinder from the double binomial sum.
    Koornwinder(KoornwinderParams<F>),
    /// BC-Jacobi from the double binomial sum.
    Jacobi(JacobiParams<F>),
}

/// Expand the closed form for `λ = (m_1, m_2)` into a Laurent polynomial in `x_1, x_2`.
pub fn two_var_formula<F: Field>(formula: &TwoVarFormula<F>, m1: usize, m2: usize) -> Result<LaurentPoly<F>> {
    if m1 < m2 {
        return Err(Error::Incompatible(format!("need m_1 ≥ m_2, got ({m1},{m2})")));
    }
    match formula {
        TwoVarFormula::BcInterpMacdonaldOneRow { q, t, a } => {
            if m2 != 0 {
                return Err(Error::Incompatible("the one-row form needs m_2 = 0".into()));
            }
            bc_interp_macdonald_one_row(m1, q, t, a)
        }
        TwoVarFormula::BcInterpMacdonald { q, t, a } => bc_interp_macdonald(m1, m2, q, t, a),
        TwoVarFormula::InterpMacdonald { q, t } => interp_macdonald(m1, m2, q, t),
        TwoVarFormula::Macdonald { q, t, form } => macdonald(m1, m2, q, t, *form),
        TwoVarFormula::InterpJack { tau } => interp_jack(m1, m2, tau),
        TwoVarFormula::BcInterpJack { tau, alpha } => bc_interp_jack(m1, m2, tau, alpha),
        TwoVarFormula::Jack { tau, form } => jack(m1, m2, tau, *form),
        TwoVarFormula::Koornwinder(p) => koornwinder(m1, m2, p),
        TwoVarFormula::Jacobi(p) => jacobi(m1, m2, p),
    }
}

fn mono<F: Field>(e1: i32, e2: i32, c: F) -> LaurentPoly<F> {
    LaurentPoly::monomial(Exponent(vec![e1, e2]), c)
}

/// `(c x_i;q)_k (c x_i^{-1};q)_k`.
fn pair<F: Field>(var: usize, c: &F, q: &F, k: usize) -> LaurentPoly<F> {
    &laurent_q_pochhammer(2, var, false, c, q, k) * &laurent_q_pochhammer(2, var, true, c, q, k)
}

/// `(c + x_i)_k (c - x_i)_k`.
fn shifted_pair<F: Field>(var: usize, c: &F, k: usize) -> LaurentPoly<F> {
    &laurent_shifted_factorial(2, var, false, c, k) * &laurent_shifted_factorial(2, var, true, c, k)
}

fn pow<F: Field>(x: &F, e: i64, what: &str) -> Result<F> {
    checked_pow(x, e, what)
}

fn sign<F: Field>(k: usize) -> F {
    if k.is_multiple_of(2) {
        F::one()
    } else {
        -F::one()
    }
}

/// `(q^{-d}, t;q)_k q^k / (q^{1-d} t^{-1}, q;q)_k`, the coefficient shared by the q-series.
fn q_series_coefficient<F: Field>(d: usize, k: usize, q: &F, t: &F) -> Result<F> {
    let qd = pow(q, -(d as i64), "q")?;
    let num = q_pochhammer(&qd, q, k) * q_pochhammer(t, q, k) * pow(q, k as i64, "q")?;
    let den = q_pochhammer(&(qd * q.clone() * pow(t, -1, "t")?), q, k) * q_pochhammer(q, q, k);
    checked_div(num, &den, || format!("(q^{{1-{d}}} t^-1, q;q)_{k}"))
}

/// `(-d, τ)_k / (1-d-τ, 1)_k`, the coefficient shared by the ordinary series.
fn series_coefficient<F: Field>(d: usize, k: usize, tau: &F) -> Result<F> {
    let md = F::from_int(-(d as i64));
    let num = shifted_factorial(&md, k) * shifted_factorial(tau, k);
    let den = shifted_factorial(&(md + F::one() - tau.clone()), k) * factorial::<F>(k);
    checked_div(num, &den, || format!("(1-{d}-τ)_{k}"))
}

fn bc_interp_macdonald_one_row<F: Field>(m: usize, q: &F, t: &F, a: &F) -> Result<LaurentPoly<F>> {
    let ta = t.clone() * a.clone();
    let lead = pow(q, (m * (m.saturating_sub(1)) / 2) as i64, "q")? * pow(&-ta.clone(), m as i64, "a")?;
    let mut acc = LaurentPoly::zero(2);
    for k in 0..=m {
        let c = q_series_coefficient(m, k, q, t)?;
        let cq = ta.clone() * pow(q, k as i64, "q")?;
        let term = &pair(1, a, q, k) * &pair(0, &cq, q, m - k);
        acc = acc + term.scale(&c);
    }
    let inv = checked_div(F::one(), &lead, || "t a = 0".into())?;
    Ok(acc.scale(&inv))
}

fn bc_interp_macdonald_prefactor<F: Field>(m1: usize, m2: usize, q: &F, t: &F, a: &F) -> Result<(F, LaurentPoly<F>)> {
    let d = m1 - m2;
    let e = (m1 * m1.saturating_sub(1) / 2 + m2 * m2.saturating_sub(1) / 2) as i64;
    let den = pow(q, e, "q")? * pow(&-t.clone(), d as i64, "t")? * pow(a, (m1 + m2) as i64, "a")?;
    let c = checked_div(F::one(), &den, || "t a = 0".into())?;
    Ok((c, &pair(0, a, q, m2) * &pair(1, a, q, m2)))
}

fn bc_interp_macdonald<F: Field>(m1: usize, m2: usize, q: &F, t: &F, a: &F) -> Result<LaurentPoly<F>> {
    let d = m1 - m2;
    let (c0, front) = bc_interp_macdonald_prefactor(m1, m2, q, t, a)?;
    let qa = pow(q, m2 as i64, "q")? * a.clone();
    let mut sum = LaurentPoly::zero(2);
    for k in 0..=d {
        let c = q_series_coefficient(d, k, q, t)?;
        let cq = qa.clone() * t.clone() * pow(q, k as i64, "q")?;
        sum = sum + (&pair(1, &qa, q, k) * &pair(0, &cq, q, d - k)).scale(&c);
    }
    Ok((&front * &sum).scale(&c0))
}

/// The symmetric double-sum rewriting of [`TwoVarFormula::BcInterpMacdonald`].
pub fn bc_interp_macdonald_double_sum<F: Field>(m1: usize, m2: usize, q: &F, t: &F, a: &F) -> Result<LaurentPoly<F>> {
    let d = m1 - m2;
    let (c0, front) = bc_interp_macdonald_prefactor(m1, m2, q, t, a)?;
    let qa = pow(q, m2 as i64, "q")? * a.clone();
    let w = pow(q, 2 * m2 as i64, "q")? * t.clone() * a.clone() * a.clone();
    let c0 = c0 * q_pochhammer(t, q, d) * q_pochhammer(&w, q, d);
    let b = pow(q, 1 - d as i64, "q")? * pow(t, -1, "t")?;
    let side = |k: usize| -> Result<F> {
        checked_div(F::one(), &(q_pochhammer(&b, q, k) * q_pochhammer(q, q, k)), || {
            format!("(q^{{1-{d}}} t^-1, q;q)_{k}")
        })
    };
    let qd = pow(q, -(d as i64), "q")?;
    let mut sum = LaurentPoly::zero(2);
    for j in 0..=d {
        for k in 0..=d - j {
            let num = q_pochhammer(&qd, q, j + k) * pow(q, (j + k) as i64, "q")?;
            let c = checked_div(num, &q_pochhammer(&w, q, j + k), || format!("(q^{{2m_2}} t a^2;q)_{}", j + k))?
                * side(j)?
                * side(k)?;
            sum = sum + (&pair(0, &qa, q, j) * &pair(1, &qa, q, k)).scale(&c);
        }
    }
    Ok((&front * &sum).scale(&c0))
}

/// `x^k (x^{-1};q)_k = ∏_{i<k} (x - q^i)` in variable `var`.
fn falling_q<F: Field>(var: usize, q: &F, k: usize) -> LaurentPoly<F> {
    let mut acc = LaurentPoly::one(2);
    let mut qi = F::one();
    for _ in 0..k {
        acc = &acc * &(LaurentPoly::var(2, var) - LaurentPoly::constant(2, qi.clone()));
        qi = qi * q.clone();
    }
    acc
}

fn interp_macdonald<F: Field>(m1: usize, m2: usize, q: &F, t: &F) -> Result<LaurentPoly<F>> {
    let d = m1 - m2;
    let front = falling_q(0, q, m2);
    let c1 = pow(q, 1 - m1 as i64, "q")? * pow(t, -1, "t")?;
    let mut sum = LaurentPoly::zero(2);
    for k in 0..=d {
        // x_2^{m_1} (x_2^{-1};q)_{m_1} / (q^{1-m_1} x_2;q)_k
        let mut unit = F::one();
        for i in 0..k {
            unit = unit * -pow(q, 1 - m1 as i64 + i as i64, "q")?;
        }
        let c = checked_div(q_series_coefficient(d, k, q, t)?, &unit, || "q = 0".into())?;
        let term = &falling_q(1, q, m1 - k) * &laurent_q_pochhammer(2, 0, false, &c1, q, k);
        sum = sum + term.scale(&c);
    }
    Ok(&front * &sum)
}

/// The `3φ2` in `q x_2 / (t x_1)` that precedes series inversion.
pub fn interp_macdonald_before_inversion<F: Field>(m1: usize, m2: usize, q: &F, t: &F) -> Result<LaurentPoly<F>> {
    let d = m1 - m2;
    let front = &falling_q(0, q, m2) * &falling_q(1, q, m2);
    let qm2 = pow(q, m2 as i64, "q")?;
    let ratio = q.clone() * pow(t, -1, "t")?;
    let mut sum = LaurentPoly::zero(2);
    for k in 0..=d {
        let qk = pow(q, k as i64, "q")?;
        // the shared coefficient carries q^k, the argument another (q/t)^k
        let c = q_series_coefficient(d, k, q, t)? * checked_div(pow(&ratio, k as i64, "q/t")?, &qk, || "q = 0".into())?;
        let term = &laurent_q_pochhammer(2, 1, true, &qm2, q, k)
            * &laurent_q_pochhammer(2, 0, true, &(qm2.clone() * t.clone() * qk), q, d - k);
        sum = sum + term.mul_monomial(&Exponent(vec![-(k as i32), k as i32]), &c);
    }
    let shift = Exponent(vec![(m1 - m2) as i32, 0]);
    Ok((&front * &sum).mul_monomial(&shift, &F::one()))
}

fn macdonald<F: Field>(m1: usize, m2: usize, q: &F, t: &F, form: SeriesForm) -> Result<LaurentPoly<F>> {
    let d = m1 - m2;
    let norm = || checked_div(q_pochhammer(q, q, d), &q_pochhammer(t, q, d), || format!("(t;q)_{d}"));
    match form {
        SeriesForm::Hypergeometric => {
            let ratio = q.clone() * pow(t, -1, "t")?;
            let mut acc = LaurentPoly::zero(2);
            for k in 0..=d {
                let c = q_series_coefficient(d, k, q, t)?
                    * checked_div(pow(&ratio, k as i64, "q/t")?, &pow(q, k as i64, "q")?, || "q = 0".into())?;
                acc = acc + mono((m1 - k) as i32, (m2 + k) as i32, c);
            }
            Ok(acc)
        }
        SeriesForm::ExplicitSum => {
            let n = norm()?;
            let mut acc = LaurentPoly::zero(2);
            for j in 0..=d {
                let c = checked_div(
                    q_pochhammer(t, q, j) * q_pochhammer(t, q, d - j),
                    &(q_pochhammer(q, q, j) * q_pochhammer(q, q, d - j)),
                    || "(q;q) = 0".into(),
                )?;
                acc = acc + mono((m1 - j) as i32, (m2 + j) as i32, c * n.clone());
            }
            Ok(acc)
        }
        SeriesForm::Ultraspherical => {
            let c = ultraspherical(&UltrasphericalKind::QCase { t: t.clone(), q: q.clone() }, d)?;
            Ok(ultraspherical_to_two_vars(&c, m1 + m2)?.scale(&norm()?))
        }
    }
}

fn interp_jack<F: Field>(m1: usize, m2: usize, tau: &F) -> Result<LaurentPoly<F>> {
    let d = m1 - m2;
    let zero = F::zero();
    let front = laurent_shifted_factorial(2, 0, true, &zero, m2).scale(&sign(m1 + m2));
    let c1 = F::from_int(1 - m1 as i64) - tau.clone();
    let mut sum = LaurentPoly::zero(2);
    for k in 0..=d {
        // (-x_2)_{m_1} / (1 - m_1 + x_2)_k = (-1)^k (-x_2)_{m_1-k}
        let c = series_coefficient(d, k, tau)? * sign::<F>(k);
        let term = &laurent_shifted_factorial(2, 1, true, &zero, m1 - k) * &laurent_shifted_factorial(2, 0, false, &c1, k);
        sum = sum + term.scale(&c);
    }
    Ok(&front * &sum)
}

fn bc_interp_jack<F: Field>(m1: usize, m2: usize, tau: &F, alpha: &F) -> Result<LaurentPoly<F>> {
    let d = m1 - m2;
    let front = (&shifted_pair(0, alpha, m2) * &shifted_pair(1, alpha, m2)).scale(&sign(m1 + m2));
    let base = F::from_int(m2 as i64) + alpha.clone();
    let mut sum = LaurentPoly::zero(2);
    for k in 0..=d {
        let c = series_coefficient(d, k, tau)?;
        let shifted = base.clone() + tau.clone() + F::from_int(k as i64);
        sum = sum + (&shifted_pair(1, &base, k) * &shifted_pair(0, &shifted, d - k)).scale(&c);
    }
    Ok(&front * &sum)
}

fn jack<F: Field>(m1: usize, m2: usize, tau: &F, form: SeriesForm) -> Result<LaurentPoly<F>> {
    let d = m1 - m2;
    let norm = || checked_div(factorial::<F>(d), &shifted_factorial(tau, d), || format!("(τ)_{d}"));
    match form {
        SeriesForm::Hypergeometric => {
            let mut acc = LaurentPoly::zero(2);
            for k in 0..=d {
                acc = acc + mono((m1 - k) as i32, (m2 + k) as i32, series_coefficient(d, k, tau)?);
            }
            Ok(acc)
        }
        SeriesForm::ExplicitSum => {
            let n = norm()?;
            let mut acc = LaurentPoly::zero(2);
            for j in 0..=d {
                let c = shifted_factorial(tau, j) * shifted_factorial(tau, d - j)
                    * (factorial::<F>(j) * factorial::<F>(d - j)).inv().expect("factorials are nonzero");
                acc = acc + mono((m1 - j) as i32, (m2 + j) as i32, c * n.clone());
            }
            Ok(acc)
        }
        SeriesForm::Ultraspherical => {
            let c = ultraspherical(&UltrasphericalKind::OneCase { tau: tau.clone() }, d)?;
            Ok(ultraspherical_to_two_vars(&c, m1 + m2)?.scale(&norm()?))
        }
    }
}

/// Parameters of the (q-)ultraspherical polynomial.
#[derive(Clone, Debug, PartialEq)]
pub enum UltrasphericalKind<F> {
    QCase { t: F, q: F },
    OneCase { tau: F },
}

/// `C_m` as a Laurent polynomial in `z = e^{iθ}`, invariant under `z → z^{-1}`.
pub fn ultraspherical<F: Field>(kind: &UltrasphericalKind<F>, m: usize) -> Result<LaurentPoly<F>> {
    let mut acc = LaurentPoly::zero(1);
    for j in 0..=m {
        let c = match kind {
            UltrasphericalKind::QCase { t, q } => checked_div(
                q_pochhammer(t, q, j) * q_pochhammer(t, q, m - j),
                &(q_pochhammer(q, q, j) * q_pochhammer(q, q, m - j)),
                || "(q;q) = 0".into(),
            )?,
            UltrasphericalKind::OneCase { tau } => {
                shifted_factorial(tau, j) * shifted_factorial(tau, m - j)
                    * (factorial::<F>(j) * factorial::<F>(m - j)).inv().expect("factorials are nonzero")
            }
        };
        acc = acc + LaurentPoly::var_power(1, 0, m as i32 - 2 * j as i32, c);
    }
    Ok(acc)
}

/// `(x_1 x_2)^{total/2} C(z)` with `z = (x_1/x_2)^{1/2}`: `z^e ↦ x_1^{(total+e)/2} x_2^{(total-e)/2}`.
pub fn ultraspherical_to_two_vars<F: Field>(c: &LaurentPoly<F>, total: usize) -> Result<LaurentPoly<F>> {
    let total = total as i32;
    let mut out = Vec::new();
    for (e, coef) in c.terms() {
        let e = e.as_slice()[0];
        if (total + e) % 2 != 0 {
            return Err(Error::Incompatible(format!("z^{e} has the wrong parity for total degree {total}")));
        }
        out.push((Exponent(vec![(total + e) / 2, (total - e) / 2]), coef.clone()));
    }
    Ok(LaurentPoly::from_terms(2, out))
}

/// `P_{k_1,k_2}(t a_1, a_1)` for Koornwinder in two variables.
pub fn koornwinder_two_var_evaluation<F: Field>(k1: usize, k2: usize, p: &KoornwinderParams<F>) -> Result<F> {
    let (q, t) = (&p.q, &p.t);
    let a1 = &p.a[0];
    let d2 = p.a_dual_1.clone() * p.a_dual_1.clone();
    let td2 = t.clone() * d2.clone();
    let t2d2 = t.clone() * td2.clone();
    let mut num = pow(t, -(k1 as i64), "t")?
        * pow(a1, -((k1 + k2) as i64), "a_1")?
        * q_pochhammer(&td2, q, k1)
        * q_pochhammer(&d2, q, k2)
        * q_pochhammer(&t2d2, q, k1 + k2)
        * q_pochhammer(&(t.clone() * t.clone()), q, k1 - k2);
    for ai in &p.a[1..] {
        let aa = a1.clone() * ai.clone();
        num = num * q_pochhammer(&(t.clone() * aa.clone()), q, k1) * q_pochhammer(&aa, q, k2);
    }
    let den = q_pochhammer(&t2d2, q, 2 * k1)
        * q_pochhammer(&d2, q, 2 * k2)
        * q_pochhammer(&td2, q, k1 + k2)
        * q_pochhammer(t, q, k1 - k2);
    checked_div(num, &den, || format!("Koornwinder evaluation denominator at ({k1},{k2})"))
}

/// The ratio of BC interpolation values at the nodes of `(m_1, m_2)` and `(k_1, k_2)`, parameter `a'_1`.
pub fn koornwinder_two_var_quotient<F: Field>(
    (m1, m2): (usize, usize),
    (k1, k2): (usize, usize),
    p: &KoornwinderParams<F>,
) -> Result<F> {
    let (q, t) = (&p.q, &p.t);
    let d2 = p.a_dual_1.clone() * p.a_dual_1.clone();
    let qp = |e: i64| pow(q, e, "q");
    let (m1i, m2i, k1i, k2i) = (m1 as i64, m2 as i64, k1 as i64, k2 as i64);
    let tinv = pow(t, -1, "t")?;
    let t2d2 = t.clone() * t.clone() * d2.clone();
    let top = |m: i64, mm: i64| -> Result<Vec<F>> {
        Ok(vec![
            qp(m)? * t.clone() * d2.clone(),
            qp(-m)? * tinv.clone(),
            qp(mm)? * d2.clone(),
            qp(-mm)?,
        ])
    };
    let num_a: F = top(m1i, m2i)?.iter().map(|c| q_pochhammer(c, q, k2)).fold(F::one(), |x, y| x * y);
    let den_a: F = top(k1i, k2i)?.iter().map(|c| q_pochhammer(c, q, k2)).fold(F::one(), |x, y| x * y);
    let d = k1 - k2;
    let num_b = q_pochhammer(&(qp(m1i + k2i)? * t2d2.clone()), q, d) * q_pochhammer(&qp(k2i - m1i)?, q, d);
    let den_b = q_pochhammer(&(qp(k1i + k2i)? * t2d2.clone()), q, d) * q_pochhammer(&qp(k2i - k1i)?, q, d);
    let series = hypergeometric_terminating(
        &HyperKind::Basic { base: q.clone() },
        &[t.clone(), qp(m2i + k2i)? * d2.clone(), qp(k2i - m2i)?],
        &[qp(1 - k1i + k2i)? * tinv, qp(m1i + k2i)? * t2d2, qp(k2i - m1i)?],
        q,
        d,
    )?;
    checked_div(num_a * num_b * series, &(den_a * den_b), || {
        format!("interpolation quotient denominator at ({k1},{k2})")
    })
}

fn koornwinder<F: Field>(m1: usize, m2: usize, p: &KoornwinderParams<F>) -> Result<LaurentPoly<F>> {
    let e_m = koornwinder_two_var_evaluation(m1, m2, p)?;
    let mut acc = LaurentPoly::zero(2);
    for k2 in 0..=m2 {
        for k1 in k2..=m1 {
            let c = koornwinder_two_var_quotient((m1, m2), (k1, k2), p)?;
            if c.is_zero() {
                continue;
            }
            let c = checked_div(c * e_m.clone(), &koornwinder_two_var_evaluation(k1, k2, p)?, || {
                format!("Koornwinder evaluation at ({k1},{k2})")
            })?;
            acc = acc + bc_interp_macdonald(k1, k2, &p.q, &p.t, &p.a[0])?.scale(&c);
        }
    }
    Ok(acc)
}

/// `P_{k_1,k_2}(0, 0)` for BC-Jacobi in two variables.
pub fn jacobi_two_var_evaluation<F: Field>(k1: usize, k2: usize, p: &JacobiParams<F>) -> Result<F> {
    let tau = &p.tau;
    let ad2 = p.alpha_dual() * F::from_int(2);
    let a1 = p.alpha.clone() + F::one();
    let num = sign::<F>(k1 + k2)
        * shifted_factorial(&(tau.clone() + ad2.clone()), k1)
        * shifted_factorial(&(tau.clone() + a1.clone()), k1)
        * shifted_factorial(&ad2, k2)
        * shifted_factorial(&a1, k2)
        * shifted_factorial(&(tau.clone() * F::from_int(2) + ad2.clone()), k1 + k2)
        * shifted_factorial(&(tau.clone() * F::from_int(2)), k1 - k2);
    let den = shifted_factorial(&(tau.clone() * F::from_int(2) + ad2.clone()), 2 * k1)
        * shifted_factorial(&ad2, 2 * k2)
        * shifted_factorial(&(tau.clone() + ad2), k1 + k2)
        * shifted_factorial(tau, k1 - k2);
    checked_div(num, &den, || format!("BC-Jacobi evaluation denominator at ({k1},{k2})"))
}

/// The ratio of BC interpolation Jack values at the nodes of `(m_1, m_2)` and `(k_1, k_2)`, parameter `α'`.
pub fn jacobi_two_var_quotient<F: Field>((m1, m2): (usize, usize), (k1, k2): (usize, usize), p: &JacobiParams<F>) -> Result<F> {
    let tau = &p.tau;
    let ad2 = p.alpha_dual() * F::from_int(2);
    let i = |v: i64| F::from_int(v);
    let (m1i, m2i, k1i, k2i) = (m1 as i64, m2 as i64, k1 as i64, k2 as i64);
    let top = |m: i64, mm: i64| {
        vec![
            i(m) + tau.clone() + ad2.clone(),
            i(-m) - tau.clone(),
            i(mm) + ad2.clone(),
            i(-mm),
        ]
    };
    let prod = |v: Vec<F>, k: usize| v.iter().fold(F::one(), |acc, c| acc * shifted_factorial(c, k));
    let d = k1 - k2;
    let two_tau = tau.clone() * i(2);
    let num_b = shifted_factorial(&(i(m1i + k2i) + two_tau.clone() + ad2.clone()), d) * shifted_factorial(&i(k2i - m1i), d);
    let den_b = shifted_factorial(&(i(k1i + k2i) + two_tau.clone() + ad2.clone()), d) * shifted_factorial(&i(k2i - k1i), d);
    let series = hypergeometric_terminating(
        &HyperKind::Ordinary,
        &[tau.clone(), i(m2i + k2i) + ad2.clone(), i(k2i - m2i)],
        &[i(1 - k1i + k2i) - tau.clone(), i(m1i + k2i) + two_tau + ad2.clone(), i(k2i - m1i)],
        &F::one(),
        d,
    )?;
    checked_div(prod(top(m1i, m2i), k2) * num_b * series, &(prod(top(k1i, k2i), k2) * den_b), || {
        format!("interpolation quotient denominator at ({k1},{k2})")
    })
}

fn jacobi<F: Field>(m1: usize, m2: usize, p: &JacobiParams<F>) -> Result<LaurentPoly<F>> {
    let e_m = jacobi_two_var_evaluation(m1, m2, p)?;
    let mut acc = LaurentPoly::zero(2);
    for k2 in 0..=m2 {
        for k1 in k2..=m1 {
            let c = jacobi_two_var_quotient((m1, m2), (k1, k2), p)?;
            if c.is_zero() {
                continue;
            }
            let c = checked_div(c * e_m.clone(), &jacobi_two_var_evaluation(k1, k2, p)?, || {
                format!("BC-Jacobi evaluation at ({k1},{k2})")
            })?;
            acc = acc + jack(k1, k2, &p.tau, SeriesForm::Ultraspherical)?.scale(&c);
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests;
