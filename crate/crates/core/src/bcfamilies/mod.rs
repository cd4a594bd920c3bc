//! BC-type families.
//!
//! The interpolation polynomials come from tableau sums. The orthogonal
//! families (Koornwinder, BC-Jacobi) are assembled from finite binomial
//! sums over `μ ⊆ λ` whose coefficients are interpolation values at
//! spectral points, so no orthogonality weight ever has to be integrated.

mod orthogonal;

pub use orthogonal::{
    dual_parameters, jacobi_binomial_terms, jacobi_expansion_coefficient, jacobi_polynomial, jacobi_value,
    koornwinder_binomial_terms, koornwinder_polynomial, koornwinder_value, orthogonal_bc_evaluation,
    orthogonal_bc_polynomial, InterpolationRoute, JacobiParams, KoornwinderParams, OrthogonalBCParams,
};

use crate::afamilies::cells::{tableau_polynomial, tableau_value, CellRule};
use crate::afamilies::psi::Powers;
use crate::afamilies::ATypeMode;
use crate::combinatorics::Partition;
use crate::error::{Error, Result};
use crate::exactalg::{
    checked_div, checked_pow, q_pochhammer, qseries::laurent_q_pochhammer, qseries::laurent_shifted_factorial,
    shifted_factorial, Field, LaurentPoly,
};

#[derive(Clone, Debug, PartialEq)]
pub enum BCInterpMode<F> {
    /// Laurent polynomials in `x`, invariant under `x_i → x_i^{-1}`.
    QCase { q: F, t: F, a: F },
    /// Polynomials in `x`, invariant under `x_i → -x_i`.
    OneCase { tau: F, alpha: F },
}

#[derive(Clone, Debug, PartialEq)]
pub struct BCInterpParams<F> {
    pub mode: BCInterpMode<F>,
    pub n: usize,
}

impl<F: Field> BCInterpParams<F> {
    pub fn q_case(q: F, t: F, a: F, n: usize) -> Self {
        BCInterpParams {
            mode: BCInterpMode::QCase { q, t, a },
            n,
        }
    }

    pub fn one_case(tau: F, alpha: F, n: usize) -> Self {
        BCInterpParams {
            mode: BCInterpMode::OneCase { tau, alpha },
            n,
        }
    }

    /// The A-type regime sharing the tableau weights.
    pub fn a_type_mode(&self) -> ATypeMode<F> {
        match &self.mode {
            BCInterpMode::QCase { q, t, .. } => ATypeMode::QCase {
                q: q.clone(),
                t: t.clone(),
            },
            BCInterpMode::OneCase { tau, .. } => ATypeMode::OneCase { tau: tau.clone() },
        }
    }

    /// Same regime with `a` (resp. `α`) replaced.
    pub fn with_shift(&self, shift: F) -> Self {
        let mode = match &self.mode {
            BCInterpMode::QCase { q, t, .. } => BCInterpMode::QCase {
                q: q.clone(),
                t: t.clone(),
                a: shift,
            },
            BCInterpMode::OneCase { tau, .. } => BCInterpMode::OneCase {
                tau: tau.clone(),
                alpha: shift,
            },
        };
        BCInterpParams { mode, n: self.n }
    }

    fn rule(&self) -> Result<CellRule<F>> {
        Ok(match &self.mode {
            BCInterpMode::QCase { q, t, a } => {
                if a.is_zero() {
                    return Err(Error::nongeneric("a = 0"));
                }
                CellRule::BcQ {
                    powers: Powers::new(q.clone(), t.clone()),
                    a: a.clone(),
                }
            }
            BCInterpMode::OneCase { tau, alpha } => CellRule::BcJack {
                tau: tau.clone(),
                alpha: alpha.clone(),
            },
        })
    }
}

/// The BC-type interpolation polynomial indexed by `λ`.
pub fn bc_interp_polynomial<F: Field>(lambda: &Partition, params: &BCInterpParams<F>) -> Result<LaurentPoly<F>> {
    tableau_polynomial(lambda, params.n, &params.a_type_mode(), params.rule()?)
}

/// The BC-type interpolation polynomial evaluated at `point`, without expanding it.
pub fn bc_interp_value<F: Field>(lambda: &Partition, params: &BCInterpParams<F>, point: &[F]) -> Result<F> {
    tableau_value(lambda, params.n, &params.a_type_mode(), params.rule()?, point)
}

/// `q^μ t^δ a` in the q case, `μ + τδ + α` in the one case.
pub fn bc_spectral_point<F: Field>(mu: &Partition, params: &BCInterpParams<F>) -> Result<Vec<F>> {
    let n = params.n;
    (1..=n)
        .map(|i| {
            let (m, d) = (mu.part(i) as i64, (n - i) as i64);
            match &params.mode {
                BCInterpMode::QCase { q, t, a } => {
                    Ok(checked_pow(q, m, "q")? * checked_pow(t, d, "t")? * a.clone())
                }
                BCInterpMode::OneCase { tau, alpha } => {
                    Ok(F::from_int(m) + tau.clone() * F::from_int(d) + alpha.clone())
                }
            }
        })
        .collect()
}

/// Two equivalent closed forms for the value at the node of `λ` itself.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EvaluationForm {
    /// One factor pair per box of `λ`.
    BoxProduct,
    /// Pochhammer products over rows and pairs of rows.
    Factored,
}

/// Closed-form value of `P^ip_λ` at its own spectral point.
pub fn bc_interp_evaluation<F: Field>(lambda: &Partition, params: &BCInterpParams<F>, form: EvaluationForm) -> Result<F> {
    if lambda.length() > params.n {
        return Err(Error::DegreeBound(format!("{lambda} has more than {} parts", params.n)));
    }
    match (&params.mode, form) {
        (BCInterpMode::QCase { q, t, a }, EvaluationForm::BoxProduct) => q_box_product(lambda, params.n, q, t, a),
        (BCInterpMode::QCase { q, t, a }, EvaluationForm::Factored) => q_factored(lambda, params.n, q, t, a),
        (BCInterpMode::OneCase { tau, alpha }, EvaluationForm::BoxProduct) => {
            Ok(one_box_product(lambda, params.n, tau, alpha))
        }
        (BCInterpMode::OneCase { tau, alpha }, EvaluationForm::Factored) => one_factored(lambda, params.n, tau, alpha),
    }
}

fn q_box_product<F: Field>(lambda: &Partition, n: usize, q: &F, t: &F, a: &F) -> Result<F> {
    let n = n as i64;
    let conj = lambda.conjugate();
    let mut p = Powers::new(q.clone(), t.clone());
    let mut acc = p.get(-(lambda.dot_self() as i64), -(lambda.dot_delta(n as usize) as i64))?
        * checked_pow(a, -(lambda.weight() as i64), "a")?;
    let a2 = a.clone() * a.clone();
    for s in lambda.cells() {
        let (i, j) = (s.row as i64, s.col as i64);
        let (li, lj) = (lambda.part(s.row) as i64, conj.part(s.col) as i64);
        acc = acc
            * (F::one() - p.get(li - j + 1, lj - i)?)
            * (F::one() - a2.clone() * p.get(li + j - 1, lj - i + 2 * (n - lj))?);
    }
    Ok(acc)
}

fn q_factored<F: Field>(lambda: &Partition, n: usize, q: &F, t: &F, a: &F) -> Result<F> {
    let mut p = Powers::new(q.clone(), t.clone());
    let a2 = a.clone() * a.clone();
    let mut acc = p.get(-(lambda.dot_self() as i64), -(lambda.dot_delta(n) as i64))?
        * checked_pow(a, -(lambda.weight() as i64), "a")?;
    let ni = n as i64;
    for j in 1..=n {
        let (jj, lj) = (j as i64, lambda.part(j));
        let num = q_pochhammer(&p.get(1, ni - jj)?, q, lj)
            * q_pochhammer(&(p.get(0, 2 * ni - 2 * jj)? * a2.clone()), q, 2 * lj);
        let den = q_pochhammer(&(p.get(0, ni - jj)? * a2.clone()), q, lj);
        acc = checked_div(acc * num, &den, || format!("(t^{} a^2;q)_{lj}", ni - jj))?;
    }
    for i in 1..=n {
        for j in i + 1..=n {
            let (ii, jj) = (i as i64, j as i64);
            let (sum, diff) = (lambda.part(i) + lambda.part(j), lambda.part(i) - lambda.part(j));
            let num = q_pochhammer(&(p.get(0, 2 * ni - ii - jj)? * a2.clone()), q, sum)
                * q_pochhammer(&p.get(1, jj - ii - 1)?, q, diff);
            let den = q_pochhammer(&(p.get(0, 2 * ni - ii - jj + 1)? * a2.clone()), q, sum)
                * q_pochhammer(&p.get(1, jj - ii)?, q, diff);
            acc = checked_div(acc * num, &den, || {
                format!("(t^{} a^2;q)_{sum} (q t^{};q)_{diff}", 2 * ni - ii - jj + 1, jj - ii)
            })?;
        }
    }
    Ok(acc)
}

fn one_box_product<F: Field>(lambda: &Partition, n: usize, tau: &F, alpha: &F) -> F {
    let n = n as i64;
    let conj = lambda.conjugate();
    let two_alpha = alpha.clone() + alpha.clone();
    let mut acc = F::one();
    for s in lambda.cells() {
        let (i, j) = (s.row as i64, s.col as i64);
        let (li, lj) = (lambda.part(s.row) as i64, conj.part(s.col) as i64);
        acc = acc
            * (F::from_int(li - j + 1) + tau.clone() * F::from_int(lj - i))
            * (two_alpha.clone() + F::from_int(li + j - 1) + tau.clone() * F::from_int(lj - i + 2 * (n - lj)));
    }
    acc
}

fn one_factored<F: Field>(lambda: &Partition, n: usize, tau: &F, alpha: &F) -> Result<F> {
    let two_alpha = alpha.clone() + alpha.clone();
    let tk = |k: i64| tau.clone() * F::from_int(k);
    let ni = n as i64;
    let mut acc = F::one();
    for j in 1..=n {
        let (jj, lj) = (j as i64, lambda.part(j));
        let num = shifted_factorial(&(tk(ni - jj) + F::one()), lj)
            * shifted_factorial(&(tk(2 * ni - 2 * jj) + two_alpha.clone()), 2 * lj);
        let den = shifted_factorial(&(tk(ni - jj) + two_alpha.clone()), lj);
        acc = checked_div(acc * num, &den, || format!("({}τ+2α)_{lj}", ni - jj))?;
    }
    for i in 1..=n {
        for j in i + 1..=n {
            let (ii, jj) = (i as i64, j as i64);
            let (sum, diff) = (lambda.part(i) + lambda.part(j), lambda.part(i) - lambda.part(j));
            let num = shifted_factorial(&(tk(2 * ni - ii - jj) + two_alpha.clone()), sum)
                * shifted_factorial(&(tk(jj - ii - 1) + F::one()), diff);
            let den = shifted_factorial(&(tk(2 * ni - ii - jj + 1) + two_alpha.clone()), sum)
                * shifted_factorial(&(tk(jj - ii) + F::one()), diff);
            acc = checked_div(acc * num, &den, || {
                format!("({}τ+2α)_{sum} ({}τ+1)_{diff}", 2 * ni - ii - jj + 1, jj - ii)
            })?;
        }
    }
    Ok(acc)
}

/// `P^ip_λ = prefactor · P^ip_{reduced}` with the shifted parameters.
#[derive(Clone, Debug, PartialEq)]
pub struct Reduction<F> {
    pub prefactor: LaurentPoly<F>,
    pub reduced: Partition,
    pub shifted: BCInterpParams<F>,
}

/// Strips the `λ_n` full columns of `λ`.
///
/// q case: prefactor `(-a)^{-nλ_n} q^{-nλ_n(λ_n-1)/2} ∏_j (x_j a, x_j^{-1} a; q)_{λ_n}`, shift `a → q^{λ_n} a`.
/// One case: prefactor `(-1)^{nλ_n} ∏_j (α + x_j)_{λ_n} (α - x_j)_{λ_n}`, shift `α → λ_n + α`.
pub fn bc_interp_reduction<F: Field>(lambda: &Partition, params: &BCInterpParams<F>) -> Result<Reduction<F>> {
    let n = params.n;
    let m = lambda.part(n);
    if m == 0 || lambda.length() > n {
        return Err(Error::Incompatible(format!("{lambda} has no full column in {n} variables")));
    }
    let reduced = lambda.remove_columns(m, n);
    let mut prefactor = LaurentPoly::one(n);
    let (scalar, shift) = match &params.mode {
        BCInterpMode::QCase { q, a, .. } => {
            for j in 0..n {
                prefactor = &prefactor * &laurent_q_pochhammer(n, j, false, a, q, m);
                prefactor = &prefactor * &laurent_q_pochhammer(n, j, true, a, q, m);
            }
            let nm = (n * m) as i64;
            let lead = checked_pow(&-a.clone(), nm, "a")? * checked_pow(q, nm * (m as i64 - 1) / 2, "q")?;
            (
                checked_div(F::one(), &lead, || "a = 0".into())?,
                checked_pow(q, m as i64, "q")? * a.clone(),
            )
        }
        BCInterpMode::OneCase { alpha, .. } => {
            for j in 0..n {
                prefactor = &prefactor * &laurent_shifted_factorial(n, j, false, alpha, m);
                prefactor = &prefactor * &laurent_shifted_factorial(n, j, true, alpha, m);
            }
            let sign = if (n * m).is_multiple_of(2) { F::one() } else { -F::one() };
            (sign, F::from_int(m as i64) + alpha.clone())
        }
    };
    Ok(Reduction {
        prefactor: prefactor.scale(&scalar),
        reduced,
        shifted: params.with_shift(shift),
    })
}
