//! A-type families: Macdonald, Jack and their interpolation analogues.
//!
//! All four are built from one tableau sum `Σ_T ψ_T ∏_s f(x_{T(s)}, s)`,
//! evaluated level by level over chains of horizontal strips rather than by
//! listing tableaux. The per-cell factor `f` decides the family.

pub(crate) mod cells;
pub(crate) mod psi;

use crate::combinatorics::{Partition, ReverseTableau};
use crate::error::{Error, Result};
use crate::exactalg::{checked_div, checked_pow, q_pochhammer, shifted_factorial, Field, LaurentPoly};

use cells::{tableau_polynomial, tableau_value, CellRule};
use psi::{Powers, PsiWeights};

/// The parameter regime: `(q, t)`, or the `q → 1` regime with `t = q^τ`.
#[derive(Clone, Debug, PartialEq)]
pub enum ATypeMode<F> {
    QCase { q: F, t: F },
    OneCase { tau: F },
}

#[derive(Clone, Debug, PartialEq)]
pub struct ATypeParams<F> {
    pub mode: ATypeMode<F>,
    pub n: usize,
}

impl<F: Field> ATypeParams<F> {
    pub fn q_case(q: F, t: F, n: usize) -> Self {
        ATypeParams {
            mode: ATypeMode::QCase { q, t },
            n,
        }
    }

    pub fn one_case(tau: F, n: usize) -> Self {
        ATypeParams {
            mode: ATypeMode::OneCase { tau },
            n,
        }
    }

    fn qt(&self) -> Result<(&F, &F)> {
        match &self.mode {
            ATypeMode::QCase { q, t } => Ok((q, t)),
            ATypeMode::OneCase { .. } => Err(Error::Incompatible("needs (q, t) parameters".into())),
        }
    }

    fn tau(&self) -> Result<&F> {
        match &self.mode {
            ATypeMode::OneCase { tau } => Ok(tau),
            ATypeMode::QCase { .. } => Err(Error::Incompatible("needs the τ parameter".into())),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ATypeFamily {
    Macdonald,
    Jack,
    InterpMacdonald,
    InterpJack,
}

impl ATypeFamily {
    pub fn is_interpolation(self) -> bool {
        matches!(self, ATypeFamily::InterpMacdonald | ATypeFamily::InterpJack)
    }

    fn rule<F: Field>(self, params: &ATypeParams<F>) -> Result<CellRule<F>> {
        Ok(match self {
            ATypeFamily::Macdonald => {
                params.qt()?;
                CellRule::Monomial
            }
            ATypeFamily::Jack => {
                params.tau()?;
                CellRule::Monomial
            }
            ATypeFamily::InterpMacdonald => {
                let (q, t) = params.qt()?;
                CellRule::ShiftedQ {
                    powers: Powers::new(q.clone(), t.clone()),
                }
            }
            ATypeFamily::InterpJack => CellRule::ShiftedJack {
                tau: params.tau()?.clone(),
            },
        })
    }
}

/// `ψ_T`: the product of strip weights `ψ_{λ^(k-1)/λ^(k)}` along the chain of `T`.
pub fn tableau_weight<F: Field>(t: &ReverseTableau, mode: &ATypeMode<F>) -> Result<F> {
    PsiWeights::new(mode).tableau(t)
}

/// The family member indexed by `λ` in `params.n` variables.
pub fn a_type_polynomial<F: Field>(
    family: ATypeFamily,
    lambda: &Partition,
    params: &ATypeParams<F>,
) -> Result<LaurentPoly<F>> {
    let rule = family.rule(params)?;
    tableau_polynomial(lambda, params.n, &params.mode, rule)
}

/// The family member evaluated at `point`, without expanding it.
pub fn a_type_value<F: Field>(
    family: ATypeFamily,
    lambda: &Partition,
    params: &ATypeParams<F>,
    point: &[F],
) -> Result<F> {
    let rule = family.rule(params)?;
    tableau_value(lambda, params.n, &params.mode, rule, point)
}

/// `q^μ t^δ` in the q case, `μ + τδ` in the one case, with `δ = (n-1, ..., 1, 0)`.
pub fn spectral_point<F: Field>(mu: &Partition, params: &ATypeParams<F>) -> Result<Vec<F>> {
    let n = params.n;
    let mut powers = match &params.mode {
        ATypeMode::QCase { q, t } => Some(Powers::new(q.clone(), t.clone())),
        ATypeMode::OneCase { .. } => None,
    };
    (1..=n)
        .map(|i| {
            let (m, d) = (mu.part(i) as i64, (n - i) as i64);
            match (&mut powers, &params.mode) {
                (Some(p), _) => p.get(m, d),
                (None, ATypeMode::OneCase { tau }) => Ok(F::from_int(m) + tau.clone() * F::from_int(d)),
                (None, ATypeMode::QCase { .. }) => unreachable!(),
            }
        })
        .collect()
}

/// Closed-form principal specialization: `P_λ(t^δ; q, t)` or `P_λ(1^n; τ)`.
pub fn a_type_evaluation<F: Field>(family: ATypeFamily, lambda: &Partition, params: &ATypeParams<F>) -> Result<F> {
    let n = params.n;
    if lambda.length() > n {
        return Ok(F::zero());
    }
    let mut acc = F::one();
    match family {
        ATypeFamily::Macdonald => {
            let (q, t) = params.qt()?;
            acc = checked_pow(t, lambda.n_statistic() as i64, "t")?;
            for i in 1..=n {
                for j in i + 1..=n {
                    let d = lambda.part(i) - lambda.part(j);
                    let num = q_pochhammer(&checked_pow(t, (j - i + 1) as i64, "t")?, q, d);
                    let den = q_pochhammer(&checked_pow(t, (j - i) as i64, "t")?, q, d);
                    acc = checked_div(acc * num, &den, || format!("(t^{};q)_{d}", j - i))?;
                }
            }
        }
        ATypeFamily::Jack => {
            let tau = params.tau()?;
            for i in 1..=n {
                for j in i + 1..=n {
                    let d = lambda.part(i) - lambda.part(j);
                    let num = shifted_factorial(&(tau.clone() * F::from_int((j - i + 1) as i64)), d);
                    let den = shifted_factorial(&(tau.clone() * F::from_int((j - i) as i64)), d);
                    acc = checked_div(acc * num, &den, || format!("({}τ)_{d}", j - i))?;
                }
            }
        }
        _ => {
            return Err(Error::Incompatible(
                "principal specialization is defined for Macdonald and Jack".into(),
            ))
        }
    }
    Ok(acc)
}

/// Closed form of `P^ip_λ` at its own spectral point.
///
/// q case: `q^{-⟨λ,λ⟩} t^{-⟨λ,δ⟩} ∏_{(i,j)} (1 - q^{λ_i-j+1} t^{λ'_j-i}) (-q^{λ_i+j-1} t^{λ'_j-i+2(n-λ'_j)})`;
/// one case: `∏_{(i,j)} (λ_i - j + 1 + τ(λ'_j - i))`.
pub fn interpolation_node_value<F: Field>(lambda: &Partition, params: &ATypeParams<F>) -> Result<F> {
    let n = params.n as i64;
    if lambda.length() > params.n {
        return Err(Error::DegreeBound(format!("{lambda} has more than {n} parts")));
    }
    let conj = lambda.conjugate();
    match &params.mode {
        ATypeMode::QCase { q, t } => {
            let mut p = Powers::new(q.clone(), t.clone());
            let mut acc = p.get(-(lambda.dot_self() as i64), -(lambda.dot_delta(params.n) as i64))?;
            for s in lambda.cells() {
                let (i, j) = (s.row as i64, s.col as i64);
                let (li, lj) = (lambda.part(s.row) as i64, conj.part(s.col) as i64);
                acc = acc * (F::one() - p.get(li - j + 1, lj - i)?);
                acc = -(acc * p.get(li + j - 1, lj - i + 2 * (n - lj))?);
            }
            Ok(acc)
        }
        ATypeMode::OneCase { tau } => {
            let mut acc = F::one();
            for s in lambda.cells() {
                let (i, j) = (s.row as i64, s.col as i64);
                let (li, lj) = (lambda.part(s.row) as i64, conj.part(s.col) as i64);
                acc = acc * (F::from_int(li - j + 1) + tau.clone() * F::from_int(lj - i));
            }
            Ok(acc)
        }
    }
}

/// `P^ip_μ(λ̂) / P^ip_μ(μ̂)` where `ν̂` is the spectral point of `ν`.
pub fn generalized_binomial<F: Field>(lambda: &Partition, mu: &Partition, params: &ATypeParams<F>) -> Result<F> {
    let family = match params.mode {
        ATypeMode::QCase { .. } => ATypeFamily::InterpMacdonald,
        ATypeMode::OneCase { .. } => ATypeFamily::InterpJack,
    };
    if lambda.length() > params.n || mu.length() > params.n {
        return Err(Error::DegreeBound(format!("partitions must have at most {} parts", params.n)));
    }
    let num = a_type_value(family, mu, params, &spectral_point(lambda, params)?)?;
    let den = interpolation_node_value(mu, params)?;
    checked_div(num, &den, || format!("P^ip_{mu} at its own spectral point"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{enumerate_partitions, enumerate_reverse_tableaux};
    use crate::exactalg::symmetric::is_triangular_monic;
    use crate::exactalg::{monomial_expansion, rat, Exponent, Rational};

    fn p(v: &[usize]) -> Partition {
        Partition::from_slice(v)
    }

    fn qp(n: usize) -> ATypeParams<Rational> {
        ATypeParams::q_case(rat(2, 7), rat(3, 5), n)
    }

    fn jp(n: usize) -> ATypeParams<Rational> {
        ATypeParams::one_case(rat(5, 3), n)
    }

    fn term(e: &[i32], c: Rational) -> (Exponent, Rational) {
        (Exponent(e.to_vec()), c)
    }

    #[test]
    fn two_box_macdonald() {
        let (q, t) = (rat(2, 7), rat(3, 5));
        let got = a_type_polynomial(ATypeFamily::Macdonald, &p(&[2]), &qp(2)).unwrap();
        let c = (rat(1, 1) + q.clone()) * (rat(1, 1) - t.clone()) / (rat(1, 1) - q * t);
        let want = LaurentPoly::from_terms(2, [term(&[2, 0], rat(1, 1)), term(&[0, 2], rat(1, 1)), term(&[1, 1], c)]);
        assert_eq!(got, want);
    }

    #[test]
    fn one_box_interpolation() {
        let t = rat(3, 5);
        let got = a_type_polynomial(ATypeFamily::InterpMacdonald, &p(&[1]), &qp(2)).unwrap();
        let want = LaurentPoly::from_terms(
            2,
            [term(&[1, 0], rat(1, 1)), term(&[0, 1], rat(1, 1)), term(&[0, 0], -(t + rat(1, 1)))],
        );
        assert_eq!(got, want);
        let got = a_type_polynomial(ATypeFamily::InterpJack, &p(&[1]), &jp(2)).unwrap();
        let want = LaurentPoly::from_terms(
            2,
            [term(&[1, 0], rat(1, 1)), term(&[0, 1], rat(1, 1)), term(&[0, 0], rat(-5, 3))],
        );
        assert_eq!(got, want);
    }

    #[test]
    fn chain_sum_matches_tableau_enumeration() {
        let params = qp(3);
        for lambda in enumerate_partitions(4, 3) {
            let mut acc = LaurentPoly::zero(3);
            for t in enumerate_reverse_tableaux(&lambda, 3) {
                let mut term = LaurentPoly::constant(3, tableau_weight(&t, &params.mode).unwrap());
                for v in t.reading_word() {
                    term = &term * &LaurentPoly::var(3, v - 1);
                }
                acc = acc + term;
            }
            let got = a_type_polynomial(ATypeFamily::Macdonald, &lambda, &params).unwrap();
            assert_eq!(got, acc, "λ = {lambda}");
        }
    }

    #[test]
    fn monic_symmetric_homogeneous() {
        for lambda in enumerate_partitions(4, 3) {
            for (family, params) in [(ATypeFamily::Macdonald, qp(3)), (ATypeFamily::Jack, jp(3))] {
                let f = a_type_polynomial(family, &lambda, &params).unwrap();
                assert!(f.is_symmetric() && f.is_homogeneous());
                let exp = monomial_expansion(&f, false).unwrap();
                assert!(is_triangular_monic(&exp, &lambda, 3));
            }
        }
    }

    #[test]
    fn principal_specialization_matches() {
        for lambda in enumerate_partitions(4, 3) {
            let params = qp(3);
            let f = a_type_polynomial(ATypeFamily::Macdonald, &lambda, &params).unwrap();
            let pt = spectral_point(&Partition::empty(), &params).unwrap();
            assert_eq!(f.evaluate(&pt).unwrap(), a_type_evaluation(ATypeFamily::Macdonald, &lambda, &params).unwrap());
            let params = jp(3);
            let v = a_type_value(ATypeFamily::Jack, &lambda, &params, &[rat(1, 1), rat(1, 1), rat(1, 1)]).unwrap();
            assert_eq!(v, a_type_evaluation(ATypeFamily::Jack, &lambda, &params).unwrap());
        }
    }

    #[test]
    fn node_values_and_extra_vanishing() {
        for (family, params) in [(ATypeFamily::InterpMacdonald, qp(2)), (ATypeFamily::InterpJack, jp(2))] {
            for lambda in enumerate_partitions(3, 2) {
                for mu in enumerate_partitions(lambda.weight() + 1, 2) {
                    let v = a_type_value(family, &lambda, &params, &spectral_point(&mu, &params).unwrap()).unwrap();
                    if mu == lambda {
                        assert_eq!(v, interpolation_node_value(&lambda, &params).unwrap(), "λ = {lambda}");
                    } else if !lambda.is_contained_in(&mu) {
                        assert!(v.is_zero(), "λ = {lambda}, μ = {mu}");
                    }
                }
            }
        }
    }

    #[test]
    fn binomial_small_cases() {
        let params = jp(2);
        assert_eq!(generalized_binomial(&p(&[2]), &p(&[1]), &params).unwrap(), rat(2, 1));
        assert_eq!(generalized_binomial(&p(&[2, 1]), &p(&[2, 1]), &qp(2)).unwrap(), rat(1, 1));
        assert_eq!(generalized_binomial(&p(&[3]), &p(&[]), &qp(2)).unwrap(), rat(1, 1));
    }

    #[test]
    fn incompatible_mode_rejected() {
        assert!(matches!(
            a_type_polynomial(ATypeFamily::Jack, &p(&[1]), &qp(2)),
            Err(Error::Incompatible(_))
        ));
    }
}
