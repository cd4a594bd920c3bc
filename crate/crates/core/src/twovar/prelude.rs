//! One-variable interpolation and orthogonal polynomials with their binomial expansions.
//!
//! All polynomials are Laurent polynomials in a single variable `x`.

use crate::error::Result;
use crate::exactalg::qseries::laurent_q_pochhammer;
use crate::exactalg::{checked_div, checked_pow, factorial, q_pochhammer, shifted_factorial, Field, LaurentPoly};

fn x<F: Field>() -> LaurentPoly<F> {
    LaurentPoly::var(1, 0)
}

fn c<F: Field>(v: F) -> LaurentPoly<F> {
    LaurentPoly::constant(1, v)
}

/// `∏_{j<k} (x - q^j)`, the interpolation polynomial vanishing at `1, q, .., q^{k-1}`.
pub fn interp_macdonald_one_var<F: Field>(k: usize, q: &F) -> LaurentPoly<F> {
    let mut acc = LaurentPoly::one(1);
    let mut qj = F::one();
    for _ in 0..k {
        acc = &acc * &(x() - c(qj.clone()));
        qj = qj * q.clone();
    }
    acc
}

/// `∏_{j<k} (x - j)`.
pub fn interp_jack_one_var<F: Field>(k: usize) -> LaurentPoly<F> {
    (0..k).fold(LaurentPoly::one(1), |acc, j| &acc * &(x() - c(F::from_int(j as i64))))
}

/// `∏_{j<k} (x + x^{-1} - a q^j - a^{-1} q^{-j})`, vanishing at `x = a q^j` for `j < k`.
pub fn askey_wilson_interp<F: Field>(k: usize, q: &F, a: &F) -> Result<LaurentPoly<F>> {
    let mut acc = LaurentPoly::one(1);
    let sym = x() + LaurentPoly::var_power(1, 0, -1, F::one());
    for j in 0..k {
        let node = a.clone() * checked_pow(q, j as i64, "q")?;
        let inv = checked_pow(&node, -1, "a q^j")?;
        acc = &acc * &(sym.clone() - c(node + inv));
    }
    Ok(acc)
}

/// `∏_{j<k} (x^2 - (α + j)^2)`, vanishing at `x = ±(α + j)` for `j < k`.
pub fn jacobi_interp_one_var<F: Field>(k: usize, alpha: &F) -> LaurentPoly<F> {
    let x2 = x::<F>().pow(2);
    (0..k).fold(LaurentPoly::one(1), |acc, j| {
        let r = alpha.clone() + F::from_int(j as i64);
        &acc * &(x2.clone() - c(r.clone() * r))
    })
}

/// Coefficients `c_k` of `x^n = Σ_k c_k ∏_{j<k}(x - q^j)` from the q-binomial theorem:
/// `c_k = (q^{-n};q)_k q^{nk} / ((-1)^k q^{k(k-1)/2} (q;q)_k)`.
pub fn q_binomial_coefficients<F: Field>(n: usize, q: &F) -> Result<Vec<F>> {
    let qmn = checked_pow(q, -(n as i64), "q")?;
    (0..=n)
        .map(|k| {
            let num = q_pochhammer(&qmn, q, k) * checked_pow(q, (n * k) as i64, "q")?;
            let sign = if k % 2 == 0 { F::one() } else { -F::one() };
            let den = sign * checked_pow(q, (k * k.saturating_sub(1) / 2) as i64, "q")? * q_pochhammer(q, q, k);
            checked_div(num, &den, || format!("(q;q)_{k}"))
        })
        .collect()
}

/// The same coefficients as ratios of interpolation values, `P_k(q^n) / P_k(q^k)`.
pub fn q_binomial_coefficients_by_ratio<F: Field>(n: usize, q: &F) -> Result<Vec<F>> {
    let qn = checked_pow(q, n as i64, "q")?;
    (0..=n)
        .map(|k| {
            let p = interp_macdonald_one_var(k, q);
            let top = p.evaluate(std::slice::from_ref(&qn))?;
            let bottom = p.evaluate(&[checked_pow(q, k as i64, "q")?])?;
            checked_div(top, &bottom, || format!("P_{k}(q^{k})"))
        })
        .collect()
}

/// `x^n` as the terminating `2φ0(q^{-n}, x^{-1}; -; q, q^n x)`, evaluated at a point.
pub fn q_binomial_series_at<F: Field>(n: usize, q: &F, point: &F) -> Result<F> {
    use crate::exactalg::{hypergeometric_terminating, HyperKind};
    let inv = checked_pow(point, -1, "x")?;
    let arg = checked_pow(q, n as i64, "q")? * point.clone();
    let series = hypergeometric_terminating(&HyperKind::Basic { base: q.clone() }, &[inv], &[], &arg, n)?;
    Ok(series)
}

/// Coefficients of `(x + 1)^n = Σ_k c_k x^k` with `c_k = P_k(n) / P_k(k)` for `P_k = ∏_{j<k}(x - j)`.
pub fn binomial_coefficients_by_ratio<F: Field>(n: usize) -> Result<Vec<F>> {
    (0..=n)
        .map(|k| {
            let p = interp_jack_one_var::<F>(k);
            let top = p.evaluate(&[F::from_int(n as i64)])?;
            checked_div(top, &factorial::<F>(k), || format!("{k}!"))
        })
        .collect()
}

/// `2F1(-n, n + α + β + 1; α + 1; x)`, the Jacobi polynomial normalized to `1` at `x = 0`.
pub fn jacobi_one_var<F: Field>(n: usize, alpha: &F, beta: &F) -> Result<LaurentPoly<F>> {
    let b = F::from_int(n as i64 + 1) + alpha.clone() + beta.clone();
    let a1 = alpha.clone() + F::one();
    let mut acc = LaurentPoly::zero(1);
    for k in 0..=n {
        let num = shifted_factorial(&F::from_int(-(n as i64)), k) * shifted_factorial(&b, k);
        let coef = checked_div(num, &(shifted_factorial(&a1, k) * factorial::<F>(k)), || format!("(α+1)_{k}"))?;
        acc = acc + LaurentPoly::var_power(1, 0, k as i32, coef);
    }
    Ok(acc)
}

/// The Askey-Wilson `4φ3(q^{-n}, q^{n-1} a_1a_2a_3a_4, a_1 x, a_1 x^{-1}; a_1a_2, a_1a_3, a_1a_4; q, q)`,
/// normalized to `1` at `x = a_1`.
pub fn askey_wilson<F: Field>(n: usize, q: &F, a: &[F; 4]) -> Result<LaurentPoly<F>> {
    let qmn = checked_pow(q, -(n as i64), "q")?;
    let prod = a.iter().fold(F::one(), |acc, v| acc * v.clone());
    let top = checked_pow(q, n as i64 - 1, "q")? * prod;
    let mut acc = LaurentPoly::zero(1);
    for k in 0..=n {
        let mut den = q_pochhammer(q, q, k);
        for ai in &a[1..] {
            den = den * q_pochhammer(&(a[0].clone() * ai.clone()), q, k);
        }
        let num = q_pochhammer(&qmn, q, k) * q_pochhammer(&top, q, k) * checked_pow(q, k as i64, "q")?;
        let coef = checked_div(num, &den, || format!("(a_1 a_i;q)_{k}"))?;
        let pair = &laurent_q_pochhammer(1, 0, false, &a[0], q, k) * &laurent_q_pochhammer(1, 0, true, &a[0], q, k);
        acc = acc + pair.scale(&coef);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::afamilies::{a_type_polynomial, ATypeFamily, ATypeParams};
    use crate::bcfamilies::{
        bc_interp_polynomial, jacobi_polynomial, koornwinder_polynomial, orthogonal_bc_evaluation, BCInterpParams,
        JacobiParams, KoornwinderParams, OrthogonalBCParams,
    };
    use crate::combinatorics::Partition;
    use crate::exactalg::{rat, Rational};

    #[test]
    fn q_binomial_expansions_agree() {
        let q = rat(2, 5);
        for n in 0..6 {
            let c = q_binomial_coefficients(n, &q).unwrap();
            assert_eq!(c, q_binomial_coefficients_by_ratio(n, &q).unwrap());
            let sum = c.iter().enumerate().fold(LaurentPoly::zero(1), |acc, (k, ck)| {
                acc + interp_macdonald_one_var(k, &q).scale(ck)
            });
            assert_eq!(sum, LaurentPoly::var_power(1, 0, n as i32, Rational::one()));
            let pt = rat(-7, 3);
            assert_eq!(q_binomial_series_at(n, &q, &pt).unwrap(), checked_pow(&pt, n as i64, "x").unwrap());
        }
    }

    #[test]
    fn binomial_expansion_is_pascal() {
        for n in 0..7 {
            let c = binomial_coefficients_by_ratio::<Rational>(n).unwrap();
            let mut row = vec![Rational::one()];
            for _ in 0..n {
                let mut next = vec![Rational::one(); row.len() + 1];
                for i in 1..row.len() {
                    next[i] = row[i - 1].clone() + row[i].clone();
                }
                row = next;
            }
            assert_eq!(c, row);
        }
    }

    #[test]
    fn one_variable_interpolation_polynomials_match_general_code() {
        let (q, t, a, alpha) = (rat(1, 3), rat(2, 7), rat(5, 4), rat(1, 3));
        for k in 0..5 {
            let lambda = Partition::from_slice(&[k]);
            let mp = ATypeParams::q_case(q.clone(), t.clone(), 1);
            assert_eq!(
                a_type_polynomial(ATypeFamily::InterpMacdonald, &lambda, &mp).unwrap(),
                interp_macdonald_one_var(k, &q)
            );
            let jp = ATypeParams::one_case(rat(3, 2), 1);
            assert_eq!(a_type_polynomial(ATypeFamily::InterpJack, &lambda, &jp).unwrap(), interp_jack_one_var(k));
            let bp = BCInterpParams::q_case(q.clone(), t.clone(), a.clone(), 1);
            assert_eq!(bc_interp_polynomial(&lambda, &bp).unwrap(), askey_wilson_interp(k, &q, &a).unwrap());
            let bj = BCInterpParams::one_case(rat(3, 2), alpha.clone(), 1);
            assert_eq!(bc_interp_polynomial(&lambda, &bj).unwrap(), jacobi_interp_one_var(k, &alpha));
        }
    }

    #[test]
    fn askey_wilson_interp_vanishes_at_nodes() {
        let (q, a) = (rat(1, 3), rat(5, 4));
        for k in 1..=5 {
            let p = askey_wilson_interp(k, &q, &a).unwrap();
            for j in 0..k {
                let node = a.clone() * checked_pow(&q, j as i64, "q").unwrap();
                assert!(p.evaluate(&[node]).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn askey_wilson_matches_koornwinder_in_one_variable() {
        let q = rat(1, 3);
        let (a1, d1) = (rat(3, 2), rat(2, 3));
        let (a2, a3) = (rat(2, 5), rat(-1, 4));
        let a4 = q.clone() * d1.clone() * d1.clone() / (a1.clone() * a2.clone() * a3.clone());
        let p = KoornwinderParams::new(q.clone(), rat(2, 7), [a1, a2, a3, a4], d1, 1).unwrap();
        for n in 0..4 {
            let lambda = Partition::from_slice(&[n]);
            let e = orthogonal_bc_evaluation(&lambda, &OrthogonalBCParams::Koornwinder(p.clone())).unwrap();
            let k = koornwinder_polynomial(&lambda, &p).unwrap();
            assert_eq!(askey_wilson(n, &q, &p.a).unwrap().scale(&e), k, "n = {n}");
        }
    }

    #[test]
    fn jacobi_matches_bc_jacobi_in_one_variable() {
        let (alpha, beta) = (rat(1, 3), rat(2, 5));
        let p = JacobiParams::new(rat(3, 2), alpha.clone(), beta.clone(), 1);
        for n in 0..4 {
            let lambda = Partition::from_slice(&[n]);
            let e = orthogonal_bc_evaluation(&lambda, &OrthogonalBCParams::Jacobi(p.clone())).unwrap();
            let f = jacobi_polynomial(&lambda, &p).unwrap();
            assert_eq!(jacobi_one_var(n, &alpha, &beta).unwrap().scale(&e), f, "n = {n}");
        }
    }
}
