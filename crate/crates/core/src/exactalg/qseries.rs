//! Shifted factorials and terminating (q-)hypergeometric sums.

use super::field::{checked_div, Field};
use super::laurent::LaurentPoly;
use crate::error::Result;

/// `(a;q)_k = (1-a)(1-aq)...(1-aq^{k-1})`.
pub fn q_pochhammer<F: Field>(a: &F, q: &F, k: usize) -> F {
    let mut acc = F::one();
    let mut term = a.clone();
    for _ in 0..k {
        acc = acc * (F::one() - term.clone());
        term = term * q.clone();
    }
    acc
}

/// `(a_1,...,a_r;q)_k`.
pub fn q_pochhammer_multi<F: Field>(args: &[F], q: &F, k: usize) -> F {
    args.iter()
        .fold(F::one(), |acc, a| acc * q_pochhammer(a, q, k))
}

/// `(a)_k = a(a+1)...(a+k-1)`.
pub fn shifted_factorial<F: Field>(a: &F, k: usize) -> F {
    (0..k).fold(F::one(), |acc, j| acc * (a.clone() + F::from_int(j as i64)))
}

pub fn shifted_factorial_multi<F: Field>(args: &[F], k: usize) -> F {
    args.iter().fold(F::one(), |acc, a| acc * shifted_factorial(a, k))
}

pub fn factorial<F: Field>(k: usize) -> F {
    shifted_factorial(&F::one(), k)
}

/// Which terminating series to sum.
#[derive(Clone, Debug)]
pub enum HyperKind<F> {
    /// `rφs` with base `q`.
    Basic { base: F },
    /// `rFs`.
    Ordinary,
}

/// Terminating `rφs(q^{-n}, a_2..a_r; b_1..b_s; q, z)` or `rFs(-n, a_2..a_r; b_1..b_s; z)`.
///
/// The leading numerator parameter is supplied implicitly through `n`; `numerator`
/// holds `a_2..a_r`. A vanishing denominator factor is reported by index.
pub fn hypergeometric_terminating<F: Field>(
    kind: &HyperKind<F>,
    numerator: &[F],
    denominator: &[F],
    argument: &F,
    n: usize,
) -> Result<F> {
    let r = numerator.len() + 1;
    let s = denominator.len();
    let mut sum = F::zero();
    let mut term = F::one();
    for k in 0..=n {
        sum = sum + term.clone();
        if k == n {
            break;
        }
        let kk = k as i64;
        let (num, den) = match kind {
            HyperKind::Basic { base: q } => {
                let qk = q.powi(kk).expect("nonnegative power");
                let qmn = q.powi(-(n as i64)).ok_or_else(|| {
                    crate::error::Error::nongeneric("base q = 0 in terminating series")
                })?;
                let mut num = F::one() - qmn * qk.clone();
                for a in numerator {
                    num = num * (F::one() - a.clone() * qk.clone());
                }
                let mut den = F::one() - q.clone() * qk.clone();
                for b in denominator {
                    den = den * (F::one() - b.clone() * qk.clone());
                }
                // ((-1)^k q^{k(k-1)/2})^{1+s-r} ratio between consecutive k
                let e = 1 + s as i64 - r as i64;
                let step = (-qk).powi(e).ok_or_else(|| {
                    crate::error::Error::nongeneric("base q = 0 in balancing factor")
                })?;
                (num * step * argument.clone(), den)
            }
            HyperKind::Ordinary => {
                let kf = F::from_int(kk);
                let mut num = F::from_int(kk - n as i64);
                for a in numerator {
                    num = num * (a.clone() + kf.clone());
                }
                let mut den = F::from_int(kk + 1);
                for b in denominator {
                    den = den * (b.clone() + kf.clone());
                }
                (num * argument.clone(), den)
            }
        };
        if num.is_zero() {
            break;
        }
        term = checked_div(term * num, &den, || {
            format!("denominator Pochhammer factor at index {k} of the terminating series")
        })?;
    }
    Ok(sum)
}

/// `(c x_i^{±1}; q)_k` as a Laurent polynomial in `nvars` variables.
pub fn laurent_q_pochhammer<F: Field>(
    nvars: usize,
    var: usize,
    inverse: bool,
    c: &F,
    q: &F,
    k: usize,
) -> LaurentPoly<F> {
    let e = if inverse { -1 } else { 1 };
    let mut acc = LaurentPoly::one(nvars);
    let mut cj = c.clone();
    for _ in 0..k {
        let factor = LaurentPoly::one(nvars) - LaurentPoly::var_power(nvars, var, e, cj.clone());
        acc = &acc * &factor;
        cj = cj * q.clone();
    }
    acc
}

/// `(c + sign*x_i)_k` as a polynomial in `nvars` variables.
pub fn laurent_shifted_factorial<F: Field>(
    nvars: usize,
    var: usize,
    negate: bool,
    c: &F,
    k: usize,
) -> LaurentPoly<F> {
    let sign = if negate { -F::one() } else { F::one() };
    let mut acc = LaurentPoly::one(nvars);
    for j in 0..k {
        let factor = LaurentPoly::constant(nvars, c.clone() + F::from_int(j as i64))
            + LaurentPoly::var_power(nvars, var, 1, sign.clone());
        acc = &acc * &factor;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::field::{rat, Rational};

    #[test]
    fn pochhammer_base_cases() {
        let q = rat(1, 3);
        let a = rat(2, 5);
        assert_eq!(q_pochhammer(&a, &q, 0), rat(1, 1));
        // (q;q)_2 = (1-q)(1-q^2)
        assert_eq!(
            q_pochhammer(&q, &q, 2),
            (rat(1, 1) - q.clone()) * (rat(1, 1) - q.clone() * q.clone())
        );
    }

    #[test]
    fn pochhammer_vanishes_past_negative_power() {
        let q = rat(2, 7);
        for m in 0..4i64 {
            let a = q.powi(-m).unwrap();
            for k in (m as usize + 1)..6 {
                assert_eq!(q_pochhammer(&a, &q, k), rat(0, 1));
            }
        }
    }

    #[test]
    fn shifted_factorial_values() {
        assert_eq!(shifted_factorial(&rat(3, 1), 3), rat(60, 1));
        assert_eq!(factorial::<Rational>(5), rat(120, 1));
    }

    #[test]
    fn two_term_gauss_sum() {
        // 2F1(-1, b; c; z) = 1 - b z / c
        let (b, c, z) = (rat(3, 4), rat(5, 2), rat(-2, 3));
        let got = hypergeometric_terminating(&HyperKind::Ordinary, std::slice::from_ref(&b), std::slice::from_ref(&c), &z, 1)
            .unwrap();
        assert_eq!(got, rat(1, 1) - b * z / c);
    }

    #[test]
    fn degree_zero_series_is_one() {
        let q = rat(1, 2);
        let got = hypergeometric_terminating(
            &HyperKind::Basic { base: q },
            &[rat(3, 1)],
            &[rat(5, 1)],
            &rat(7, 1),
            0,
        )
        .unwrap();
        assert_eq!(got, rat(1, 1));
        let got = hypergeometric_terminating::<Rational>(&HyperKind::Ordinary, &[], &[], &rat(7, 1), 0)
            .unwrap();
        assert_eq!(got, rat(1, 1));
    }

    #[test]
    fn q_binomial_two_phi_zero() {
        // x^2 = 2phi0(q^-2, x^-1; -; q, q^2 x)
        let q = rat(1, 3);
        let x = rat(5, 7);
        let arg = q.clone() * q.clone() * x.clone();
        let got = hypergeometric_terminating(
            &HyperKind::Basic { base: q },
            &[x.inv().unwrap()],
            &[],
            &arg,
            2,
        )
        .unwrap();
        assert_eq!(got, x.clone() * x);
    }

    #[test]
    fn zero_denominator_reported() {
        let err = hypergeometric_terminating(&HyperKind::Ordinary, &[rat(1, 1)], &[rat(-1, 1)], &rat(1, 1), 3)
            .unwrap_err();
        assert!(matches!(err, crate::error::Error::NonGeneric { .. }));
    }
}
