//! Linear functionals realizing orthogonality integrals exactly.
//!
//! Torus integrals against a Laurent-polynomial weight become constant-term
//! extraction. The `[0,1]^n` integral against `∏ x^α (1-x)^β |x_i - x_j|^{2τ}`
//! becomes a sum of normalized Beta moments.

use super::field::{checked_div, Field};
use super::laurent::{constant_term_of_product, Exponent, LaurentPoly};
use super::qseries::shifted_factorial;
use crate::error::{Error, Result};

/// Largest exponent searched when recognizing `t = q^k` or an integer `τ`.
const MAX_WEIGHT_EXPONENT: i64 = 32;

/// Laurent-polynomial weights for constant-term functionals.
#[derive(Clone, Debug, PartialEq)]
pub enum ConstantTermWeight<F> {
    /// Weight 1.
    Trivial,
    /// `∏_{i<j} (x_i/x_j; q)_k (x_j/x_i; q)_k`, the Macdonald weight at `t = q^k`.
    Macdonald { q: F, k: u32 },
    /// `∏_{i<j} (1 - x_i/x_j)^τ (1 - x_j/x_i)^τ` with integer `τ`.
    Jack { tau: u32 },
}

impl<F: Field> ConstantTermWeight<F> {
    /// Recognize `t = q^k` with `0 ≤ k ≤ 32`.
    pub fn macdonald(q: &F, t: &F) -> Result<Self> {
        let mut pw = F::one();
        for k in 0..=MAX_WEIGHT_EXPONENT {
            if pw == *t {
                return Ok(ConstantTermWeight::Macdonald {
                    q: q.clone(),
                    k: k as u32,
                });
            }
            pw = pw * q.clone();
        }
        Err(Error::NonPolynomialWeight(format!(
            "t = {t} is not a power q^k (q = {q}, k <= {MAX_WEIGHT_EXPONENT})"
        )))
    }

    /// Recognize a positive integer `τ`.
    pub fn jack(tau: &F) -> Result<Self> {
        Ok(ConstantTermWeight::Jack {
            tau: positive_integer(tau)?,
        })
    }

    /// The weight as a Laurent polynomial.
    pub fn polynomial(&self, n: usize) -> LaurentPoly<F> {
        let mut w = LaurentPoly::one(n);
        let pair = |i: usize, j: usize, c: F| {
            let mut e = vec![0; n];
            e[i] = 1;
            e[j] = -1;
            LaurentPoly::one(n) - LaurentPoly::monomial(Exponent(e), c)
        };
        match self {
            ConstantTermWeight::Trivial => {}
            ConstantTermWeight::Macdonald { q, k } => {
                for i in 0..n {
                    for j in (i + 1)..n {
                        let mut c = F::one();
                        for _ in 0..*k {
                            w = &w * &pair(i, j, c.clone());
                            w = &w * &pair(j, i, c.clone());
                            c = c * q.clone();
                        }
                    }
                }
            }
            ConstantTermWeight::Jack { tau } => {
                for i in 0..n {
                    for j in (i + 1)..n {
                        let f = &pair(i, j, F::one()) * &pair(j, i, F::one());
                        w = &w * &f.pow(*tau);
                    }
                }
            }
        }
        w
    }
}

/// Which functional to apply.
#[derive(Clone, Debug, PartialEq)]
pub enum MomentFunctionalSpec<F> {
    ConstantTerm(ConstantTermWeight<F>),
    /// Normalized Beta moments with Vandermonde power `2τ`.
    JacobiBeta { alpha: F, beta: F, tau: u32 },
}

impl<F: Field> MomentFunctionalSpec<F> {
    /// Beta functional with `τ` given as a field element.
    pub fn jacobi_beta(alpha: F, beta: F, tau: &F) -> Result<Self> {
        Ok(MomentFunctionalSpec::JacobiBeta {
            alpha,
            beta,
            tau: positive_integer(tau)?,
        })
    }
}

fn positive_integer<F: Field>(tau: &F) -> Result<u32> {
    (1..=MAX_WEIGHT_EXPONENT)
        .find(|&k| F::from_int(k) == *tau)
        .map(|k| k as u32)
        .ok_or_else(|| {
            Error::NonPolynomialWeight(format!("τ = {tau} is not a positive integer <= {MAX_WEIGHT_EXPONENT}"))
        })
}

/// A functional with its weight precomputed for a fixed number of variables.
#[derive(Clone, Debug)]
pub struct MomentFunctional<F> {
    spec: MomentFunctionalSpec<F>,
    weight: LaurentPoly<F>,
}

impl<F: Field> MomentFunctional<F> {
    pub fn new(spec: MomentFunctionalSpec<F>, n: usize) -> Self {
        let weight = match &spec {
            MomentFunctionalSpec::ConstantTerm(w) => w.polynomial(n),
            MomentFunctionalSpec::JacobiBeta { tau, .. } => vandermonde_power(n, 2 * tau),
        };
        MomentFunctional { spec, weight }
    }

    pub fn weight(&self) -> &LaurentPoly<F> {
        &self.weight
    }

    pub fn apply(&self, p: &LaurentPoly<F>) -> Result<F> {
        assert_eq!(p.nvars(), self.weight.nvars(), "functional arity mismatch");
        match &self.spec {
            MomentFunctionalSpec::ConstantTerm(_) => Ok(constant_term_of_product(p, &self.weight)),
            MomentFunctionalSpec::JacobiBeta { alpha, beta, .. } => {
                if p.terms().any(|(e, _)| e.as_slice().iter().any(|&k| k < 0)) {
                    return Err(Error::NonPolynomialWeight(
                        "Beta moments need a polynomial integrand".into(),
                    ));
                }
                let max_deg = p.terms().flat_map(|(e, _)| e.as_slice().to_vec()).max().unwrap_or(0)
                    + self.weight.terms().flat_map(|(e, _)| e.as_slice().to_vec()).max().unwrap_or(0);
                let moments = beta_moments(alpha, beta, max_deg as usize)?;
                let mut acc = F::zero();
                for (ea, ca) in p.terms() {
                    for (eb, cb) in self.weight.terms() {
                        let mut term = ca.clone() * cb.clone();
                        for (x, y) in ea.as_slice().iter().zip(eb.as_slice()) {
                            term = term * moments[(x + y) as usize].clone();
                        }
                        acc = acc + term;
                    }
                }
                Ok(acc)
            }
        }
    }
}

/// `L(x^c) = (α+1)_c / (α+β+2)_c` for `c = 0..=max`.
fn beta_moments<F: Field>(alpha: &F, beta: &F, max: usize) -> Result<Vec<F>> {
    let a1 = alpha.clone() + F::one();
    let ab2 = alpha.clone() + beta.clone() + F::from_int(2);
    (0..=max)
        .map(|c| {
            checked_div(shifted_factorial(&a1, c), &shifted_factorial(&ab2, c), || {
                format!("(α+β+2)_{c} in a Beta moment")
            })
        })
        .collect()
}

/// `∏_{i<j} (x_i - x_j)^k`.
pub fn vandermonde_power<F: Field>(n: usize, k: u32) -> LaurentPoly<F> {
    let mut w = LaurentPoly::one(n);
    for i in 0..n {
        for j in (i + 1)..n {
            let d = LaurentPoly::var(n, i) - LaurentPoly::var(n, j);
            w = &w * &d.pow(k);
        }
    }
    w
}

/// Apply the functional described by `spec` to `p`.
pub fn apply_moment<F: Field>(spec: &MomentFunctionalSpec<F>, p: &LaurentPoly<F>) -> Result<F> {
    MomentFunctional::new(spec.clone(), p.nvars()).apply(p)
}
