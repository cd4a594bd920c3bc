//! Sparse multivariate Laurent polynomials over an exact field.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::field::{checked_pow, Field};
use crate::error::{Error, Result};

/// Exponent vector, one slot per variable; entries may be negative.
///
/// Ordered graded-lexicographically: total degree first, then componentwise.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Exponent(pub Vec<i32>);

impl Exponent {
    pub fn zero(nvars: usize) -> Self {
        Exponent(vec![0; nvars])
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().map(|&e| e as i64).sum()
    }

    pub fn as_slice(&self) -> &[i32] {
        &self.0
    }

    fn add(&self, other: &Exponent) -> Exponent {
        Exponent(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Exponent {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Exponent {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Map from exponent vectors to nonzero coefficients.
#[derive(Clone, PartialEq, Debug)]
pub struct LaurentPoly<F> {
    nvars: usize,
    terms: BTreeMap<Exponent, F>,
}

impl<F: Field> LaurentPoly<F> {
    pub fn zero(nvars: usize) -> Self {
        LaurentPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, F::one())
    }

    pub fn constant(nvars: usize, c: F) -> Self {
        Self::monomial(Exponent::zero(nvars), c)
    }

    pub fn monomial(exp: Exponent, c: F) -> Self {
        let nvars = exp.0.len();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        LaurentPoly { nvars, terms }
    }

    /// `c * x_i^e` (0-based variable index).
    pub fn var_power(nvars: usize, i: usize, e: i32, c: F) -> Self {
        let mut exp = vec![0; nvars];
        exp[i] = e;
        Self::monomial(Exponent(exp), c)
    }

    /// The variable `x_i` (0-based).
    pub fn var(nvars: usize, i: usize) -> Self {
        Self::var_power(nvars, i, 1, F::one())
    }

    /// Collect terms, summing repeated exponents and dropping zeros.
    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Exponent, F)>) -> Self {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.0.len(), nvars, "exponent length mismatch");
            p.add_term(e, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending graded-lexicographic order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponent, &F)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exp: &[i32]) -> F {
        self.terms
            .get(&Exponent(exp.to_vec()))
            .cloned()
            .unwrap_or_else(F::zero)
    }

    pub fn constant_term(&self) -> F {
        self.coefficient(&vec![0; self.nvars])
    }

    pub(crate) fn add_term(&mut self, exp: Exponent, c: F) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exp) {
            Some(v) => {
                let old = std::mem::replace(v, F::zero());
                let sum = old + c;
                if sum.is_zero() {
                    self.terms.remove(&exp);
                } else {
                    *v = sum;
                }
            }
            None => {
                self.terms.insert(exp, c);
            }
        }
    }

    /// Highest total degree of a monomial, `None` for zero.
    pub fn degree(&self) -> Option<i64> {
        self.terms.keys().map(Exponent::degree).max()
    }

    /// The part made of monomials of total degree `d`.
    pub fn homogeneous_part(&self, d: i64) -> Self {
        LaurentPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.degree() == d)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// Homogeneous part of highest degree.
    pub fn top_part(&self) -> Self {
        match self.degree() {
            Some(d) => self.homogeneous_part(d),
            None => self.clone(),
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Exponent::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        LaurentPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, v)| (e.clone(), v.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Evaluate at a point of `F^nvars`.
    pub fn evaluate(&self, point: &[F]) -> Result<F> {
        assert_eq!(point.len(), self.nvars, "point dimension mismatch");
        let mut cache: Vec<BTreeMap<i32, F>> = vec![BTreeMap::new(); self.nvars];
        let mut acc = F::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (i, &k) in e.0.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let v = match cache[i].get(&k) {
                    Some(v) => v.clone(),
                    None => {
                        let v = checked_pow(&point[i], k as i64, &format!("x_{}", i + 1))?;
                        cache[i].insert(k, v.clone());
                        v
                    }
                };
                term = term * v;
            }
            acc = acc + term;
        }
        Ok(acc)
    }

    /// Replace each `x_i` by `images[i]`.
    ///
    /// A negative power of `x_i` is only allowed when `images[i]` is a single monomial.
    pub fn substitute(&self, images: &[LaurentPoly<F>]) -> Result<LaurentPoly<F>> {
        assert_eq!(images.len(), self.nvars, "substitution arity mismatch");
        let m = images.first().map_or(0, |p| p.nvars);
        let inverses: Vec<Option<LaurentPoly<F>>> = images.iter().map(|p| p.monomial_inverse()).collect();
        let mut powers: Vec<BTreeMap<i32, LaurentPoly<F>>> = vec![BTreeMap::new(); self.nvars];
        let mut out = LaurentPoly::zero(m);
        for (e, c) in &self.terms {
            let mut term = LaurentPoly::constant(m, c.clone());
            for (i, &k) in e.0.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                if !powers[i].contains_key(&k) {
                    let base = if k > 0 {
                        images[i].clone()
                    } else {
                        inverses[i].clone().ok_or_else(|| {
                            Error::Incompatible(format!(
                                "negative power of x_{} substituted by a non-monomial",
                                i + 1
                            ))
                        })?
                    };
                    powers[i].insert(k, base.pow(k.unsigned_abs()));
                }
                term = &term * &powers[i][&k];
            }
            out = out + term;
        }
        Ok(out)
    }

    fn monomial_inverse(&self) -> Option<LaurentPoly<F>> {
        if self.terms.len() != 1 {
            return None;
        }
        let (e, c) = self.terms.iter().next()?;
        Some(LaurentPoly::monomial(
            Exponent(e.0.iter().map(|x| -x).collect()),
            c.inv()?,
        ))
    }

    /// `p(x_1^{-1}, ..., x_n^{-1})`.
    pub fn invert_vars(&self) -> Self {
        LaurentPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (Exponent(e.0.iter().map(|x| -x).collect()), c.clone()))
                .collect(),
        }
    }

    /// `p(c x)`: each coefficient of `x^e` multiplied by `c^{|e|}`.
    pub fn scale_vars(&self, c: &F) -> Result<Self> {
        let mut out = Self::zero(self.nvars);
        for (e, v) in &self.terms {
            let f = checked_pow(c, e.degree(), "scale factor")?;
            out.add_term(e.clone(), v.clone() * f);
        }
        Ok(out)
    }

    /// Permute variables: variable `i` of `self` becomes variable `perm[i]`.
    pub fn permute_vars(&self, perm: &[usize]) -> Self {
        LaurentPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut ne = vec![0; self.nvars];
                    for (i, &k) in e.0.iter().enumerate() {
                        ne[perm[i]] = k;
                    }
                    (Exponent(ne), c.clone())
                })
                .collect(),
        }
    }

    pub fn map_coeffs<G: Field>(&self, mut f: impl FnMut(&F) -> G) -> LaurentPoly<G> {
        LaurentPoly::from_terms(self.nvars, self.terms.iter().map(|(e, c)| (e.clone(), f(c))))
    }

    pub fn try_map_coeffs<G: Field>(
        &self,
        mut f: impl FnMut(&F) -> Result<G>,
    ) -> Result<LaurentPoly<G>> {
        let mut out = LaurentPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), f(c)?);
        }
        Ok(out)
    }

    /// Invariant under all permutations of the variables.
    pub fn is_symmetric(&self) -> bool {
        (0..self.nvars.saturating_sub(1)).all(|i| {
            let mut perm: Vec<usize> = (0..self.nvars).collect();
            perm.swap(i, i + 1);
            self.permute_vars(&perm) == *self
        })
    }

    /// Invariant under permutations and under inverting any single variable.
    pub fn is_hyperoctahedral_invariant(&self) -> bool {
        self.is_symmetric()
            && self.terms.iter().all(|(e, c)| {
                let mut ne = e.clone();
                ne.0[0] = -ne.0[0];
                self.terms.get(&ne) == Some(c)
            })
    }

    /// Invariant under `x_i -> -x_i` for every `i` (all exponents even).
    pub fn is_sign_invariant(&self) -> bool {
        self.terms.keys().all(|e| e.0.iter().all(|k| k % 2 == 0))
    }

    /// Multiply by `c * x^e`.
    pub fn mul_monomial(&self, exp: &Exponent, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        LaurentPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, v)| (e.add(exp), v.clone() * c.clone()))
                .collect(),
        }
    }
}

impl<F: Field> Add<&LaurentPoly<F>> for &LaurentPoly<F> {
    type Output = LaurentPoly<F>;
    fn add(self, rhs: &LaurentPoly<F>) -> LaurentPoly<F> {
        self.clone() + rhs.clone()
    }
}

impl<F: Field> Add for LaurentPoly<F> {
    type Output = LaurentPoly<F>;
    fn add(self, rhs: LaurentPoly<F>) -> LaurentPoly<F> {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let (mut big, small) = if self.terms.len() >= rhs.terms.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        for (e, c) in small.terms {
            big.add_term(e, c);
        }
        big
    }
}

impl<F: Field> Neg for LaurentPoly<F> {
    type Output = LaurentPoly<F>;
    fn neg(self) -> LaurentPoly<F> {
        LaurentPoly {
            nvars: self.nvars,
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl<F: Field> Sub for LaurentPoly<F> {
    type Output = LaurentPoly<F>;
    fn sub(self, rhs: LaurentPoly<F>) -> LaurentPoly<F> {
        self + (-rhs)
    }
}

impl<F: Field> Sub<&LaurentPoly<F>> for &LaurentPoly<F> {
    type Output = LaurentPoly<F>;
    fn sub(self, rhs: &LaurentPoly<F>) -> LaurentPoly<F> {
        self.clone() - rhs.clone()
    }
}

impl<F: Field> Mul<&LaurentPoly<F>> for &LaurentPoly<F> {
    type Output = LaurentPoly<F>;
    fn mul(self, rhs: &LaurentPoly<F>) -> LaurentPoly<F> {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = LaurentPoly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1.add(e2), c1.clone() * c2.clone());
            }
        }
        out
    }
}

impl<F: Field> Mul for LaurentPoly<F> {
    type Output = LaurentPoly<F>;
    fn mul(self, rhs: LaurentPoly<F>) -> LaurentPoly<F> {
        &self * &rhs
    }
}

/// Constant term of `a * b` without forming the full product.
pub fn constant_term_of_product<F: Field>(a: &LaurentPoly<F>, b: &LaurentPoly<F>) -> F {
    let (small, big) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    let mut acc = F::zero();
    for (e, c) in small.terms() {
        let neg: Vec<i32> = e.0.iter().map(|x| -x).collect();
        if let Some(d) = big.terms.get(&Exponent(neg)) {
            acc = acc + c.clone() * d.clone();
        }
    }
    acc
}

impl<F: Field> fmt::Display for LaurentPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})")?;
            for (i, &p) in e.0.iter().enumerate() {
                match p {
                    0 => {}
                    1 => write!(f, "*x{}", i + 1)?,
                    _ => write!(f, "*x{}^{}", i + 1, p)?,
                }
            }
        }
        Ok(())
    }
}
