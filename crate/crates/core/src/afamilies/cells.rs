//! Per-cell factors of the combinatorial formulas and the generic tableau sums built on them.

use std::collections::BTreeMap;

use super::psi::{chain_sum, strip_cells, Powers, PsiWeights};
use super::ATypeMode;
use crate::combinatorics::{Cell, Partition};
use crate::error::{Error, Result};
use crate::exactalg::{Exponent, Field, LaurentPoly};

/// The factor attached to a cell `s` with entry `k`, as a Laurent polynomial in `x_k`.
///
/// Notation: `a' = col - 1`, `l' = row - 1`, `e = n - k - l' ≥ 0`.
pub(crate) enum CellRule<F> {
    /// `x`
    Monomial,
    /// `x - q^{a'} t^e`
    ShiftedQ { powers: Powers<F> },
    /// `x - a' - τ e`
    ShiftedJack { tau: F },
    /// `(x - c)(1 - c^{-1} x^{-1}) = x + x^{-1} - c - c^{-1}` with `c = q^{a'} t^e a`
    BcQ { powers: Powers<F>, a: F },
    /// `x^2 - (a' + τ e + α)^2`
    BcJack { tau: F, alpha: F },
}

/// Univariate Laurent polynomial as exponent → coefficient.
type Uni<F> = BTreeMap<i32, F>;

impl<F: Field> CellRule<F> {
    fn factor(&mut self, n: usize, k: usize, s: Cell) -> Result<Uni<F>> {
        let ap = (s.col - 1) as i64;
        let e = n as i64 - k as i64 - (s.row - 1) as i64;
        debug_assert!(e >= 0, "entry too large for its row");
        let mut u = Uni::new();
        match self {
            CellRule::Monomial => {
                u.insert(1, F::one());
            }
            CellRule::ShiftedQ { powers } => {
                u.insert(1, F::one());
                u.insert(0, -powers.get(ap, e)?);
            }
            CellRule::ShiftedJack { tau } => {
                u.insert(1, F::one());
                u.insert(0, -(F::from_int(ap) + tau.clone() * F::from_int(e)));
            }
            CellRule::BcQ { powers, a } => {
                let c = powers.get(ap, e)? * a.clone();
                let ci = c.inv().ok_or_else(|| {
                    Error::nongeneric(format!("q^{ap} t^{e} a = 0 at cell ({},{})", s.row, s.col))
                })?;
                u.insert(1, F::one());
                u.insert(-1, F::one());
                u.insert(0, -(c + ci));
            }
            CellRule::BcJack { tau, alpha } => {
                let c = F::from_int(ap) + tau.clone() * F::from_int(e) + alpha.clone();
                u.insert(2, F::one());
                u.insert(0, -(c.clone() * c));
            }
        }
        u.retain(|_, c| !c.is_zero());
        Ok(u)
    }

    /// Product of the factors of the cells of `outer - inner`, all with entry `k`.
    fn strip_factor(&mut self, n: usize, k: usize, outer: &Partition, inner: &Partition) -> Result<Uni<F>> {
        let mut acc = Uni::new();
        acc.insert(0, F::one());
        for s in strip_cells(outer, inner) {
            let f = self.factor(n, k, s)?;
            let mut next = Uni::new();
            for (ea, ca) in &acc {
                for (eb, cb) in &f {
                    let c = ca.clone() * cb.clone();
                    let slot = next.entry(ea + eb).or_insert_with(F::zero);
                    *slot = std::mem::replace(slot, F::zero()) + c;
                }
            }
            next.retain(|_, c| !c.is_zero());
            acc = next;
        }
        Ok(acc)
    }
}

fn embed<F: Field>(u: Uni<F>, n: usize, var: usize) -> LaurentPoly<F> {
    LaurentPoly::from_terms(
        n,
        u.into_iter().map(|(e, c)| {
            let mut v = vec![0; n];
            v[var] = e;
            (Exponent(v), c)
        }),
    )
}

fn eval_uni<F: Field>(u: &Uni<F>, x: &F) -> Result<F> {
    let mut acc = F::zero();
    for (e, c) in u {
        acc = acc + c.clone() * crate::exactalg::checked_pow(x, *e as i64, "x")?;
    }
    Ok(acc)
}

/// `Σ_T ψ_T ∏_s f(x_{T(s)})` as a Laurent polynomial in `n` variables.
pub(crate) fn tableau_polynomial<F: Field>(
    lambda: &Partition,
    n: usize,
    mode: &ATypeMode<F>,
    mut rule: CellRule<F>,
) -> Result<LaurentPoly<F>> {
    let mut psi = PsiWeights::new(mode);
    chain_sum(
        lambda,
        n,
        &mut psi,
        LaurentPoly::one(n),
        LaurentPoly::zero(n),
        |k, outer, inner| Ok(embed(rule.strip_factor(n, k, outer, inner)?, n, k - 1)),
        |v, w| v.scale(w),
    )
}

/// The same sum evaluated at a point, without building the polynomial.
pub(crate) fn tableau_value<F: Field>(
    lambda: &Partition,
    n: usize,
    mode: &ATypeMode<F>,
    mut rule: CellRule<F>,
    point: &[F],
) -> Result<F> {
    assert_eq!(point.len(), n, "point dimension mismatch");
    let mut psi = PsiWeights::new(mode);
    chain_sum(
        lambda,
        n,
        &mut psi,
        F::one(),
        F::zero(),
        |k, outer, inner| eval_uni(&rule.strip_factor(n, k, outer, inner)?, &point[k - 1]),
        |v, w| v * w.clone(),
    )
}
