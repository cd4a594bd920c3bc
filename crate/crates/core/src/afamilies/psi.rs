//! Tableau weights `ψ_T` and the chain-sum engine shared by all combinatorial formulas.

use std::collections::{BTreeMap, HashMap};
use std::ops::{Add, Mul};

use super::ATypeMode;
use crate::combinatorics::{horizontal_strip_inners, r_minus_c, Cell, Partition, ReverseTableau};
use crate::error::{Error, Result};
use crate::exactalg::{checked_pow, Field};

/// Memoized `q^i t^j`.
#[derive(Clone, Debug)]
pub(crate) struct Powers<F> {
    q: F,
    t: F,
    cache: HashMap<(i64, i64), F>,
}

impl<F: Field> Powers<F> {
    pub(crate) fn new(q: F, t: F) -> Self {
        Powers {
            q,
            t,
            cache: HashMap::new(),
        }
    }

    pub(crate) fn get(&mut self, i: i64, j: i64) -> Result<F> {
        if let Some(v) = self.cache.get(&(i, j)) {
            return Ok(v.clone());
        }
        let v = checked_pow(&self.q, i, "q")? * checked_pow(&self.t, j, "t")?;
        self.cache.insert((i, j), v.clone());
        Ok(v)
    }
}

/// Evaluates `ψ_{μ/ν}` for one parameter mode, caching by strip.
pub(crate) struct PsiWeights<F> {
    mode: PsiMode<F>,
    cache: HashMap<(Partition, Partition), F>,
}

enum PsiMode<F> {
    Q(Powers<F>),
    One(F),
}

impl<F: Field> PsiWeights<F> {
    pub(crate) fn new(mode: &ATypeMode<F>) -> Self {
        let mode = match mode {
            ATypeMode::QCase { q, t } => PsiMode::Q(Powers::new(q.clone(), t.clone())),
            ATypeMode::OneCase { tau } => PsiMode::One(tau.clone()),
        };
        PsiWeights {
            mode,
            cache: HashMap::new(),
        }
    }

    /// `ψ_{μ/ν} = ∏_{s ∈ (R\C)_{μ/ν}} b_ν(s) / b_μ(s)` for a horizontal strip `μ/ν`.
    pub(crate) fn strip(&mut self, outer: &Partition, inner: &Partition) -> Result<F> {
        let key = (outer.clone(), inner.clone());
        if let Some(v) = self.cache.get(&key) {
            return Ok(v.clone());
        }
        let cells = r_minus_c(outer, inner)?;
        let mut num = F::one();
        let mut den = F::one();
        for s in cells {
            let ai = inner.arm_leg(s)?;
            let ao = outer.arm_leg(s)?;
            let (bn_num, bn_den) = self.b(ai.arm, ai.leg)?;
            let (bo_num, bo_den) = self.b(ao.arm, ao.leg)?;
            if bn_den.is_zero() {
                return Err(self.vanishing(true, ai.arm, ai.leg, inner, s));
            }
            if bo_num.is_zero() {
                return Err(self.vanishing(false, ao.arm, ao.leg, outer, s));
            }
            num = num * bn_num * bo_den;
            den = den * bn_den * bo_num;
        }
        let v = num * den.inv().expect("factors checked nonzero");
        self.cache.insert(key, v.clone());
        Ok(v)
    }

    /// Numerator and denominator of `b_μ(s)` from arm `a` and leg `l`.
    fn b(&mut self, a: usize, l: usize) -> Result<(F, F)> {
        let (a, l) = (a as i64, l as i64);
        match &mut self.mode {
            PsiMode::Q(p) => Ok((
                F::one() - p.get(a, l + 1)?,
                F::one() - p.get(a + 1, l)?,
            )),
            PsiMode::One(tau) => Ok((
                F::from_int(a) + tau.clone() * F::from_int(l + 1),
                F::from_int(a + 1) + tau.clone() * F::from_int(l),
            )),
        }
    }

    fn vanishing(&self, denominator: bool, a: usize, l: usize, shape: &Partition, s: Cell) -> Error {
        let (ea, el) = if denominator { (a + 1, l) } else { (a, l + 1) };
        let f = match self.mode {
            PsiMode::Q(_) => format!("1 - q^{ea} t^{el}"),
            PsiMode::One(_) => format!("{ea} + {el}τ"),
        };
        Error::nongeneric(format!("{f} in b_{shape} at cell ({},{})", s.row, s.col))
    }

    /// `ψ_T` as the product over consecutive chain steps.
    pub(crate) fn tableau(&mut self, t: &ReverseTableau) -> Result<F> {
        let chain = t.chain();
        let mut acc = F::one();
        for w in chain.windows(2) {
            acc = acc * self.strip(&w[0], &w[1])?;
        }
        Ok(acc)
    }
}

/// `Σ_T ψ_T ∏_k F_k(λ^(k-1)/λ^(k))` evaluated as a sum over chains of horizontal strips.
///
/// `factor(k, outer, inner)` is the contribution of the cells carrying entry `k`.
pub(crate) fn chain_sum<F, V>(
    lambda: &Partition,
    n: usize,
    psi: &mut PsiWeights<F>,
    one: V,
    zero: V,
    mut factor: impl FnMut(usize, &Partition, &Partition) -> Result<V>,
    scale: impl Fn(V, &F) -> V,
) -> Result<V>
where
    F: Field,
    V: Clone + Add<Output = V> + Mul<Output = V>,
{
    if lambda.length() > n {
        return Ok(zero);
    }
    let mut level: BTreeMap<Partition, V> = BTreeMap::new();
    level.insert(lambda.clone(), one);
    for k in 1..=n {
        let mut next: BTreeMap<Partition, V> = BTreeMap::new();
        for (outer, val) in &level {
            for inner in horizontal_strip_inners(outer, n - k) {
                let w = psi.strip(outer, &inner)?;
                let term = scale(val.clone() * factor(k, outer, &inner)?, &w);
                match next.remove(&inner) {
                    Some(prev) => next.insert(inner, prev + term),
                    None => next.insert(inner, term),
                };
            }
        }
        level = next;
    }
    Ok(level.remove(&Partition::empty()).unwrap_or(zero))
}

/// Cells of `outer - inner`.
pub(crate) fn strip_cells<'a>(outer: &'a Partition, inner: &'a Partition) -> impl Iterator<Item = Cell> + 'a {
    outer.cells().filter(move |&s| !inner.contains_cell(s))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::enumerate_reverse_tableaux;
    use crate::exactalg::{q_pochhammer, rat, Rational};

    #[test]
    fn canonical_tableau_has_unit_weight() {
        let mode = ATypeMode::QCase { q: rat(2, 7), t: rat(3, 5) };
        let mut psi = PsiWeights::new(&mode);
        for parts in [&[3usize, 1][..], &[2, 2, 1], &[4]] {
            let l = Partition::from_slice(parts);
            let t = ReverseTableau::canonical(&l, 3).unwrap();
            assert_eq!(psi.tableau(&t).unwrap(), rat(1, 1));
        }
    }

    #[test]
    fn one_row_weights_match_closed_product() {
        let (q, t) = (rat(2, 7), rat(3, 5));
        let mode = ATypeMode::QCase { q: q.clone(), t: t.clone() };
        let mut psi = PsiWeights::new(&mode);
        let m = 4usize;
        for (k, tab) in enumerate_reverse_tableaux(&Partition::from_slice(&[m]), 2).iter().enumerate() {
            let qm = q.powi(-(m as i64)).unwrap();
            let num = q_pochhammer(&t, &q, k) * q_pochhammer(&qm, &q, k);
            let c = q.powi(1 - m as i64).unwrap() * t.inv().unwrap();
            let den = q_pochhammer(&q, &q, k) * q_pochhammer(&c, &q, k);
            let want: Rational = num / den * (q.clone() / t.clone()).powi(k as i64).unwrap();
            assert_eq!(psi.tableau(tab).unwrap(), want);
        }
    }
}
