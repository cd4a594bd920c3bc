//! Symmetrized monomials and monomial-basis expansions.

use std::collections::BTreeSet;

use super::field::Field;
use super::laurent::{Exponent, LaurentPoly};
use crate::combinatorics::Partition;
use crate::error::{Error, Result};

/// `m_λ` (orbit under `S_n`) or, with `signed_group`, `m̃_λ` (orbit under `S_n ⋉ Z_2^n`
/// acting by exponent negation). Every orbit monomial has coefficient 1.
pub fn symmetrized_monomial<F: Field>(lambda: &Partition, n: usize, signed_group: bool) -> LaurentPoly<F> {
    LaurentPoly::from_terms(
        n,
        monomial_orbit(lambda, n, signed_group)
            .into_iter()
            .map(|e| (e, F::one())),
    )
}

/// Distinct exponent vectors in the orbit of `λ`.
pub fn monomial_orbit(lambda: &Partition, n: usize, signed_group: bool) -> BTreeSet<Exponent> {
    let base: Vec<i32> = lambda.padded(n).iter().map(|&p| p as i32).collect();
    let mut out = BTreeSet::new();
    let mut perm = base.clone();
    perm.sort_unstable();
    loop {
        if signed_group {
            let nonzero: Vec<usize> = (0..n).filter(|&i| perm[i] != 0).collect();
            for mask in 0u32..(1 << nonzero.len()) {
                let mut e = perm.clone();
                for (b, &i) in nonzero.iter().enumerate() {
                    if mask >> b & 1 == 1 {
                        e[i] = -e[i];
                    }
                }
                out.insert(Exponent(e));
            }
        } else {
            out.insert(Exponent(perm.clone()));
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    out
}

fn next_permutation(v: &mut [i32]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).expect("pivot exists");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Coefficients in the `m` (or `m̃`) basis, ordered by the partition.
///
/// Fails if `p` is not invariant under the corresponding group.
pub fn monomial_expansion<F: Field>(p: &LaurentPoly<F>, signed_group: bool) -> Result<Vec<(Partition, F)>> {
    let invariant = if signed_group {
        p.is_hyperoctahedral_invariant()
    } else {
        p.is_symmetric()
    };
    if !invariant {
        return Err(Error::Incompatible(
            "expansion requested for a non-invariant polynomial".into(),
        ));
    }
    let mut out: Vec<(Partition, F)> = p
        .terms()
        .filter(|(e, _)| {
            let s = e.as_slice();
            s.iter().all(|&k| k >= 0) && s.windows(2).all(|w| w[0] >= w[1])
        })
        .map(|(e, c)| {
            let parts: Vec<usize> = e.as_slice().iter().map(|&k| k as usize).collect();
            (Partition::new(parts).expect("dominant exponent"), c.clone())
        })
        .collect();
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(out)
}

/// Support of the expansion lies in `{μ ≤ λ}` and the coefficient of `λ` is one.
pub fn is_triangular_monic<F: Field>(expansion: &[(Partition, F)], lambda: &Partition, n: usize) -> bool {
    let support_ok = expansion.iter().all(|(mu, _)| mu.is_dominated_by(lambda, n));
    let lead = expansion.iter().find(|(mu, _)| mu == lambda);
    support_ok && lead.is_some_and(|(_, c)| c.is_one())
}

/// `p(x_1^2, ..., x_n^2)`.
pub fn square_variables<F: Field>(p: &LaurentPoly<F>) -> LaurentPoly<F> {
    LaurentPoly::from_terms(
        p.nvars(),
        p.terms()
            .map(|(e, c)| (Exponent(e.as_slice().iter().map(|k| 2 * k).collect()), c.clone())),
    )
}
