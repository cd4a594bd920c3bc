//! Exact limits of rational functions in `s`.

use num_traits::Zero;

use super::field::Rational;
use super::laurent::LaurentPoly;
use super::ratfunc::RatFunc;
use crate::error::{Error, Result};

/// Where and how to take the limit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LimitMode {
    /// Value at `s = 1` of the reduced fraction.
    AtOne,
    /// Ratio of leading coefficients.
    Leading,
    /// `lim_{s→∞} s^{-d} r(s)`; requires `deg num - deg den ≤ d`.
    AtInfinityScaled(i64),
}

pub fn rational_limit(r: &RatFunc, mode: LimitMode) -> Result<Rational> {
    match mode {
        LimitMode::AtOne => r
            .eval(&Rational::from_integer(1.into()))
            .ok_or_else(|| Error::PoleAtOne(r.to_string())),
        LimitMode::Leading => {
            if r.num().is_zero() {
                Ok(Rational::zero())
            } else {
                Ok(r.num().leading() / r.den().leading())
            }
        }
        LimitMode::AtInfinityScaled(d) => match r.degree_difference() {
            None => Ok(Rational::zero()),
            Some(diff) if diff > d => Err(Error::DegreeBound(format!(
                "degree difference {diff} exceeds {d} in {r}"
            ))),
            Some(diff) if diff == d => Ok(r.num().leading() / r.den().leading()),
            Some(_) => Ok(Rational::zero()),
        },
    }
}

/// Coefficientwise limit of a Laurent polynomial over `ℚ(s)`.
pub fn laurent_limit(p: &LaurentPoly<RatFunc>, mode: LimitMode) -> Result<LaurentPoly<Rational>> {
    p.try_map_coeffs(|c| rational_limit(c, mode))
}
