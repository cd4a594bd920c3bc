//! Exact coefficient fields.
//!
//! Every identity in this crate is checked over an exact field, so all
//! comparisons are plain equality. Two instances are provided: big
//! rationals and univariate rational functions [`RatFunc`](super::RatFunc).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational number.
pub type Rational = BigRational;

/// An exact field with decidable equality and a canonical representation.
pub trait Field:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_int(n: i64) -> Self;
    fn from_rational(r: &Rational) -> Self;

    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// Integer power; negative exponents need an invertible base.
    fn powi(&self, e: i64) -> Option<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut k = e.unsigned_abs();
        let mut acc = Self::one();
        let mut sq = base;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc * sq.clone();
            }
            k >>= 1;
            if k > 0 {
                sq = sq.clone() * sq;
            }
        }
        Some(acc)
    }

    /// Parse the canonical serialization produced by `Display`.
    fn parse_canonical(s: &str) -> Result<Self>;
}

/// `num / den`, reporting `factor` when the denominator vanishes.
pub fn checked_div<F: Field>(num: F, den: &F, factor: impl FnOnce() -> String) -> Result<F> {
    match den.inv() {
        Some(i) => Ok(num * i),
        None => Err(Error::nongeneric(factor())),
    }
}

/// `base^e`, reporting a zero base raised to a negative power.
pub fn checked_pow<F: Field>(base: &F, e: i64, what: &str) -> Result<F> {
    base.powi(e)
        .ok_or_else(|| Error::nongeneric(format!("{what} = 0 raised to {e}")))
}

impl Field for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn from_int(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn parse_canonical(s: &str) -> Result<Self> {
        parse_rational(s)
    }
}

/// Parse `"p"` or `"p/q"` with integer `p`, `q`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational literal: {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}

/// Shorthand for the rational `p/q`.
pub fn rat(p: i64, q: i64) -> Rational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}
