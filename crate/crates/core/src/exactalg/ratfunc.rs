//! The rational function field ℚ(s).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::field::{Field, Rational};
use super::upoly::UPoly;
use crate::error::{Error, Result};

/// Reduced fraction `num/den` with `den` monic and coprime to `num`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFunc {
    num: UPoly,
    den: UPoly,
}

impl RatFunc {
    /// Build and canonicalize `num/den`; `None` if `den` is zero.
    pub fn new(num: UPoly, den: UPoly) -> Option<RatFunc> {
        if den.is_zero() {
            return None;
        }
        if num.is_zero() {
            return Some(RatFunc::from_poly(UPoly::zero()));
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.exact_div(&g), den.exact_div(&g))
        };
        Some(Self::normalize_lc(num, den))
    }

    fn normalize_lc(num: UPoly, den: UPoly) -> RatFunc {
        let lc = den.leading();
        if One::is_one(&lc) {
            RatFunc { num, den }
        } else {
            let inv = lc.recip();
            RatFunc {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn from_poly(p: UPoly) -> RatFunc {
        RatFunc {
            num: p,
            den: UPoly::one(),
        }
    }

    /// The symbol `s`.
    pub fn s() -> RatFunc {
        Self::from_poly(UPoly::monomial(<Rational as One>::one(), 1))
    }

    /// `s^k` for any integer `k`.
    pub fn s_pow(k: i64) -> RatFunc {
        let m = UPoly::monomial(<Rational as One>::one(), k.unsigned_abs() as usize);
        if k >= 0 {
            Self::from_poly(m)
        } else {
            RatFunc {
                num: UPoly::one(),
                den: m,
            }
        }
    }

    pub fn num(&self) -> &UPoly {
        &self.num
    }

    pub fn den(&self) -> &UPoly {
        &self.den
    }

    /// Value at a rational point, `None` at a pole.
    pub fn eval(&self, x: &Rational) -> Option<Rational> {
        let d = self.den.eval(x);
        if Zero::is_zero(&d) {
            None
        } else {
            Some(self.num.eval(x) / d)
        }
    }

    /// `deg(num) - deg(den)`; `None` for zero.
    pub fn degree_difference(&self) -> Option<i64> {
        let dn = self.num.degree()? as i64;
        Some(dn - self.den.degree().unwrap_or(0) as i64)
    }

    /// Constant value if the function does not depend on `s`.
    pub fn as_constant(&self) -> Option<Rational> {
        if self.num.is_constant() && self.den.is_one() {
            Some(self.num.leading())
        } else {
            None
        }
    }

    /// Integer-coefficient numerator and denominator with positive leading denominator
    /// and no common integer content.
    pub fn integer_form(&self) -> (Vec<BigInt>, Vec<BigInt>) {
        let (ln, n) = self.num.integer_coeffs();
        let (ld, d) = self.den.integer_coeffs();
        let mut n: Vec<BigInt> = n.into_iter().map(|c| c * &ld).collect();
        let mut d: Vec<BigInt> = d.into_iter().map(|c| c * &ln).collect();
        let mut g = BigInt::zero();
        for c in n.iter().chain(d.iter()) {
            g = g.gcd(c);
        }
        if d.last().is_some_and(|c| c.is_negative()) {
            g = -g;
        }
        if !g.is_zero() && !g.is_one() {
            n.iter_mut().for_each(|c| *c = &*c / &g);
            d.iter_mut().for_each(|c| *c = &*c / &g);
        }
        (n, d)
    }
}

impl Add for RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: RatFunc) -> RatFunc {
        if self.num.is_zero() {
            return rhs;
        }
        if rhs.num.is_zero() {
            return self;
        }
        if self.den == rhs.den {
            let num = self.num + rhs.num;
            return RatFunc::new(num, self.den).expect("nonzero denominator");
        }
        let g = self.den.gcd(&rhs.den);
        if g.is_one() {
            let num = &self.num * &rhs.den + &rhs.num * &self.den;
            let den = &self.den * &rhs.den;
            // coprime denominators leave nothing to cancel
            return RatFunc::normalize_lc(num, den);
        }
        let d1 = self.den.exact_div(&g);
        let d2 = rhs.den.exact_div(&g);
        let num = &self.num * &d2 + &rhs.num * &d1;
        if num.is_zero() {
            return RatFunc::from_poly(UPoly::zero());
        }
        let den = &self.den * &d2;
        let h = num.gcd(&g);
        if h.is_one() {
            RatFunc::normalize_lc(num, den)
        } else {
            RatFunc::normalize_lc(num.exact_div(&h), den.exact_div(&h))
        }
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -self.num,
            den: self.den,
        }
    }
}

impl Sub for RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: RatFunc) -> RatFunc {
        self + (-rhs)
    }
}

impl Mul for RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: RatFunc) -> RatFunc {
        if self.num.is_zero() || rhs.num.is_zero() {
            return RatFunc::from_poly(UPoly::zero());
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFunc::from_poly(&self.num * &rhs.num);
        }
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let (n1, d2) = if g1.is_one() {
            (self.num, rhs.den)
        } else {
            (self.num.exact_div(&g1), rhs.den.exact_div(&g1))
        };
        let (n2, d1) = if g2.is_one() {
            (rhs.num, self.den)
        } else {
            (rhs.num.exact_div(&g2), self.den.exact_div(&g2))
        };
        RatFunc::normalize_lc(&n1 * &n2, &d1 * &d2)
    }
}

impl Field for RatFunc {
    fn zero() -> Self {
        RatFunc::from_poly(UPoly::zero())
    }
    fn one() -> Self {
        RatFunc::from_poly(UPoly::one())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn from_int(n: i64) -> Self {
        RatFunc::from_poly(UPoly::constant(BigRational::from_integer(BigInt::from(n))))
    }
    fn from_rational(r: &Rational) -> Self {
        RatFunc::from_poly(UPoly::constant(r.clone()))
    }
    fn inv(&self) -> Option<Self> {
        if self.num.is_zero() {
            None
        } else {
            Some(RatFunc::normalize_lc(self.den.clone(), self.num.clone()))
        }
    }
    fn parse_canonical(s: &str) -> Result<Self> {
        let t = s.trim();
        if let Some(rest) = t.strip_prefix('(') {
            let (num, tail) = rest
                .split_once(")/(")
                .ok_or_else(|| Error::Parse(format!("expected (num)/(den): {s:?}")))?;
            let den = tail
                .strip_suffix(')')
                .ok_or_else(|| Error::Parse(format!("unterminated denominator: {s:?}")))?;
            RatFunc::new(UPoly::parse(num)?, UPoly::parse(den)?)
                .ok_or_else(|| Error::Parse(format!("zero denominator: {s:?}")))
        } else {
            UPoly::parse(t).map(RatFunc::from_poly)
        }
    }
}

impl fmt::Display for RatFunc {
    /// `(num)/(den)` with expanded integer coefficients.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (n, d) = self.integer_form();
        write!(f, "(")?;
        UPoly::fmt_terms(&n, f)?;
        write!(f, ")/(")?;
        UPoly::fmt_terms(&d, f)?;
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::field::rat;

    fn lin(c0: i64, c1: i64) -> UPoly {
        UPoly::from_coeffs(vec![rat(c0, 1), rat(c1, 1)])
    }

    #[test]
    fn canonical_form_cancels_common_factor() {
        // (s^2 - 1)/(2s - 2) = (s + 1)/2
        let a = RatFunc::new(&lin(-1, 1) * &lin(1, 1), lin(-2, 2)).unwrap();
        let b = RatFunc::new(lin(1, 1), UPoly::constant(rat(2, 1))).unwrap();
        assert_eq!(a, b);
        assert!(a.den().is_one());
    }

    #[test]
    fn sum_of_fractions() {
        // 1/(s-1) - 1/(s+1) = 2/(s^2-1)
        let a = RatFunc::new(UPoly::one(), lin(-1, 1)).unwrap();
        let b = RatFunc::new(UPoly::one(), lin(1, 1)).unwrap();
        let expect = RatFunc::new(UPoly::constant(rat(2, 1)), &lin(-1, 1) * &lin(1, 1)).unwrap();
        assert_eq!(a - b, expect);
    }

    #[test]
    fn display_and_parse_round_trip() {
        let a = RatFunc::new(lin(1, 3), lin(2, 4)).unwrap();
        let shown = a.to_string();
        assert_eq!(shown, "(3*s + 1)/(4*s + 2)");
        assert_eq!(RatFunc::parse_canonical(&shown).unwrap(), a);
    }

    #[test]
    fn zero_denominator_rejected() {
        assert!(RatFunc::new(UPoly::one(), UPoly::zero()).is_none());
        assert!(RatFunc::zero().inv().is_none());
    }
}
