//! Dense univariate polynomials over the rationals in the symbol `s`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::field::Rational;
use crate::error::{Error, Result};

/// Coefficients stored from the constant term upward, never with a trailing zero.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct UPoly {
    coeffs: Vec<Rational>,
}

impl UPoly {
    pub fn zero() -> Self {
        UPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `s^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        UPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let lc = self.leading();
        self.scale(&lc.recip())
    }

    /// Quotient and remainder of Euclidean division.
    pub fn div_rem(&self, d: &UPoly) -> (UPoly, UPoly) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let dd = d.coeffs.len() - 1;
        if self.coeffs.len() <= dd {
            return (UPoly::zero(), self.clone());
        }
        let lc_inv = d.leading().recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] * &lc_inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[k + j] -= &c * dc;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (UPoly::from_coeffs(quot), UPoly::from_coeffs(rem))
    }

    /// Exact quotient; panics if `d` does not divide `self`.
    pub fn exact_div(&self, d: &UPoly) -> UPoly {
        let (q, r) = self.div_rem(d);
        debug_assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic greatest common divisor (zero only when both inputs are zero).
    pub fn gcd(&self, other: &UPoly) -> UPoly {
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        if self.is_constant() || other.is_constant() {
            return UPoly::one();
        }
        if self == other {
            return self.monic();
        }
        let mut a = IntPoly::primitive_of(self);
        let mut b = IntPoly::primitive_of(other);
        if a.deg() < b.deg() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b);
            a = b;
            b = r.primitive();
        }
        a.to_upoly().monic()
    }

    pub fn derivative(&self) -> UPoly {
        UPoly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigRational::from_integer(BigInt::from(k)))
                .collect(),
        )
    }

    /// `(self, m)` with the root `s = 1` of multiplicity `m` divided out.
    pub fn split_at_one(&self) -> (UPoly, usize) {
        let lin = UPoly::from_coeffs(vec![-Rational::one(), Rational::one()]);
        let mut p = self.clone();
        let mut m = 0;
        while !p.is_zero() && p.eval(&Rational::one()).is_zero() {
            p = p.exact_div(&lin);
            m += 1;
        }
        (p, m)
    }

    /// Common denominator of the coefficients together with the scaled integer coefficients.
    pub fn integer_coeffs(&self) -> (BigInt, Vec<BigInt>) {
        let mut l = BigInt::one();
        for c in &self.coeffs {
            l = l.lcm(c.denom());
        }
        let ints = self
            .coeffs
            .iter()
            .map(|c| (c * BigRational::from_integer(l.clone())).to_integer())
            .collect();
        (l, ints)
    }

    /// Render as a polynomial in `s` with the given coefficients (highest power first).
    pub(crate) fn fmt_terms(coeffs: &[BigInt], f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let mut any = false;
        for (k, c) in coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            any = true;
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            match (k, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (1, true) => write!(f, "s")?,
                (1, false) => write!(f, "{a}*s")?,
                (_, true) => write!(f, "s^{k}")?,
                (_, false) => write!(f, "{a}*s^{k}")?,
            }
        }
        if !any {
            write!(f, "0")?;
        }
        Ok(())
    }

    /// Parse a sum of terms `c`, `c*s`, `c*s^k`, `s^k` with integer or rational `c`.
    pub fn parse(src: &str) -> Result<UPoly> {
        let bad = |m: &str| Error::Parse(format!("{m} in polynomial {src:?}"));
        let compact: String = src.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad("empty input"));
        }
        let mut terms: Vec<String> = Vec::new();
        let mut cur = String::new();
        for (i, ch) in compact.chars().enumerate() {
            if (ch == '+' || ch == '-') && i > 0 && !cur.ends_with('^') {
                terms.push(std::mem::take(&mut cur));
            }
            cur.push(ch);
        }
        terms.push(cur);
        let mut acc = UPoly::zero();
        for t in terms {
            let (sign, body) = match t.strip_prefix('-') {
                Some(b) => (-Rational::one(), b),
                None => (Rational::one(), t.strip_prefix('+').unwrap_or(&t)),
            };
            let (coef, power) = if let Some(pos) = body.find('s') {
                let c = body[..pos].trim_end_matches('*');
                let c = if c.is_empty() {
                    Rational::one()
                } else {
                    super::field::parse_rational(c)?
                };
                let rest = &body[pos + 1..];
                let k = if rest.is_empty() {
                    1
                } else {
                    rest.strip_prefix('^')
                        .ok_or_else(|| bad("expected '^'"))?
                        .parse::<usize>()
                        .map_err(|_| bad("bad exponent"))?
                };
                (c, k)
            } else {
                (super::field::parse_rational(body)?, 0)
            };
            acc = acc + UPoly::monomial(sign * coef, power);
        }
        Ok(acc)
    }
}

impl Add for UPoly {
    type Output = UPoly;
    fn add(self, rhs: UPoly) -> UPoly {
        let (mut long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self.coeffs, rhs.coeffs)
        } else {
            (rhs.coeffs, self.coeffs)
        };
        for (a, b) in long.iter_mut().zip(short) {
            *a += b;
        }
        UPoly::from_coeffs(long)
    }
}

impl Neg for UPoly {
    type Output = UPoly;
    fn neg(self) -> UPoly {
        UPoly {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl Sub for UPoly {
    type Output = UPoly;
    fn sub(self, rhs: UPoly) -> UPoly {
        self + (-rhs)
    }
}

impl Mul for &UPoly {
    type Output = UPoly;
    fn mul(self, rhs: &UPoly) -> UPoly {
        if self.is_zero() || rhs.is_zero() {
            return UPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UPoly::from_coeffs(out)
    }
}

impl Mul for UPoly {
    type Output = UPoly;
    fn mul(self, rhs: UPoly) -> UPoly {
        &self * &rhs
    }
}

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (den, ints) = self.integer_coeffs();
        if den.is_one() {
            UPoly::fmt_terms(&ints, f)
        } else {
            write!(f, "(")?;
            UPoly::fmt_terms(&ints, f)?;
            write!(f, ")/{den}")
        }
    }
}

/// Integer-coefficient polynomial used for fraction-free gcd computation.
#[derive(Clone, Debug)]
struct IntPoly(Vec<BigInt>);

impl IntPoly {
    fn primitive_of(p: &UPoly) -> IntPoly {
        let (_, ints) = p.integer_coeffs();
        IntPoly(ints).primitive()
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn deg(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    fn trim(mut self) -> IntPoly {
        while self.0.last().is_some_and(|c| c.is_zero()) {
            self.0.pop();
        }
        self
    }

    fn primitive(self) -> IntPoly {
        let p = self.trim();
        if p.is_zero() {
            return p;
        }
        let mut g = BigInt::zero();
        for c in &p.0 {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        let neg = p.0.last().is_some_and(|c| c.is_negative());
        let g = if neg { -g } else { g };
        if g.is_one() {
            return p;
        }
        IntPoly(p.0.into_iter().map(|c| c / &g).collect())
    }

    /// Pseudo-remainder `lc(b)^(deg a - deg b + 1) * a mod b`.
    fn pseudo_rem(&self, b: &IntPoly) -> IntPoly {
        let db = b.deg();
        let lb = b.0[db].clone();
        let mut r = self.0.clone();
        while r.len() > db && !r.is_empty() {
            let dr = r.len() - 1;
            let lr = r[dr].clone();
            for c in r.iter_mut() {
                *c *= &lb;
            }
            let shift = dr - db;
            for (j, bc) in b.0.iter().enumerate() {
                r[shift + j] -= &lr * bc;
            }
            while r.last().is_some_and(|c| c.is_zero()) {
                r.pop();
            }
        }
        IntPoly(r).trim()
    }

    fn to_upoly(&self) -> UPoly {
        UPoly::from_coeffs(
            self.0
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::field::rat;

    fn p(c: &[i64]) -> UPoly {
        UPoly::from_coeffs(c.iter().map(|&x| rat(x, 1)).collect())
    }

    #[test]
    fn gcd_of_shared_factor() {
        // (s-1)(s+2) and (s-1)(s-3)
        let a = p(&[-2, 1, 1]);
        let b = p(&[3, -4, 1]);
        assert_eq!(a.gcd(&b), p(&[-1, 1]));
    }

    #[test]
    fn gcd_coprime_is_one() {
        assert_eq!(p(&[1, 1]).gcd(&p(&[2, 1])), UPoly::one());
    }

    #[test]
    fn div_rem_reconstructs() {
        let a = p(&[5, -3, 0, 2, 7]);
        let d = p(&[1, 0, 3]);
        let (q, r) = a.div_rem(&d);
        assert_eq!(&q * &d + r, a);
    }

    #[test]
    fn split_at_one_counts_multiplicity() {
        // (s-1)^2 (s+1)
        let a = &(&p(&[-1, 1]) * &p(&[-1, 1])) * &p(&[1, 1]);
        let (rest, m) = a.split_at_one();
        assert_eq!(m, 2);
        assert_eq!(rest, p(&[1, 1]));
    }

    #[test]
    fn parse_round_trip() {
        let a = UPoly::from_coeffs(vec![rat(-3, 1), rat(0, 1), rat(5, 1), rat(1, 1)]);
        assert_eq!(UPoly::parse(&a.to_string()).unwrap(), a);
        assert_eq!(UPoly::parse("s").unwrap(), p(&[0, 1]));
        assert_eq!(UPoly::parse("-2*s^3 + 1").unwrap(), p(&[1, 0, 0, -2]));
    }

    proptest::proptest! {
        #[test]
        fn division_with_remainder(a in proptest::collection::vec(-5i64..=5, 0..6), d in proptest::collection::vec(-5i64..=5, 1..4)) {
            let (a, d) = (p(&a), p(&d));
            proptest::prop_assume!(!d.is_zero());
            let (quo, rem) = a.div_rem(&d);
            proptest::prop_assert_eq!(&quo * &d + rem.clone(), a);
            proptest::prop_assert!(rem.is_zero() || rem.degree() < d.degree());
        }

        #[test]
        fn gcd_divides_both(a in proptest::collection::vec(-5i64..=5, 1..5), b in proptest::collection::vec(-5i64..=5, 1..5)) {
            let (a, b) = (p(&a), p(&b));
            proptest::prop_assume!(!a.is_zero() && !b.is_zero());
            let g = a.gcd(&b);
            proptest::prop_assert!(a.div_rem(&g).1.is_zero());
            proptest::prop_assert!(b.div_rem(&g).1.is_zero());
        }
    }
}
