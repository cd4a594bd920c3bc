//! Parameter literals: rationals `p/q` or the symbolic marker `s^k`.

use std::collections::BTreeMap;

use super::CliError;
use crate::exactalg::{parse_rational, Field, RatFunc, Rational};

/// A parameter literal before it is placed in a coefficient field.
#[derive(Clone, Debug, PartialEq)]
pub enum Literal {
    Rational(Rational),
    /// `s^k`.
    Symbolic(i64),
}

impl Literal {
    pub fn parse(s: &str) -> Result<Literal, CliError> {
        let t = s.trim();
        if let Some(rest) = t.strip_prefix('s') {
            let k = match rest.strip_prefix('^') {
                None if rest.is_empty() => 1,
                Some(e) => e
                    .trim_matches(|c| c == '(' || c == ')')
                    .parse::<i64>()
                    .map_err(|_| CliError::Usage(format!("bad symbolic exponent in {s:?}")))?,
                None => return Err(CliError::Usage(format!("not a parameter literal: {s:?}"))),
            };
            return Ok(Literal::Symbolic(k));
        }
        parse_rational(t).map(Literal::Rational).map_err(|e| CliError::Usage(e.to_string()))
    }

    pub fn is_symbolic(&self) -> bool {
        matches!(self, Literal::Symbolic(_))
    }
}

/// Coefficient fields a literal can be placed in.
pub trait FromLiteral: Field {
    fn from_literal(lit: &Literal) -> Result<Self, CliError>;
}

impl FromLiteral for Rational {
    fn from_literal(lit: &Literal) -> Result<Self, CliError> {
        match lit {
            Literal::Rational(r) => Ok(r.clone()),
            Literal::Symbolic(_) => Err(CliError::Usage("symbolic parameter in a rational computation".into())),
        }
    }
}

impl FromLiteral for RatFunc {
    fn from_literal(lit: &Literal) -> Result<Self, CliError> {
        Ok(match lit {
            Literal::Rational(r) => RatFunc::from_rational(r),
            Literal::Symbolic(k) => RatFunc::s_pow(*k),
        })
    }
}

/// Named parameters; at most one may be symbolic.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct ParamSet {
    values: BTreeMap<String, Literal>,
}

impl ParamSet {
    pub fn parse(raw: &BTreeMap<String, String>) -> Result<ParamSet, CliError> {
        let values = raw
            .iter()
            .map(|(k, v)| Ok((k.clone(), Literal::parse(v)?)))
            .collect::<Result<BTreeMap<_, _>, CliError>>()?;
        let symbolic: Vec<&String> = values.iter().filter(|(_, v)| v.is_symbolic()).map(|(k, _)| k).collect();
        if symbolic.len() > 1 {
            return Err(CliError::Usage(format!("at most one symbolic parameter allowed, got {symbolic:?}")));
        }
        Ok(ParamSet { values })
    }

    pub fn has_symbolic(&self) -> bool {
        self.values.values().any(Literal::is_symbolic)
    }

    pub fn get<F: FromLiteral>(&self, name: &str) -> Result<F, CliError> {
        let lit = self
            .values
            .get(name)
            .ok_or_else(|| CliError::Usage(format!("missing parameter --{name}")))?;
        F::from_literal(lit)
    }

    pub fn get_or<F: FromLiteral>(&self, name: &str, default: F) -> Result<F, CliError> {
        if self.values.contains_key(name) {
            self.get(name)
        } else {
            Ok(default)
        }
    }

    /// An integer parameter, rejecting symbolic and fractional values.
    pub fn integer(&self, name: &str) -> Result<Option<i64>, CliError> {
        match self.values.get(name) {
            None => Ok(None),
            Some(Literal::Rational(r)) if r.is_integer() => {
                i64::try_from(r.to_integer()).map(Some).map_err(|_| CliError::Usage(format!("--{name} out of range")))
            }
            Some(_) => Err(CliError::Usage(format!("--{name} must be an integer here"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat;

    #[test]
    fn literals_parse() {
        assert_eq!(Literal::parse("3/4").unwrap(), Literal::Rational(rat(3, 4)));
        assert_eq!(Literal::parse("-2").unwrap(), Literal::Rational(rat(-2, 1)));
        assert_eq!(Literal::parse("s").unwrap(), Literal::Symbolic(1));
        assert_eq!(Literal::parse("s^-3").unwrap(), Literal::Symbolic(-3));
        assert!(Literal::parse("x^2").is_err());
        assert!(Literal::parse("1/0").is_err());
    }

    #[test]
    fn one_symbol_at_most() {
        let raw: BTreeMap<String, String> = [("q".to_string(), "s".to_string()), ("t".to_string(), "s^2".to_string())].into();
        assert!(ParamSet::parse(&raw).is_err());
    }
}
