//! Command model behind the `bcinterp` binary.
//!
//! A [`CommandSpec`] is executed into a [`ResultDocument`], which serializes to
//! deterministic JSON. Coefficients are canonical strings: `p/q` over `ℚ` and
//! `(num)/(den)` in `s` over `ℚ(s)`. The schema lives in `docs/result-document.schema.json`.

pub mod params;

use std::collections::BTreeMap;
use std::fmt::Display;

use serde::{Deserialize, Serialize};
use thiserror::Error as ThisError;

use self::params::{FromLiteral, ParamSet};
use crate::afamilies::{
    a_type_evaluation, a_type_polynomial, interpolation_node_value, spectral_point, ATypeFamily, ATypeParams,
};
use crate::bcfamilies::{
    bc_interp_evaluation, bc_interp_polynomial, bc_spectral_point, jacobi_polynomial, koornwinder_polynomial,
    orthogonal_bc_evaluation, BCInterpParams, EvaluationForm, JacobiParams, KoornwinderParams, OrthogonalBCParams,
};
use crate::combinatorics::Partition;
use crate::error::Error;
use crate::exactalg::{monomial_expansion, Field, LaurentPoly, RatFunc, Rational};
use crate::limits::{check_limit, LimitId, LimitParams, LimitSide};
use crate::twovar::{two_var_formula, SeriesForm, TwoVarFormula};
use crate::verify::{run_suite, Bounds, Suite, SuiteStatus};

#[derive(Debug, ThisError)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error(transparent)]
    Library(#[from] Error),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Subcommand {
    Compute,
    Evaluate,
    Verify,
    Limit,
}

/// One invocation, echoed verbatim into the result.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CommandSpec {
    pub subcommand: Subcommand,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    #[serde(default)]
    pub partition: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    /// Named literals: `p/q` or `s^k`.
    #[serde(default)]
    pub params: BTreeMap<String, String>,
    /// Evaluation point for `evaluate`.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub point: Vec<String>,
    /// Series form for the two-variable Macdonald and Jack oracles.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub form: Option<String>,
    /// Emit the expansion in symmetrized monomials instead of monomials.
    #[serde(default)]
    pub symmetric: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub suite: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bounds: Option<(usize, usize)>,
    /// Limit identifier for `limit`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub id: Option<String>,
}

impl CommandSpec {
    pub fn new(subcommand: Subcommand) -> Self {
        CommandSpec {
            subcommand,
            family: None,
            partition: Vec::new(),
            n: None,
            params: BTreeMap::new(),
            point: Vec::new(),
            form: None,
            symmetric: false,
            suite: None,
            bounds: None,
            id: None,
        }
    }
}

/// A monomial `x^exponent` (or symmetrized monomial indexed by `exponent`) with its coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub exponent: Vec<i64>,
    pub coefficient: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Status {
    Ok,
    Nongeneric { factor: String },
    Failed { identity: String, witness: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultDocument {
    pub input: CommandSpec,
    pub result: Vec<Term>,
    pub scalars: BTreeMap<String, String>,
    pub status: Status,
}

impl ResultDocument {
    fn new(input: &CommandSpec) -> Self {
        ResultDocument {
            input: input.clone(),
            result: Vec::new(),
            scalars: BTreeMap::new(),
            status: Status::Ok,
        }
    }

    /// 0 ok, 1 identity failure, 2 non-generic parameters.
    pub fn exit_code(&self) -> i32 {
        match self.status {
            Status::Ok => 0,
            Status::Failed { .. } => 1,
            Status::Nongeneric { .. } => 2,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents always serialize")
    }

    pub fn from_json(s: &str) -> Result<Self, CliError> {
        serde_json::from_str(s).map_err(|e| CliError::Usage(format!("malformed result document: {e}")))
    }
}

/// Exit code for usage errors.
pub const USAGE_EXIT: i32 = 3;

/// Execute a command. Library errors that reflect the mathematics become a status;
/// malformed input is returned as [`CliError::Usage`].
pub fn run(spec: &CommandSpec) -> Result<ResultDocument, CliError> {
    let mut doc = ResultDocument::new(spec);
    let outcome = match spec.subcommand {
        Subcommand::Compute => compute(spec, &mut doc),
        Subcommand::Evaluate => evaluate(spec, &mut doc),
        Subcommand::Verify => verify(spec, &mut doc),
        Subcommand::Limit => limit(spec, &mut doc),
    };
    match outcome {
        Ok(()) => Ok(doc),
        Err(CliError::Library(Error::NonGeneric { factor })) => {
            doc.result.clear();
            doc.scalars.clear();
            doc.status = Status::Nongeneric { factor };
            Ok(doc)
        }
        Err(CliError::Library(e @ Error::PoleAtOne(_))) => {
            doc.status = Status::Failed {
                identity: "finite limit at s = 1".into(),
                witness: e.to_string(),
            };
            Ok(doc)
        }
        Err(CliError::Library(e)) => Err(CliError::Usage(e.to_string())),
        Err(e) => Err(e),
    }
}

/// Family tags accepted by `compute` and `evaluate`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Macdonald,
    Jack,
    InterpMacdonald,
    InterpJack,
    BcInterpMacdonald,
    BcInterpJack,
    Koornwinder,
    Jacobi,
    TwoVar(TwoVarTag),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TwoVarTag {
    BcInterpMacdonaldOneRow,
    BcInterpMacdonald,
    InterpMacdonald,
    Macdonald,
    InterpJack,
    BcInterpJack,
    Jack,
    Koornwinder,
    Jacobi,
}

const FAMILY_TAGS: [(&str, Family); 17] = [
    ("macdonald", Family::Macdonald),
    ("jack", Family::Jack),
    ("interp-macdonald", Family::InterpMacdonald),
    ("interp-jack", Family::InterpJack),
    ("bc-interp-macdonald", Family::BcInterpMacdonald),
    ("bc-interp-jack", Family::BcInterpJack),
    ("koornwinder", Family::Koornwinder),
    ("jacobi", Family::Jacobi),
    ("two-var-bc-interp-macdonald-one-row", Family::TwoVar(TwoVarTag::BcInterpMacdonaldOneRow)),
    ("two-var-bc-interp-macdonald", Family::TwoVar(TwoVarTag::BcInterpMacdonald)),
    ("two-var-interp-macdonald", Family::TwoVar(TwoVarTag::InterpMacdonald)),
    ("two-var-macdonald", Family::TwoVar(TwoVarTag::Macdonald)),
    ("two-var-interp-jack", Family::TwoVar(TwoVarTag::InterpJack)),
    ("two-var-bc-interp-jack", Family::TwoVar(TwoVarTag::BcInterpJack)),
    ("two-var-jack", Family::TwoVar(TwoVarTag::Jack)),
    ("two-var-koornwinder", Family::TwoVar(TwoVarTag::Koornwinder)),
    ("two-var-jacobi", Family::TwoVar(TwoVarTag::Jacobi)),
];

impl Family {
    pub fn parse(tag: &str) -> Result<Family, CliError> {
        FAMILY_TAGS
            .iter()
            .find(|(t, _)| *t == tag)
            .map(|(_, f)| *f)
            .ok_or_else(|| CliError::Usage(format!("unknown family {tag:?}; expected one of {}", Family::tags().join(", "))))
    }

    pub fn tags() -> Vec<&'static str> {
        FAMILY_TAGS.iter().map(|(t, _)| *t).collect()
    }

    /// BC families are invariant under `x_i → x_i^{-1}` (resp. `x_i → -x_i`).
    fn signed(self) -> bool {
        matches!(
            self,
            Family::BcInterpMacdonald
                | Family::BcInterpJack
                | Family::Koornwinder
                | Family::TwoVar(TwoVarTag::BcInterpMacdonaldOneRow)
                | Family::TwoVar(TwoVarTag::BcInterpMacdonald)
                | Family::TwoVar(TwoVarTag::BcInterpJack)
                | Family::TwoVar(TwoVarTag::Koornwinder)
        )
    }
}

fn parse_form(s: Option<&str>) -> Result<SeriesForm, CliError> {
    match s.unwrap_or("hypergeometric") {
        "hypergeometric" => Ok(SeriesForm::Hypergeometric),
        "explicit-sum" => Ok(SeriesForm::ExplicitSum),
        "ultraspherical" => Ok(SeriesForm::Ultraspherical),
        other => Err(CliError::Usage(format!(
            "unknown form {other:?}; expected hypergeometric, explicit-sum or ultraspherical"
        ))),
    }
}

struct Request {
    family: Family,
    lambda: Partition,
    n: usize,
    params: ParamSet,
    form: SeriesForm,
}

fn request(spec: &CommandSpec) -> Result<Request, CliError> {
    let tag = spec.family.as_deref().ok_or_else(|| CliError::Usage("missing --family".into()))?;
    let family = Family::parse(tag)?;
    let lambda = Partition::new(spec.partition.clone()).map_err(|e| CliError::Usage(e.to_string()))?;
    let n = spec.n.unwrap_or(match family {
        Family::TwoVar(_) => 2,
        _ => lambda.length().max(1),
    });
    if lambda.length() > n {
        return Err(CliError::Usage(format!("partition {lambda} has more than n = {n} parts")));
    }
    if matches!(family, Family::TwoVar(_)) && n != 2 {
        return Err(CliError::Usage("two-variable oracles need n = 2".into()));
    }
    Ok(Request {
        family,
        lambda,
        n,
        params: ParamSet::parse(&spec.params)?,
        form: parse_form(spec.form.as_deref())?,
    })
}

fn koornwinder_params<F: FromLiteral>(p: &ParamSet, n: usize) -> Result<KoornwinderParams<F>, CliError> {
    let a = [p.get("a1")?, p.get("a2")?, p.get("a3")?, p.get("a4")?];
    Ok(KoornwinderParams::new(p.get("q")?, p.get("t")?, a, p.get("a-dual-1")?, n)?)
}

fn jacobi_params<F: FromLiteral>(p: &ParamSet, n: usize) -> Result<JacobiParams<F>, CliError> {
    Ok(JacobiParams::new(p.get("tau")?, p.get("alpha")?, p.get("beta")?, n))
}

fn polynomial<F: FromLiteral>(r: &Request) -> Result<LaurentPoly<F>, CliError> {
    let (p, n, l) = (&r.params, r.n, &r.lambda);
    let qt = || -> Result<ATypeParams<F>, CliError> { Ok(ATypeParams::q_case(p.get("q")?, p.get("t")?, n)) };
    let tau = || -> Result<ATypeParams<F>, CliError> { Ok(ATypeParams::one_case(p.get("tau")?, n)) };
    let poly = match r.family {
        Family::Macdonald => a_type_polynomial(ATypeFamily::Macdonald, l, &qt()?)?,
        Family::Jack => a_type_polynomial(ATypeFamily::Jack, l, &tau()?)?,
        Family::InterpMacdonald => a_type_polynomial(ATypeFamily::InterpMacdonald, l, &qt()?)?,
        Family::InterpJack => a_type_polynomial(ATypeFamily::InterpJack, l, &tau()?)?,
        Family::BcInterpMacdonald => bc_interp_polynomial(l, &BCInterpParams::q_case(p.get("q")?, p.get("t")?, p.get("a")?, n))?,
        Family::BcInterpJack => bc_interp_polynomial(l, &BCInterpParams::one_case(p.get("tau")?, p.get("alpha")?, n))?,
        Family::Koornwinder => koornwinder_polynomial(l, &koornwinder_params(p, n)?)?,
        Family::Jacobi => jacobi_polynomial(l, &jacobi_params(p, n)?)?,
        Family::TwoVar(tag) => {
            let formula = match tag {
                TwoVarTag::BcInterpMacdonaldOneRow => TwoVarFormula::BcInterpMacdonaldOneRow { q: p.get("q")?, t: p.get("t")?, a: p.get("a")? },
                TwoVarTag::BcInterpMacdonald => TwoVarFormula::BcInterpMacdonald { q: p.get("q")?, t: p.get("t")?, a: p.get("a")? },
                TwoVarTag::InterpMacdonald => TwoVarFormula::InterpMacdonald { q: p.get("q")?, t: p.get("t")? },
                TwoVarTag::Macdonald => TwoVarFormula::Macdonald { q: p.get("q")?, t: p.get("t")?, form: r.form },
                TwoVarTag::InterpJack => TwoVarFormula::InterpJack { tau: p.get("tau")? },
                TwoVarTag::BcInterpJack => TwoVarFormula::BcInterpJack { tau: p.get("tau")?, alpha: p.get("alpha")? },
                TwoVarTag::Jack => TwoVarFormula::Jack { tau: p.get("tau")?, form: r.form },
                TwoVarTag::Koornwinder => TwoVarFormula::Koornwinder(koornwinder_params(p, 2)?),
                TwoVarTag::Jacobi => TwoVarFormula::Jacobi(jacobi_params(p, 2)?),
            };
            two_var_formula(&formula, l.part(1), l.part(2))?
        }
    };
    Ok(poly)
}

fn terms_of<F: Field>(p: &LaurentPoly<F>) -> Vec<Term> {
    p.terms()
        .map(|(e, c)| Term {
            exponent: e.as_slice().iter().map(|&k| k as i64).collect(),
            coefficient: c.to_string(),
        })
        .collect()
}

fn compute_in<F: FromLiteral>(r: &Request, symmetric: bool, doc: &mut ResultDocument) -> Result<(), CliError> {
    let p = polynomial::<F>(r)?;
    doc.result = if symmetric {
        monomial_expansion(&p, r.family.signed())?
            .into_iter()
            .map(|(mu, c)| Term {
                exponent: mu.padded(r.n).into_iter().map(|k| k as i64).collect(),
                coefficient: c.to_string(),
            })
            .collect()
    } else {
        terms_of(&p)
    };
    doc.scalars.insert("terms".into(), doc.result.len().to_string());
    Ok(())
}

fn compute(spec: &CommandSpec, doc: &mut ResultDocument) -> Result<(), CliError> {
    let r = request(spec)?;
    if r.params.has_symbolic() {
        compute_in::<RatFunc>(&r, spec.symmetric, doc)
    } else {
        compute_in::<Rational>(&r, spec.symmetric, doc)
    }
}

fn record<F: Display + PartialEq>(doc: &mut ResultDocument, identity: &str, closed: F, direct: F) {
    doc.scalars.insert("closed-form".into(), closed.to_string());
    doc.scalars.insert("direct".into(), direct.to_string());
    if closed != direct {
        doc.status = Status::Failed {
            identity: identity.into(),
            witness: format!("closed form {closed} but direct substitution gives {direct}"),
        };
    }
}

fn evaluate_in<F: FromLiteral>(r: &Request, point: &[String], doc: &mut ResultDocument) -> Result<(), CliError> {
    let poly = polynomial::<F>(r)?;
    if !point.is_empty() {
        if point.len() != r.n {
            return Err(CliError::Usage(format!("point has {} coordinates, need {}", point.len(), r.n)));
        }
        let pt = point
            .iter()
            .map(|s| F::from_literal(&params::Literal::parse(s)?))
            .collect::<Result<Vec<F>, CliError>>()?;
        doc.scalars.insert("value".into(), poly.evaluate(&pt)?.to_string());
        return Ok(());
    }
    let (p, n, l) = (&r.params, r.n, &r.lambda);
    match r.family {
        Family::Macdonald | Family::Jack => {
            let (family, params) = if r.family == Family::Macdonald {
                (ATypeFamily::Macdonald, ATypeParams::q_case(p.get("q")?, p.get("t")?, n))
            } else {
                (ATypeFamily::Jack, ATypeParams::one_case(p.get("tau")?, n))
            };
            let direct = poly.evaluate(&spectral_point(&Partition::empty(), &params)?)?;
            record(doc, "principal specialization", a_type_evaluation(family, l, &params)?, direct);
        }
        Family::InterpMacdonald | Family::InterpJack => {
            let params = if r.family == Family::InterpMacdonald {
                ATypeParams::q_case(p.get("q")?, p.get("t")?, n)
            } else {
                ATypeParams::one_case(p.get("tau")?, n)
            };
            let direct = poly.evaluate(&spectral_point(l, &params)?)?;
            record(doc, "value at own node", interpolation_node_value(l, &params)?, direct);
        }
        Family::BcInterpMacdonald | Family::BcInterpJack => {
            let params = if r.family == Family::BcInterpMacdonald {
                BCInterpParams::q_case(p.get("q")?, p.get("t")?, p.get("a")?, n)
            } else {
                BCInterpParams::one_case(p.get("tau")?, p.get("alpha")?, n)
            };
            let direct = poly.evaluate(&bc_spectral_point(l, &params)?)?;
            let boxes = bc_interp_evaluation(l, &params, EvaluationForm::BoxProduct)?;
            doc.scalars.insert("box-product".into(), boxes.to_string());
            let factored = bc_interp_evaluation(l, &params, EvaluationForm::Factored)?;
            if boxes != factored {
                doc.status = Status::Failed {
                    identity: "box product equals factored product".into(),
                    witness: format!("{boxes} vs {factored}"),
                };
                return Ok(());
            }
            record(doc, "value at own node", factored, direct);
        }
        Family::Koornwinder => {
            let kp = koornwinder_params::<F>(p, n)?;
            let direct = poly.evaluate(&bc_spectral_point(&Partition::empty(), &kp.interp(&kp.a[0]))?)?;
            record(doc, "value at t^δ a_1", orthogonal_bc_evaluation(l, &OrthogonalBCParams::Koornwinder(kp))?, direct);
        }
        Family::Jacobi => {
            let jp = jacobi_params::<F>(p, n)?;
            record(doc, "value at 0", orthogonal_bc_evaluation(l, &OrthogonalBCParams::Jacobi(jp))?, poly.constant_term());
        }
        Family::TwoVar(_) => {
            return Err(CliError::Usage("two-variable oracles have no closed-form value; pass --point".into()));
        }
    }
    Ok(())
}

fn evaluate(spec: &CommandSpec, doc: &mut ResultDocument) -> Result<(), CliError> {
    let r = request(spec)?;
    let symbolic_point = spec.point.iter().any(|s| s.trim().starts_with('s'));
    if r.params.has_symbolic() || symbolic_point {
        evaluate_in::<RatFunc>(&r, &spec.point, doc)
    } else {
        evaluate_in::<Rational>(&r, &spec.point, doc)
    }
}

fn verify(spec: &CommandSpec, doc: &mut ResultDocument) -> Result<(), CliError> {
    let name = spec.suite.as_deref().ok_or_else(|| CliError::Usage("missing --suite".into()))?;
    let suite = Suite::from_name(name).ok_or_else(|| {
        let names: Vec<_> = Suite::ALL.iter().map(|s| s.name()).collect();
        CliError::Usage(format!("unknown suite {name:?}; expected one of {}", names.join(", ")))
    })?;
    let (w, n) = spec.bounds.unwrap_or((3, 2));
    let report = run_suite(suite, Bounds::new(w, n))?;
    doc.scalars.insert("checks".into(), report.checks.to_string());
    if let SuiteStatus::Failed(w) = report.status {
        doc.status = Status::Failed {
            identity: w.identity,
            witness: w.detail,
        };
    }
    Ok(())
}

fn limit(spec: &CommandSpec, doc: &mut ResultDocument) -> Result<(), CliError> {
    let name = spec.id.as_deref().ok_or_else(|| CliError::Usage("missing --id".into()))?;
    let id = LimitId::from_name(name).ok_or_else(|| {
        let names: Vec<_> = LimitId::ALL.iter().map(|i| i.name()).collect();
        CliError::Usage(format!("unknown limit {name:?}; expected one of {}", names.join(", ")))
    })?;
    let lambda = Partition::new(spec.partition.clone()).map_err(|e| CliError::Usage(e.to_string()))?;
    let n = spec.n.unwrap_or(2);
    let p = ParamSet::parse(&spec.params)?;
    if p.has_symbolic() {
        return Err(CliError::Usage("limits supply the symbol themselves; pass rationals and integer exponents".into()));
    }
    let d = LimitParams::default();
    let params = LimitParams {
        q: p.get_or("q", d.q)?,
        t: p.get_or("t", d.t)?,
        a: p.get_or("a", d.a)?,
        tau: p.integer("tau")?.unwrap_or(d.tau),
        alpha: p.integer("alpha")?.unwrap_or(d.alpha),
        beta: p.integer("beta")?.unwrap_or(d.beta),
        koornwinder: d.koornwinder,
    };
    let check = check_limit(id, &lambda, n, &params)?;
    let side = |s: &LimitSide| match s {
        LimitSide::Polynomial(p) => format!("{} terms", p.len()),
        LimitSide::PointValues(v) => format!("{} points", v.len()),
        LimitSide::Scalar(c) => c.to_string(),
    };
    doc.scalars.insert("lhs".into(), side(&check.lhs));
    doc.scalars.insert("rhs".into(), side(&check.rhs));
    match &check.lhs {
        LimitSide::Polynomial(p) => doc.result = terms_of(p),
        LimitSide::PointValues(v) => {
            doc.result = v
                .iter()
                .map(|(x, c)| Term {
                    exponent: x.clone(),
                    coefficient: c.to_string(),
                })
                .collect()
        }
        LimitSide::Scalar(_) => {}
    }
    if !check.holds() {
        doc.status = Status::Failed {
            identity: id.name().into(),
            witness: format!("{:?} vs {:?}", check.lhs, check.rhs),
        };
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(sub: Subcommand, family: &str, partition: &[usize], n: usize, params: &[(&str, &str)]) -> CommandSpec {
        let mut s = CommandSpec::new(sub);
        s.family = Some(family.into());
        s.partition = partition.to_vec();
        s.n = Some(n);
        s.params = params.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect();
        s
    }

    fn terms(doc: &ResultDocument) -> Vec<(Vec<i64>, &str)> {
        doc.result.iter().map(|t| (t.exponent.clone(), t.coefficient.as_str())).collect()
    }

    #[test]
    fn computes_one_box_polynomials() {
        let d = run(&spec(Subcommand::Compute, "macdonald", &[1], 2, &[("q", "1/2"), ("t", "1/3")])).unwrap();
        assert_eq!(terms(&d), vec![(vec![0, 1], "1"), (vec![1, 0], "1")]);
        let d = run(&spec(Subcommand::Compute, "interp-macdonald", &[1], 2, &[("q", "1/2"), ("t", "1/3")])).unwrap();
        assert_eq!(terms(&d), vec![(vec![0, 0], "-4/3"), (vec![0, 1], "1"), (vec![1, 0], "1")]);
        let d = run(&spec(Subcommand::Compute, "bc-interp-jack", &[1], 2, &[("tau", "2"), ("alpha", "3")])).unwrap();
        assert_eq!(terms(&d), vec![(vec![0, 0], "-34"), (vec![0, 2], "1"), (vec![2, 0], "1")]);
        assert_eq!(d.exit_code(), 0);
    }

    #[test]
    fn documents_round_trip_and_are_deterministic() {
        let s = spec(Subcommand::Compute, "jack", &[2, 1], 3, &[("tau", "3/2")]);
        let a = run(&s).unwrap().to_json();
        assert_eq!(a, run(&s).unwrap().to_json());
        assert_eq!(ResultDocument::from_json(&a).unwrap().to_json(), a);
    }

    #[test]
    fn nongeneric_parameters_are_reported() {
        let d = run(&spec(Subcommand::Compute, "macdonald", &[2], 2, &[("q", "1"), ("t", "1/3")]));
        let d = d.unwrap();
        assert!(matches!(d.status, Status::Nongeneric { .. }), "{:?}", d.status);
        assert_eq!(d.exit_code(), 2);
    }

    #[test]
    fn usage_errors() {
        assert!(run(&spec(Subcommand::Compute, "nope", &[1], 2, &[])).is_err());
        assert!(run(&spec(Subcommand::Compute, "macdonald", &[1], 2, &[("q", "1/2")])).is_err());
        assert!(run(&spec(Subcommand::Compute, "macdonald", &[1, 1, 1], 2, &[("q", "1/2"), ("t", "1/3")])).is_err());
    }

    #[test]
    fn symbolic_parameter_uses_rational_functions() {
        let d = run(&spec(Subcommand::Compute, "macdonald", &[2], 2, &[("q", "1/2"), ("t", "s")])).unwrap();
        assert!(d.result.iter().any(|t| t.coefficient.contains('s')));
    }

    #[test]
    fn evaluate_checks_closed_forms() {
        let p = [("q", "1/3"), ("t", "2/7"), ("a", "5/4")];
        let d = run(&spec(Subcommand::Evaluate, "bc-interp-macdonald", &[2, 1], 2, &p)).unwrap();
        assert_eq!(d.status, Status::Ok);
        assert_eq!(d.scalars["closed-form"], d.scalars["direct"]);
    }

    #[test]
    fn verify_and_limit_commands() {
        let mut s = CommandSpec::new(Subcommand::Verify);
        s.suite = Some("duality".into());
        s.bounds = Some((2, 2));
        assert_eq!(run(&s).unwrap().status, Status::Ok);
        let mut s = CommandSpec::new(Subcommand::Limit);
        s.id = Some("macdonald-to-jack".into());
        s.partition = vec![1];
        s.n = Some(2);
        s.params.insert("tau".into(), "2".into());
        assert_eq!(run(&s).unwrap().status, Status::Ok);
    }
}
