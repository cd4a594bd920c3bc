//! Exact limit relations between the families.
//!
//! Top-degree limits are checked by extracting the leading homogeneous part.
//! Parameter limits put every parameter into `ℚ(s)` as `q = s`, `t = s^τ`, `a = s^α`
//! (or `a = s`, `α = s` for limits at infinity) with integer exponents, and take the
//! limit of each coefficient. Limits whose argument involves `q^x` are checked at
//! integer points `x`, where `q^x` is a monomial in `s`.

use std::fmt;

use crate::afamilies::{a_type_polynomial, a_type_value, ATypeFamily, ATypeParams};
use crate::bcfamilies::{
    bc_interp_polynomial, bc_interp_value, jacobi_polynomial, koornwinder_polynomial, koornwinder_value,
    orthogonal_bc_evaluation, BCInterpParams, JacobiParams, KoornwinderParams, OrthogonalBCParams,
};
use crate::combinatorics::Partition;
use crate::error::{Error, Result};
use crate::exactalg::symmetric::square_variables;
use crate::exactalg::{rat, rational_limit, Field, LaurentPoly, LimitMode, RatFunc, Rational};

/// The registered limit relations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LimitId {
    /// Koornwinder → Macdonald as the term of highest degree.
    KoornwinderTopDegree,
    /// BC-Jacobi → Jack as the term of highest degree.
    JacobiTopDegree,
    /// Interpolation Macdonald → Macdonald as the term of highest degree.
    InterpMacdonaldTopDegree,
    /// Interpolation Jack → Jack as the term of highest degree.
    InterpJackTopDegree,
    /// BC interpolation Macdonald → Macdonald as the term of highest degree.
    BcInterpMacdonaldTopDegree,
    /// BC interpolation Jack → Jack in `x^2` as the term of highest degree.
    BcInterpJackTopDegree,
    /// `a^{-|λ|} P^ip(a x; q, t, a) → P^ip(x; q, t)` as `a → ∞`.
    BcInterpMacdonaldLargeA,
    /// `P(x; q, q^τ) → P(x; τ)` as `q ↑ 1`.
    MacdonaldToJack,
    /// `(q-1)^{-|λ|} P^ip(q^x; q, q^τ) → P^ip(x; τ)` as `q ↑ 1`.
    InterpMacdonaldToInterpJack,
    /// `(1-q)^{-2|λ|} P^ip(q^x; q, q^τ, q^α) → P^ip(x; τ, α)` as `q ↑ 1`.
    BcInterpMacdonaldToBcInterpJack,
    /// `P^ip(x; q, q^τ, q^α) → P(x + x^{-1} - 2; τ)` as `q ↑ 1`.
    BcInterpMacdonaldToShiftedJack,
    /// `P^ip(x; q, q^τ) → P(x - 1^n; τ)` as `q ↑ 1`.
    InterpMacdonaldToShiftedJack,
    /// `(2α)^{-|λ|} P^ip(x + α; τ, α) → P^ip(x; τ)` as `α → ∞`.
    BcInterpJackLargeAlpha,
    /// `a_1^{-|λ|} P(a_1 x; q, t; a) → P(x; q, t)` as `a_1 → ∞`.
    KoornwinderLargeA1,
    /// Koornwinder at `(q^{α+1}, -q^{β+1}, 1, -1)` → `(-4)^{|λ|} P((2 - x - x^{-1})/4; τ; α, β)` as `q ↑ 1`.
    KoornwinderToJacobi,
    /// The evaluation at `q^{τδ+α+1}` of the previous limit.
    KoornwinderEvaluationToJacobi,
    /// `P(x; τ; α, β) → P(x - 1^n; τ)` as `α → ∞`.
    JacobiLargeAlpha,
    /// `P(q^{τδ}; q, q^τ) → P(1^n; τ)` as `q ↑ 1`.
    MacdonaldPrincipalToJack,
}

impl LimitId {
    pub const ALL: [LimitId; 18] = [
        LimitId::KoornwinderTopDegree,
        LimitId::JacobiTopDegree,
        LimitId::InterpMacdonaldTopDegree,
        LimitId::InterpJackTopDegree,
        LimitId::BcInterpMacdonaldTopDegree,
        LimitId::BcInterpJackTopDegree,
        LimitId::BcInterpMacdonaldLargeA,
        LimitId::MacdonaldToJack,
        LimitId::InterpMacdonaldToInterpJack,
        LimitId::BcInterpMacdonaldToBcInterpJack,
        LimitId::BcInterpMacdonaldToShiftedJack,
        LimitId::InterpMacdonaldToShiftedJack,
        LimitId::BcInterpJackLargeAlpha,
        LimitId::KoornwinderLargeA1,
        LimitId::KoornwinderToJacobi,
        LimitId::KoornwinderEvaluationToJacobi,
        LimitId::JacobiLargeAlpha,
        LimitId::MacdonaldPrincipalToJack,
    ];

    /// Kebab-case identifier.
    pub fn name(self) -> &'static str {
        match self {
            LimitId::KoornwinderTopDegree => "koornwinder-top-degree",
            LimitId::JacobiTopDegree => "jacobi-top-degree",
            LimitId::InterpMacdonaldTopDegree => "interp-macdonald-top-degree",
            LimitId::InterpJackTopDegree => "interp-jack-top-degree",
            LimitId::BcInterpMacdonaldTopDegree => "bc-interp-macdonald-top-degree",
            LimitId::BcInterpJackTopDegree => "bc-interp-jack-top-degree",
            LimitId::BcInterpMacdonaldLargeA => "bc-interp-macdonald-large-a",
            LimitId::MacdonaldToJack => "macdonald-to-jack",
            LimitId::InterpMacdonaldToInterpJack => "interp-macdonald-to-interp-jack",
            LimitId::BcInterpMacdonaldToBcInterpJack => "bc-interp-macdonald-to-bc-interp-jack",
            LimitId::BcInterpMacdonaldToShiftedJack => "bc-interp-macdonald-to-shifted-jack",
            LimitId::InterpMacdonaldToShiftedJack => "interp-macdonald-to-shifted-jack",
            LimitId::BcInterpJackLargeAlpha => "bc-interp-jack-large-alpha",
            LimitId::KoornwinderLargeA1 => "koornwinder-large-a1",
            LimitId::KoornwinderToJacobi => "koornwinder-to-jacobi",
            LimitId::KoornwinderEvaluationToJacobi => "koornwinder-evaluation-to-jacobi",
            LimitId::JacobiLargeAlpha => "jacobi-large-alpha",
            LimitId::MacdonaldPrincipalToJack => "macdonald-principal-to-jack",
        }
    }

    pub fn from_name(name: &str) -> Option<LimitId> {
        LimitId::ALL.into_iter().find(|id| id.name() == name)
    }
}

impl fmt::Display for LimitId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Parameters shared by the limit checks.
///
/// `q`, `t`, `tau` (as a rational) and the Koornwinder data are used where the
/// limit leaves them fixed; `tau`, `alpha`, `beta` are the integer exponents in
/// `t = s^τ`, `a = s^α` where the limit acts on them.
#[derive(Clone, Debug, PartialEq)]
pub struct LimitParams {
    pub q: Rational,
    pub t: Rational,
    pub a: Rational,
    pub tau: i64,
    pub alpha: i64,
    pub beta: i64,
    /// `a_1, a'_1, a_2, a_3`; `a_4` is fixed by `a'^2_1 q = a_1 a_2 a_3 a_4`.
    pub koornwinder: [Rational; 4],
}

impl Default for LimitParams {
    fn default() -> Self {
        LimitParams {
            q: rat(1, 3),
            t: rat(2, 7),
            a: rat(5, 4),
            tau: 2,
            alpha: 1,
            beta: 0,
            koornwinder: [rat(3, 2), rat(2, 3), rat(2, 5), rat(-1, 4)],
        }
    }
}

impl LimitParams {
    fn koornwinder_params(&self, n: usize) -> Result<KoornwinderParams<Rational>> {
        let [a1, d1, a2, a3] = self.koornwinder.clone();
        let den = a1.clone() * a2.clone() * a3.clone();
        let a4 = crate::exactalg::checked_div(self.q.clone() * d1.clone() * d1.clone(), &den, || "a_1 a_2 a_3".into())?;
        KoornwinderParams::new(self.q.clone(), self.t.clone(), [a1, a2, a3, a4], d1, n)
    }

    fn tau_rational(&self) -> Rational {
        Rational::from_int(self.tau)
    }

    fn require_positive_tau(&self) -> Result<()> {
        if self.tau < 1 {
            return Err(Error::Incompatible(format!("τ must be a positive integer, got {}", self.tau)));
        }
        Ok(())
    }
}

/// One side of a limit relation, already in `ℚ`.
#[derive(Clone, Debug, PartialEq)]
pub enum LimitSide {
    Polynomial(LaurentPoly<Rational>),
    /// Values at the listed integer points.
    PointValues(Vec<(Vec<i64>, Rational)>),
    Scalar(Rational),
}

/// Both sides of a limit relation.
#[derive(Clone, Debug, PartialEq)]
pub struct LimitCheck {
    pub id: LimitId,
    pub lhs: LimitSide,
    pub rhs: LimitSide,
}

impl LimitCheck {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

fn s() -> RatFunc {
    RatFunc::s()
}

fn sp(k: i64) -> RatFunc {
    RatFunc::s_pow(k)
}

/// `Σ_T c_e(s) x^e ↦ Σ lim c_e(s) factor(s)^{|e| - shift} x^e`.
fn scaled_coefficient_limit(
    p: &LaurentPoly<RatFunc>,
    factor: &RatFunc,
    shift: i64,
    mode: LimitMode,
) -> Result<LaurentPoly<Rational>> {
    let mut out = Vec::new();
    for (e, c) in p.terms() {
        let w = crate::exactalg::checked_pow(factor, e.degree() - shift, "scaling factor")?;
        out.push((e.clone(), rational_limit(&(c.clone() * w), mode)?));
    }
    Ok(LaurentPoly::from_terms(p.nvars(), out))
}

fn integer_grid(n: usize) -> Vec<Vec<i64>> {
    let mut pts = vec![vec![]];
    for _ in 0..n {
        pts = pts
            .into_iter()
            .flat_map(|p| {
                (-1..=2).map(move |v| {
                    let mut p = p.clone();
                    p.push(v);
                    p
                })
            })
            .collect();
    }
    pts
}

fn jack(lambda: &Partition, n: usize, tau: &Rational) -> Result<LaurentPoly<Rational>> {
    a_type_polynomial(ATypeFamily::Jack, lambda, &ATypeParams::one_case(tau.clone(), n))
}

fn macdonald(lambda: &Partition, n: usize, q: &Rational, t: &Rational) -> Result<LaurentPoly<Rational>> {
    a_type_polynomial(ATypeFamily::Macdonald, lambda, &ATypeParams::q_case(q.clone(), t.clone(), n))
}

fn substitute_each(p: &LaurentPoly<Rational>, image: impl Fn(usize) -> LaurentPoly<Rational>) -> Result<LaurentPoly<Rational>> {
    let images: Vec<_> = (0..p.nvars()).map(image).collect();
    p.substitute(&images)
}

/// Compute both sides of the limit relation `id` for `λ` in `n` variables.
pub fn check_limit(id: LimitId, lambda: &Partition, n: usize, params: &LimitParams) -> Result<LimitCheck> {
    if lambda.length() > n {
        return Err(Error::Incompatible(format!("{lambda} has more than {n} parts")));
    }
    let w = lambda.weight() as i64;
    let (q, t, tau_r) = (&params.q, &params.t, params.tau_rational());
    let poly = LimitSide::Polynomial;
    let (lhs, rhs) = match id {
        LimitId::KoornwinderTopDegree => {
            let p = koornwinder_polynomial(lambda, &params.koornwinder_params(n)?)?;
            (poly(p.top_part()), poly(macdonald(lambda, n, q, t)?))
        }
        LimitId::JacobiTopDegree => {
            let p = jacobi_polynomial(lambda, &JacobiParams::new(tau_r.clone(), rat(1, 3), rat(2, 5), n))?;
            (poly(p.top_part()), poly(jack(lambda, n, &tau_r)?))
        }
        LimitId::InterpMacdonaldTopDegree => {
            let ap = ATypeParams::q_case(q.clone(), t.clone(), n);
            let p = a_type_polynomial(ATypeFamily::InterpMacdonald, lambda, &ap)?;
            (poly(p.top_part()), poly(macdonald(lambda, n, q, t)?))
        }
        LimitId::InterpJackTopDegree => {
            let p = a_type_polynomial(ATypeFamily::InterpJack, lambda, &ATypeParams::one_case(tau_r.clone(), n))?;
            (poly(p.top_part()), poly(jack(lambda, n, &tau_r)?))
        }
        LimitId::BcInterpMacdonaldTopDegree => {
            let p = bc_interp_polynomial(lambda, &BCInterpParams::q_case(q.clone(), t.clone(), params.a.clone(), n))?;
            (poly(p.top_part()), poly(macdonald(lambda, n, q, t)?))
        }
        LimitId::BcInterpJackTopDegree => {
            let alpha = Rational::from_int(params.alpha);
            let p = bc_interp_polynomial(lambda, &BCInterpParams::one_case(tau_r.clone(), alpha, n))?;
            (poly(p.top_part()), poly(square_variables(&jack(lambda, n, &tau_r)?)))
        }
        LimitId::BcInterpMacdonaldLargeA => {
            let bp = BCInterpParams::q_case(RatFunc::from_rational(q), RatFunc::from_rational(t), s(), n);
            let p = bc_interp_polynomial(lambda, &bp)?;
            let lhs = scaled_coefficient_limit(&p, &s(), w, LimitMode::AtInfinityScaled(0))?;
            let ap = ATypeParams::q_case(q.clone(), t.clone(), n);
            (poly(lhs), poly(a_type_polynomial(ATypeFamily::InterpMacdonald, lambda, &ap)?))
        }
        LimitId::MacdonaldToJack => {
            params.require_positive_tau()?;
            let p = a_type_polynomial(ATypeFamily::Macdonald, lambda, &ATypeParams::q_case(s(), sp(params.tau), n))?;
            (poly(crate::exactalg::laurent_limit(&p, LimitMode::AtOne)?), poly(jack(lambda, n, &tau_r)?))
        }
        LimitId::InterpMacdonaldToInterpJack => {
            params.require_positive_tau()?;
            let ap = ATypeParams::q_case(s(), sp(params.tau), n);
            let jp = ATypeParams::one_case(tau_r.clone(), n);
            let scale = crate::exactalg::checked_pow(&(s() - RatFunc::one()), -w, "q - 1")?;
            let (mut l, mut r) = (Vec::new(), Vec::new());
            for x in integer_grid(n) {
                let pt: Vec<RatFunc> = x.iter().map(|&k| sp(k)).collect();
                let v = a_type_value(ATypeFamily::InterpMacdonald, lambda, &ap, &pt)? * scale.clone();
                l.push((x.clone(), rational_limit(&v, LimitMode::AtOne)?));
                let pt: Vec<Rational> = x.iter().map(|&k| Rational::from_int(k)).collect();
                r.push((x, a_type_value(ATypeFamily::InterpJack, lambda, &jp, &pt)?));
            }
            (LimitSide::PointValues(l), LimitSide::PointValues(r))
        }
        LimitId::BcInterpMacdonaldToBcInterpJack => {
            params.require_positive_tau()?;
            let bp = BCInterpParams::q_case(s(), sp(params.tau), sp(params.alpha), n);
            let jp = BCInterpParams::one_case(tau_r.clone(), Rational::from_int(params.alpha), n);
            let scale = crate::exactalg::checked_pow(&(RatFunc::one() - s()), -2 * w, "1 - q")?;
            let (mut l, mut r) = (Vec::new(), Vec::new());
            for x in integer_grid(n) {
                let pt: Vec<RatFunc> = x.iter().map(|&k| sp(k)).collect();
                let v = bc_interp_value(lambda, &bp, &pt)? * scale.clone();
                l.push((x.clone(), rational_limit(&v, LimitMode::AtOne)?));
                let pt: Vec<Rational> = x.iter().map(|&k| Rational::from_int(k)).collect();
                r.push((x, bc_interp_value(lambda, &jp, &pt)?));
            }
            (LimitSide::PointValues(l), LimitSide::PointValues(r))
        }
        LimitId::BcInterpMacdonaldToShiftedJack => {
            params.require_positive_tau()?;
            let bp = BCInterpParams::q_case(s(), sp(params.tau), sp(params.alpha), n);
            let p = bc_interp_polynomial(lambda, &bp)?;
            let rhs = substitute_each(&jack(lambda, n, &tau_r)?, |i| {
                LaurentPoly::var(n, i) + LaurentPoly::var_power(n, i, -1, Rational::one())
                    - LaurentPoly::constant(n, Rational::from_int(2))
            })?;
            (poly(crate::exactalg::laurent_limit(&p, LimitMode::AtOne)?), poly(rhs))
        }
        LimitId::InterpMacdonaldToShiftedJack => {
            params.require_positive_tau()?;
            let ap = ATypeParams::q_case(s(), sp(params.tau), n);
            let p = a_type_polynomial(ATypeFamily::InterpMacdonald, lambda, &ap)?;
            let rhs = substitute_each(&jack(lambda, n, &tau_r)?, |i| {
                LaurentPoly::var(n, i) - LaurentPoly::constant(n, Rational::one())
            })?;
            (poly(crate::exactalg::laurent_limit(&p, LimitMode::AtOne)?), poly(rhs))
        }
        LimitId::BcInterpJackLargeAlpha => {
            let bp = BCInterpParams::one_case(RatFunc::from_rational(&tau_r), s(), n);
            let shifted = bc_interp_polynomial(lambda, &bp)?
                .substitute(&(0..n).map(|i| LaurentPoly::var(n, i) + LaurentPoly::constant(n, s())).collect::<Vec<_>>())?;
            let scale = crate::exactalg::checked_pow(&(s() * RatFunc::from_int(2)), -w, "2α")?;
            let lhs = crate::exactalg::laurent_limit(&shifted.scale(&scale), LimitMode::AtInfinityScaled(0))?;
            let jp = ATypeParams::one_case(tau_r.clone(), n);
            (poly(lhs), poly(a_type_polynomial(ATypeFamily::InterpJack, lambda, &jp)?))
        }
        LimitId::KoornwinderLargeA1 => {
            let [_, _, a2, a3] = params.koornwinder.clone();
            let a4 = rat(3, 7);
            let rest = a2.clone() * a3.clone() * a4.clone();
            let a1 = s() * s() * RatFunc::from_rational(&(q.clone() / rest));
            let kp = KoornwinderParams::new(
                RatFunc::from_rational(q),
                RatFunc::from_rational(t),
                [a1.clone(), RatFunc::from_rational(&a2), RatFunc::from_rational(&a3), RatFunc::from_rational(&a4)],
                s(),
                n,
            )?;
            let p = koornwinder_polynomial(lambda, &kp)?;
            let lhs = scaled_coefficient_limit(&p, &a1, w, LimitMode::AtInfinityScaled(0))?;
            (poly(lhs), poly(macdonald(lambda, n, q, t)?))
        }
        LimitId::KoornwinderToJacobi | LimitId::KoornwinderEvaluationToJacobi => {
            params.require_positive_tau()?;
            let (alpha, beta) = (params.alpha, params.beta);
            if (alpha + beta + 1) % 2 != 0 {
                return Err(Error::SquareRoot(format!(
                    "a'_1 = q^{{(α+β+1)/2}} needs α + β odd, got α = {alpha}, β = {beta}"
                )));
            }
            let kp = KoornwinderParams::new(
                s(),
                sp(params.tau),
                [sp(alpha + 1), -sp(beta + 1), RatFunc::one(), -RatFunc::one()],
                sp((alpha + beta + 1) / 2),
                n,
            )?;
            let jp = JacobiParams::new(tau_r.clone(), Rational::from_int(alpha), Rational::from_int(beta), n);
            let sign = Rational::from_int(-4).powi(w).expect("nonzero base");
            if id == LimitId::KoornwinderToJacobi {
                let p = koornwinder_polynomial(lambda, &kp)?;
                let quarter = rat(1, 4);
                let rhs = substitute_each(&jacobi_polynomial(lambda, &jp)?, |i| {
                    (LaurentPoly::constant(n, Rational::from_int(2))
                        - LaurentPoly::var(n, i)
                        - LaurentPoly::var_power(n, i, -1, Rational::one()))
                    .scale(&quarter)
                })?;
                (poly(crate::exactalg::laurent_limit(&p, LimitMode::AtOne)?), poly(rhs.scale(&sign)))
            } else {
                let pt: Vec<RatFunc> = (1..=n).map(|i| sp(params.tau * (n - i) as i64 + alpha + 1)).collect();
                let v = koornwinder_value(lambda, &kp, &pt)?;
                let e = orthogonal_bc_evaluation(lambda, &OrthogonalBCParams::Jacobi(jp))?;
                (LimitSide::Scalar(rational_limit(&v, LimitMode::AtOne)?), LimitSide::Scalar(e * sign))
            }
        }
        LimitId::JacobiLargeAlpha => {
            let beta = RatFunc::from_int(params.beta);
            let jp = JacobiParams::new(RatFunc::from_rational(&tau_r), s(), beta, n);
            let p = jacobi_polynomial(lambda, &jp)?;
            let rhs = substitute_each(&jack(lambda, n, &tau_r)?, |i| {
                LaurentPoly::var(n, i) - LaurentPoly::constant(n, Rational::one())
            })?;
            (poly(crate::exactalg::laurent_limit(&p, LimitMode::AtInfinityScaled(0))?), poly(rhs))
        }
        LimitId::MacdonaldPrincipalToJack => {
            params.require_positive_tau()?;
            let p = a_type_polynomial(ATypeFamily::Macdonald, lambda, &ATypeParams::q_case(s(), sp(params.tau), n))?;
            let pt: Vec<RatFunc> = (1..=n).map(|i| sp(params.tau * (n - i) as i64)).collect();
            let ones = vec![Rational::one(); n];
            (
                LimitSide::Scalar(rational_limit(&p.evaluate(&pt)?, LimitMode::AtOne)?),
                LimitSide::Scalar(jack(lambda, n, &tau_r)?.evaluate(&ones)?),
            )
        }
    };
    Ok(LimitCheck { id, lhs, rhs })
}
