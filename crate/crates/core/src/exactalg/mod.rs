//! Exact arithmetic: coefficient fields, Laurent polynomials, q-series,
//! symmetrized monomials, moment functionals and limits.

pub mod field;
pub mod laurent;
pub mod limit;
pub mod moment;
pub mod qseries;
pub mod ratfunc;
pub mod symmetric;
pub mod upoly;

pub use field::{checked_div, checked_pow, parse_rational, rat, Field, Rational};
pub use laurent::{constant_term_of_product, Exponent, LaurentPoly};
pub use limit::{laurent_limit, rational_limit, LimitMode};
pub use moment::{apply_moment, ConstantTermWeight, MomentFunctional, MomentFunctionalSpec};
pub use qseries::{
    factorial, hypergeometric_terminating, q_pochhammer, q_pochhammer_multi, shifted_factorial,
    shifted_factorial_multi, HyperKind,
};
pub use ratfunc::RatFunc;
pub use symmetric::{monomial_expansion, symmetrized_monomial};
pub use upoly::UPoly;

/// Coefficient of the zero exponent.
pub fn constant_term<F: Field>(p: &LaurentPoly<F>) -> F {
    p.constant_term()
}
