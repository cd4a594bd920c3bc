//! One symbolic parameter: coefficients in ℚ(s) and their limits.

use bcinterp::afamilies::{a_type_polynomial, ATypeFamily, ATypeParams};
use bcinterp::combinatorics::Partition;
use bcinterp::exactalg::{laurent_limit, rat, LimitMode, RatFunc};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let lambda = Partition::new(vec![2])?;
    let tau = 2;
    // q = s, t = s^τ; as s → 1 the Macdonald polynomial tends to the Jack polynomial.
    let params = ATypeParams::q_case(RatFunc::s(), RatFunc::s_pow(tau), 2);
    let p = a_type_polynomial(ATypeFamily::Macdonald, &lambda, &params)?;
    println!("P_{lambda}(x; s, s^{tau}) = {p}");
    let limit = laurent_limit(&p, LimitMode::AtOne)?;
    let jack = a_type_polynomial(ATypeFamily::Jack, &lambda, &ATypeParams::one_case(rat(tau, 1), 2))?;
    println!("limit s → 1: {limit}");
    println!("equals Jack P_{lambda}(x; τ = {tau}): {}", limit == jack);
    Ok(())
}
