//! Koornwinder polynomials from the binomial formula, with evaluation and duality.

use bcinterp::bcfamilies::{
    koornwinder_binomial_terms, koornwinder_polynomial, orthogonal_bc_evaluation, KoornwinderParams,
    OrthogonalBCParams,
};
use bcinterp::combinatorics::Partition;
use bcinterp::exactalg::{rat, Field, Rational};

/// `c q^ν t^δ` for two variables.
fn node(nu: &Partition, q: &Rational, t: &Rational, c: &Rational) -> Vec<Rational> {
    vec![c.clone() * q.powi(nu.part(1) as i64).unwrap() * t.clone(), c.clone() * q.powi(nu.part(2) as i64).unwrap()]
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let (q, t) = (rat(1, 3), rat(2, 7));
    let (a1, d1, a2, a3) = (rat(3, 2), rat(2, 3), rat(2, 5), rat(-1, 4));
    // a'_1^2 q = a_1 a_2 a_3 a_4 fixes a_4.
    let a4 = q.clone() * d1.clone() * d1.clone() / (a1.clone() * a2.clone() * a3.clone());
    let kp = KoornwinderParams::new(q.clone(), t.clone(), [a1.clone(), a2, a3, a4], d1.clone(), 2)?;

    let lambda = Partition::new(vec![1, 1])?;
    println!("binomial terms of P_{lambda}:");
    for (mu, c) in koornwinder_binomial_terms(&lambda, &kp)? {
        println!("  μ = {mu}: {c}");
    }
    let p = koornwinder_polynomial(&lambda, &kp)?;
    println!("P_{lambda} = {p}");
    println!("value at t^δ a_1: {}", orthogonal_bc_evaluation(&lambda, &OrthogonalBCParams::Koornwinder(kp.clone()))?);

    let (lam, nu) = (Partition::new(vec![2])?, Partition::new(vec![1])?);
    let dual = kp.dual();
    let normalized = |p: &KoornwinderParams<Rational>, l: &Partition, at: &Partition, c: &Rational| {
        let f = koornwinder_polynomial(l, p)?;
        Ok::<_, bcinterp::error::Error>(f.evaluate(&node(at, &q, &t, c))? / f.evaluate(&node(&Partition::empty(), &q, &t, c))?)
    };
    let lhs = normalized(&kp, &lam, &nu, &a1)?;
    let rhs = normalized(&dual, &nu, &lam, &d1)?;
    println!("duality λ = {lam}, ν = {nu}: {lhs} = {rhs}: {}", lhs == rhs);
    Ok(())
}
