//! Macdonald and Jack polynomials from the tableau sum, with their principal values.

use bcinterp::afamilies::{a_type_evaluation, a_type_polynomial, spectral_point, ATypeFamily, ATypeParams};
use bcinterp::combinatorics::Partition;
use bcinterp::exactalg::{monomial_expansion, rat};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let lambda = Partition::new(vec![2, 1])?;
    let mac = ATypeParams::q_case(rat(1, 3), rat(2, 7), 3);
    let p = a_type_polynomial(ATypeFamily::Macdonald, &lambda, &mac)?;
    println!("P_{lambda}(x; 1/3, 2/7) in monomial symmetric functions:");
    for (mu, c) in monomial_expansion(&p, false)? {
        println!("  m_{mu}: {c}");
    }
    let at_delta = p.evaluate(&spectral_point(&Partition::empty(), &mac)?)?;
    println!("value at t^δ: {at_delta} (closed form {})", a_type_evaluation(ATypeFamily::Macdonald, &lambda, &mac)?);

    let jack = ATypeParams::one_case(rat(3, 2), 3);
    let p = a_type_polynomial(ATypeFamily::Jack, &lambda, &jack)?;
    println!("Jack P_{lambda}(x; τ = 3/2) = {p}");
    println!("value at 1^3: {}", a_type_evaluation(ATypeFamily::Jack, &lambda, &jack)?);
    Ok(())
}
