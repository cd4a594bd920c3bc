//! Interpolation Macdonald and Jack polynomials vanish at every node not containing `λ`.

use bcinterp::afamilies::{a_type_polynomial, interpolation_node_value, spectral_point, ATypeFamily, ATypeParams};
use bcinterp::combinatorics::{enumerate_partitions, Partition};
use bcinterp::exactalg::rat;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let lambda = Partition::new(vec![2, 1])?;
    for (family, params) in [
        (ATypeFamily::InterpMacdonald, ATypeParams::q_case(rat(1, 3), rat(2, 7), 2)),
        (ATypeFamily::InterpJack, ATypeParams::one_case(rat(3, 2), 2)),
    ] {
        let p = a_type_polynomial(family, &lambda, &params)?;
        println!("{family:?} λ = {lambda}: {p}");
        for mu in enumerate_partitions(4, 2) {
            let v = p.evaluate(&spectral_point(&mu, &params)?)?;
            let tag = if lambda.is_contained_in(&mu) { "contains λ" } else { "" };
            println!("  at node {mu}: {v}  {tag}");
        }
        println!("  closed-form value at own node: {}", interpolation_node_value(&lambda, &params)?);
    }
    Ok(())
}
