//! Macdonald polynomials at `t = q^2` are orthogonal under the constant-term pairing.

use bcinterp::afamilies::{a_type_polynomial, ATypeFamily, ATypeParams};
use bcinterp::combinatorics::enumerate_partitions;
use bcinterp::exactalg::{rat, ConstantTermWeight, MomentFunctional, MomentFunctionalSpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let (q, n) = (rat(1, 3), 2);
    let t = q.clone() * q.clone();
    let params = ATypeParams::q_case(q.clone(), t.clone(), n);
    let ct = MomentFunctional::new(MomentFunctionalSpec::ConstantTerm(ConstantTermWeight::macdonald(&q, &t)?), n);
    let shapes = enumerate_partitions(3, n);
    let polys = shapes
        .iter()
        .map(|l| a_type_polynomial(ATypeFamily::Macdonald, l, &params))
        .collect::<Result<Vec<_>, _>>()?;
    for (l, p) in shapes.iter().zip(&polys) {
        let row = polys
            .iter()
            .map(|r| ct.apply(&(p * &r.invert_vars())).map(|v| v.to_string()))
            .collect::<Result<Vec<_>, _>>()?;
        println!("{l}: {}", row.join("  "));
    }
    Ok(())
}
