//! BC-Jacobi polynomials, their expansion in Jack polynomials and Beta-moment orthogonality.

use bcinterp::bcfamilies::{jacobi_expansion_coefficient, jacobi_polynomial, InterpolationRoute, JacobiParams};
use bcinterp::combinatorics::{enumerate_partitions, Partition};
use bcinterp::exactalg::{rat, MomentFunctional, MomentFunctionalSpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let jp = JacobiParams::new(rat(2, 1), rat(1, 3), rat(2, 5), 2);
    let lambda = Partition::new(vec![2, 1])?;
    println!("P_{lambda}(x; τ = 2; α = 1/3, β = 2/5) = {}", jacobi_polynomial(&lambda, &jp)?);
    println!("coefficients on Jack P_μ, by point evaluation and by tableau sum:");
    for mu in lambda.subpartitions() {
        let a = jacobi_expansion_coefficient(&lambda, &mu, &jp, InterpolationRoute::PointEvaluation)?;
        let b = jacobi_expansion_coefficient(&lambda, &mu, &jp, InterpolationRoute::TableauSum)?;
        println!("  μ = {mu}: {a}  {b}");
    }

    let spec = MomentFunctionalSpec::jacobi_beta(jp.alpha.clone(), jp.beta.clone(), &jp.tau)?;
    let beta = MomentFunctional::new(spec, 2);
    let shapes = enumerate_partitions(2, 2);
    let polys = shapes.iter().map(|l| jacobi_polynomial(l, &jp)).collect::<Result<Vec<_>, _>>()?;
    println!("Gram matrix under the Beta functional:");
    for (l, p) in shapes.iter().zip(&polys) {
        let row = polys.iter().map(|r| beta.apply(&(p * r)).map(|v| v.to_string())).collect::<Result<Vec<_>, _>>()?;
        println!("  {l}: {}", row.join("  "));
    }
    Ok(())
}
