//! BC interpolation polynomials: node values in two closed forms and column reduction.

use bcinterp::bcfamilies::{
    bc_interp_evaluation, bc_interp_polynomial, bc_interp_reduction, bc_spectral_point, BCInterpParams,
    EvaluationForm,
};
use bcinterp::combinatorics::Partition;
use bcinterp::exactalg::rat;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let lambda = Partition::new(vec![2, 1])?;
    for params in [
        BCInterpParams::q_case(rat(1, 3), rat(2, 7), rat(5, 4), 2),
        BCInterpParams::one_case(rat(3, 2), rat(1, 3), 2),
    ] {
        let p = bc_interp_polynomial(&lambda, &params)?;
        let invariant = p.is_hyperoctahedral_invariant() || p.is_sign_invariant();
        println!("{:?}: {} terms, invariant: {invariant}", params.mode, p.len());
        let direct = p.evaluate(&bc_spectral_point(&lambda, &params)?)?;
        let boxes = bc_interp_evaluation(&lambda, &params, EvaluationForm::BoxProduct)?;
        let factored = bc_interp_evaluation(&lambda, &params, EvaluationForm::Factored)?;
        println!("  own node: direct {direct}, box product {boxes}, factored {factored}");

        let r = bc_interp_reduction(&lambda, &params)?;
        let rebuilt = &r.prefactor * &bc_interp_polynomial(&r.reduced, &r.shifted)?;
        println!("  reduces to {} with shifted parameters; rebuilt equal: {}", r.reduced, rebuilt == p);
    }
    Ok(())
}
