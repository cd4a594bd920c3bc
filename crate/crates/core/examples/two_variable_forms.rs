//! Closed two-variable forms checked against the general constructions.

use bcinterp::afamilies::{a_type_polynomial, ATypeFamily, ATypeParams};
use bcinterp::bcfamilies::{bc_interp_polynomial, BCInterpParams};
use bcinterp::combinatorics::Partition;
use bcinterp::exactalg::rat;
use bcinterp::twovar::{two_var_formula, SeriesForm, TwoVarFormula};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let (q, t, a) = (rat(1, 3), rat(2, 7), rat(5, 4));
    let mac = ATypeParams::q_case(q.clone(), t.clone(), 2);
    let bc = BCInterpParams::q_case(q.clone(), t.clone(), a.clone(), 2);
    for (m1, m2) in [(2, 0), (3, 1), (4, 2)] {
        let lambda = Partition::new(vec![m1, m2])?;
        let general = a_type_polynomial(ATypeFamily::Macdonald, &lambda, &mac)?;
        for form in [SeriesForm::Hypergeometric, SeriesForm::ExplicitSum, SeriesForm::Ultraspherical] {
            let f = two_var_formula(&TwoVarFormula::Macdonald { q: q.clone(), t: t.clone(), form }, m1, m2)?;
            println!("Macdonald ({m1},{m2}) {form:?}: matches general construction: {}", f == general);
        }
        let f = two_var_formula(&TwoVarFormula::BcInterpMacdonald { q: q.clone(), t: t.clone(), a: a.clone() }, m1, m2)?;
        println!("BC interpolation Macdonald ({m1},{m2}): {}", f == bc_interp_polynomial(&lambda, &bc)?);
    }
    Ok(())
}
