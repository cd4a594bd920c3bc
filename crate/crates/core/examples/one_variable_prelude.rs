//! One-variable identities: q-binomial coefficients as interpolation ratios, Askey-Wilson and Jacobi series.

use bcinterp::bcfamilies::{koornwinder_polynomial, orthogonal_bc_evaluation, KoornwinderParams, OrthogonalBCParams};
use bcinterp::combinatorics::Partition;
use bcinterp::exactalg::rat;
use bcinterp::twovar::prelude;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let q = rat(1, 3);
    for n in 0..=5 {
        let direct = prelude::q_binomial_coefficients(n, &q)?;
        let ratio = prelude::q_binomial_coefficients_by_ratio(n, &q)?;
        println!("n = {n}: [n k]_q agree with interpolation ratios: {}", direct == ratio);
    }

    let (a1, d1, a2, a3) = (rat(3, 2), rat(2, 3), rat(2, 5), rat(-1, 4));
    let a4 = q.clone() * d1.clone() * d1.clone() / (a1.clone() * a2.clone() * a3.clone());
    let kp = KoornwinderParams::new(q.clone(), rat(2, 7), [a1, a2, a3, a4], d1, 1)?;
    let two = Partition::new(vec![2])?;
    let p = koornwinder_polynomial(&two, &kp)?;
    // The 4φ3 is normalized to 1 at x = a_1; the monic polynomial takes its closed-form value there.
    let e = orthogonal_bc_evaluation(&two, &OrthogonalBCParams::Koornwinder(kp.clone()))?;
    let aw = prelude::askey_wilson(2, &q, &kp.a)?.scale(&e);
    println!("one-variable Koornwinder P_2 = {p}");
    println!("equals the rescaled Askey-Wilson 4φ3: {}", aw == p);
    println!("Jacobi 2F1 of degree 3: {}", prelude::jacobi_one_var(3, &rat(1, 3), &rat(2, 5))?);
    Ok(())
}
