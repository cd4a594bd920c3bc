//! Exact coefficient fields and terminating q-series.

use bcinterp::exactalg::{hypergeometric_terminating, q_pochhammer, rat, Field, HyperKind, RatFunc};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let q = rat(1, 3);
    println!("(q; q)_3 at q = 1/3: {}", q_pochhammer(&q, &q, 3));

    // q-Chu-Vandermonde: 2φ1(q^-n, b; c; q, q) = (c/b; q)_n b^n / (c; q)_n.
    let (b, c, n) = (rat(2, 5), rat(3, 7), 4);
    let lhs = hypergeometric_terminating(&HyperKind::Basic { base: q.clone() }, std::slice::from_ref(&b), std::slice::from_ref(&c), &q, n)?;
    let rhs = q_pochhammer(&(c.clone() / b.clone()), &q, n) * b.powi(n as i64).unwrap() / q_pochhammer(&c, &q, n);
    println!("2φ1 = {lhs}, product side = {rhs}, equal: {}", lhs == rhs);

    // The same Pochhammer symbol over ℚ(s) reduces to lowest terms.
    let s = RatFunc::s();
    let ratio = q_pochhammer(&s, &s, 3) * q_pochhammer(&s, &s, 2).inv().unwrap();
    println!("(s; s)_3 / (s; s)_2 = {ratio}");
    Ok(())
}
