//! Partitions, reverse tableaux and their weights.

use bcinterp::afamilies::{tableau_weight, ATypeMode};
use bcinterp::combinatorics::{enumerate_partitions, enumerate_reverse_tableaux, Partition};
use bcinterp::exactalg::rat;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let shapes = enumerate_partitions(4, 2);
    println!("partitions with |λ| ≤ 4 and at most 2 parts:");
    for l in &shapes {
        println!("  {l}  conjugate {}", l.conjugate());
    }

    let lambda = Partition::new(vec![2, 1])?;
    let mode = ATypeMode::QCase { q: rat(1, 3), t: rat(2, 7) };
    println!("reverse tableaux of shape {lambda} over 1..3 with weights at q = 1/3, t = 2/7:");
    for tab in enumerate_reverse_tableaux(&lambda, 3) {
        println!("  {:?}  ψ = {}", tab.rows(), tableau_weight(&tab, &mode)?);
    }
    Ok(())
}
