//! Every registered limit relation, checked exactly.

use bcinterp::combinatorics::Partition;
use bcinterp::limits::{check_limit, LimitId, LimitParams};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let params = LimitParams::default();
    let lambda = Partition::new(vec![2, 1])?;
    for id in LimitId::ALL {
        let c = check_limit(id, &lambda, 2, &params)?;
        println!("{:<40} λ = {lambda}: {}", id.name(), if c.holds() { "holds" } else { "FAILS" });
    }
    Ok(())
}
