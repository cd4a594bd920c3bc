//! Run one verification suite: `cargo run --release --example verify_suite -- duality 3 2`.

use std::time::Instant;

use bcinterp::verify::{run_suite, Bounds, Suite};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let suite = args.first().and_then(|s| Suite::from_name(s)).unwrap_or(Suite::Vanishing);
    let max_weight = args.get(1).and_then(|s| s.parse().ok()).unwrap_or(3);
    let n = args.get(2).and_then(|s| s.parse().ok()).unwrap_or(2);
    let start = Instant::now();
    match run_suite(suite, Bounds::new(max_weight, n)) {
        Ok(report) => println!(
            "{suite} (|λ| ≤ {max_weight}, n = {n}): {} checks, {:?}, {:.2?}",
            report.checks,
            report.status,
            start.elapsed()
        ),
        Err(e) => println!("{suite}: error {e}"),
    }
}
