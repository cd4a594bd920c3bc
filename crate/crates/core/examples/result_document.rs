//! Drive the command layer directly and print the JSON result document.

use bcinterp::cli::{run, CommandSpec, Subcommand};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut spec = CommandSpec::new(Subcommand::Compute);
    spec.family = Some("bc-interp-jack".into());
    spec.partition = vec![1];
    spec.n = Some(2);
    spec.params.insert("tau".into(), "2".into());
    spec.params.insert("alpha".into(), "3".into());
    let doc = run(&spec)?;
    println!("{}", doc.to_json());
    println!("exit code {}", doc.exit_code());
    Ok(())
}
